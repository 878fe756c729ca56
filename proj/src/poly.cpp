/*
   Copyright 2026 The lmrep authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "lmrep/poly.hpp"

#include <algorithm>
#include <sstream>

#include "lmrep/detail/expr.hpp"
#include "lmrep/matrix.hpp"

namespace lmrep {

// --- RPoly -------------------------------------------------------------------

void RPoly::trim() {
    while (!c.empty() && lmrep::is_zero(c.back())) c.pop_back();
}

RingElem RPoly::lead() const {
    if (c.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c.back();
}

RPoly RPoly::from_coeffs(const RingSpec& s, std::vector<RingElem> coeffs) {
    RPoly f{s, std::move(coeffs)};
    f.trim();
    return f;
}

RPoly RPoly::constant(const RingSpec& s, RingElem a) {
    return from_coeffs(s, {std::move(a)});
}

RPoly RPoly::x(const RingSpec& s) { return from_coeffs(s, {ring_zero(s), ring_one(s)}); }

RPoly operator+(const RPoly& a, const RPoly& b) {
    std::vector<RingElem> c(std::max(a.c.size(), b.c.size()), ring_zero(a.spec));
    for (size_t i = 0; i < a.c.size(); ++i) c[i] = c[i] + a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) c[i] = c[i] + b.c[i];
    return RPoly::from_coeffs(a.spec, std::move(c));
}

RPoly operator-(const RPoly& a, const RPoly& b) {
    std::vector<RingElem> c(std::max(a.c.size(), b.c.size()), ring_zero(a.spec));
    for (size_t i = 0; i < a.c.size(); ++i) c[i] = c[i] + a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) c[i] = c[i] - b.c[i];
    return RPoly::from_coeffs(a.spec, std::move(c));
}

RPoly operator*(const RPoly& a, const RPoly& b) {
    if (a.is_zero() || b.is_zero()) return RPoly::zero(a.spec);
    std::vector<RingElem> c(a.c.size() + b.c.size() - 1, ring_zero(a.spec));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) c[i + j] = c[i + j] + a.c[i] * b.c[j];
    return RPoly::from_coeffs(a.spec, std::move(c));
}

RPoly operator-(const RPoly& a) {
    RPoly r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

RPoly operator*(const RingElem& s, const RPoly& a) {
    RPoly r = a;
    for (auto& x : r.c) x = s * x;
    r.trim();
    return r;
}

RingElem poly_eval(const RPoly& f, const RingElem& z) {
    RingElem acc = ring_zero(f.spec);
    for (size_t i = f.c.size(); i-- > 0;) acc = acc * z + f.c[i];
    return acc;
}

RPoly derivative(const RPoly& f) {
    if (f.degree() < 1) return RPoly::zero(f.spec);
    std::vector<RingElem> c;
    c.reserve(f.c.size() - 1);
    for (size_t i = 1; i < f.c.size(); ++i)
        c.push_back(ring_from_int(f.spec, static_cast<long>(i)) * f.c[i]);
    return RPoly::from_coeffs(f.spec, std::move(c));
}

RPolyDivMod poly_divmod(const RPoly& a, const RPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (!is_unit(b.lead()))
        throw std::domain_error("polynomial division needs a unit leading coefficient");
    RingElem li = unit_inv(b.lead());
    RPoly rem = a;
    if (a.degree() < b.degree()) return {RPoly::zero(a.spec), rem};
    std::vector<RingElem> quot(a.degree() - b.degree() + 1, ring_zero(a.spec));
    for (int k = static_cast<int>(quot.size()); k-- > 0;) {
        RingElem top = rem.coeff(k + b.degree());
        if (lmrep::is_zero(top)) continue;
        RingElem q = li * top;
        quot[k] = q;
        for (int i = 0; i <= b.degree(); ++i) {
            RingElem updated = rem.coeff(k + i) - q * b.c[i];
            if (k + i >= static_cast<int>(rem.c.size()))
                rem.c.resize(k + i + 1, ring_zero(a.spec));
            rem.c[k + i] = updated;
        }
        rem.trim();
    }
    return {RPoly::from_coeffs(a.spec, std::move(quot)), rem};
}

RPoly poly_divexact(const RPoly& a, const RPoly& b) {
    // long division with exact coefficient division; valid whenever b | a
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.is_zero()) return a;
    if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
    RPoly rem = a;
    std::vector<RingElem> quot(a.degree() - b.degree() + 1, ring_zero(a.spec));
    for (int k = static_cast<int>(quot.size()); k-- > 0;) {
        RingElem top = rem.coeff(k + b.degree());
        if (lmrep::is_zero(top)) continue;
        RingElem q = divexact(top, b.lead());
        quot[k] = q;
        for (int i = 0; i <= b.degree(); ++i) {
            if (k + i >= static_cast<int>(rem.c.size()))
                rem.c.resize(k + i + 1, ring_zero(a.spec));
            rem.c[k + i] = rem.c[k + i] - q * b.c[i];
        }
        rem.trim();
    }
    if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
    return RPoly::from_coeffs(a.spec, std::move(quot));
}

RingElem content(const RPoly& g) {
    if (g.is_zero()) throw std::domain_error("content of zero polynomial");
    RingElem acc = g.c[0];
    for (size_t i = 1; i < g.c.size(); ++i) {
        if (is_zero(acc) && is_zero(g.c[i])) continue;
        acc = gcd(acc, g.c[i]);
    }
    return normalize_unit(acc).normal;
}

RPoly primitive_part(const RPoly& g) {
    RingElem ct = content(g);
    std::vector<RingElem> c;
    c.reserve(g.c.size());
    for (const auto& x : g.c) c.push_back(divexact(x, ct));
    return RPoly::from_coeffs(g.spec, std::move(c));
}

RingElem resultant(const RPoly& f, const RPoly& g, int deg_g) {
    int m = f.degree();
    if (m < 1) throw std::domain_error("resultant needs deg f >= 1");
    if (g.degree() > deg_g) throw std::domain_error("formal degree below actual degree");
    if (deg_g == 0) return elem_pow(g.coeff(0), static_cast<unsigned>(m));
    int n = deg_g;
    RMat s = RMat::zeros(f.spec, m + n, m + n);
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) s.at(r, r + i) = f.coeff(m - i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) s.at(n + r, r + i) = g.coeff(n - i);
    return det_bareiss(s);
}

RingElem discriminant(const RPoly& f) {
    if (!f.is_monic() || f.degree() < 2)
        throw std::domain_error("discriminant needs a monic polynomial of degree >= 2");
    int n = f.degree();
    RPoly fp = derivative(f);
    if (fp.is_zero()) return ring_zero(f.spec);
    RingElem res = resultant(f, fp, n - 1);
    bool negate = (static_cast<long>(n) * (n - 1) / 2) % 2 == 1;
    return negate ? -res : res;
}

// --- primes of A and root finding ---------------------------------------------

PrimeOfA PrimeOfA::of(RingElem candidate) {
    RingElem norm = normalize_unit(candidate).normal;
    if (!is_prime_elem(norm)) throw std::domain_error("not a prime element of A");
    return PrimeOfA{std::move(norm)};
}

unsigned long residue_field_size(const PrimeOfA& p) {
    constexpr unsigned long kLimit = 1ul << 20;
    if (p.pi.is_int_kind()) {
        if (p.pi.z() > kLimit) throw std::domain_error("exhaustive search infeasible");
        return p.pi.z().get_ui();
    }
    unsigned long size = 1;
    for (int i = 0; i < p.pi.fp().degree(); ++i) {
        size *= p.pi.fp().p;
        if (size > kLimit) throw std::domain_error("exhaustive search infeasible");
    }
    return size;
}

std::vector<RingElem> residues_mod(const PrimeOfA& p) {
    unsigned long size = residue_field_size(p);
    RingSpec spec = p.pi.is_int_kind() ? RingSpec::integers() : RingSpec::poly_mod_p(p.pi.fp().p);
    std::vector<RingElem> out;
    out.reserve(size);
    if (spec.kind == RingKind::Integers) {
        for (unsigned long v = 0; v < size; ++v) out.push_back(RingElem(mpz_class(v)));
    } else {
        for (unsigned long k = 0; k < size; ++k) out.push_back(nth_element(spec, k));
    }
    return out;
}

namespace {

// one synthetic-division step of g by (x - z), with coefficients kept reduced
// modulo pi; remainder is g(z) mod pi and is discarded by the caller
RPoly synthetic_quotient_mod(const RPoly& g, const RingElem& z, const RingElem& pi) {
    std::vector<RingElem> q(g.degree(), ring_zero(g.spec));
    RingElem carry = ring_zero(g.spec);
    for (int i = g.degree(); i-- > 0;) {
        carry = euclid_divmod(g.coeff(i + 1) + carry * z, pi).rem;
        q[i] = carry;
    }
    return RPoly::from_coeffs(g.spec, std::move(q));
}

RPoly reduce_mod(const RPoly& f, const RingElem& pi) {
    std::vector<RingElem> c;
    c.reserve(f.c.size());
    for (const auto& x : f.c) c.push_back(euclid_divmod(x, pi).rem);
    return RPoly::from_coeffs(f.spec, std::move(c));
}

}   // namespace

std::vector<std::pair<RingElem, int>> roots_mod_prime(const RPoly& f, const PrimeOfA& p) {
    RPoly fbar = reduce_mod(f, p.pi);
    if (fbar.is_zero()) throw std::domain_error("polynomial vanishes modulo the prime");
    std::vector<std::pair<RingElem, int>> out;
    for (const RingElem& z : residues_mod(p)) {
        if (!is_zero(euclid_divmod(poly_eval(fbar, z), p.pi).rem)) continue;
        int mult = 0;
        RPoly g = fbar;
        while (!g.is_zero() && is_zero(euclid_divmod(poly_eval(g, z), p.pi).rem)) {
            g = synthetic_quotient_mod(g, z, p.pi);
            ++mult;
        }
        out.emplace_back(z, mult);
    }
    return out;
}

bool irreducible_low_degree(const RPoly& f) {
    if (!f.is_monic()) throw std::domain_error("irreducibility test needs a monic polynomial");
    if (f.degree() >= 4) throw std::domain_error("irreducibility must be asserted by caller");
    if (f.degree() < 2) throw std::domain_error("irreducibility test needs degree >= 2");
    // monic over an integrally closed A: any root in K already lies in A and
    // divides the constant term
    RingElem k0 = f.coeff(0);
    if (is_zero(k0)) return false;
    std::vector<std::pair<RingElem, int>> fac = factor_elem(k0);
    std::vector<RingElem> divisors = {ring_one(f.spec)};
    for (const auto& [prime, mult] : fac) {
        std::vector<RingElem> next;
        RingElem pw = ring_one(f.spec);
        for (int e = 0; e <= mult; ++e) {
            for (const auto& d : divisors) next.push_back(d * pw);
            pw = pw * prime;
        }
        divisors = std::move(next);
    }
    for (const auto& d : divisors)
        for (const auto& u : ring_units(f.spec))
            if (is_zero(poly_eval(f, u * d))) return false;
    return true;
}

std::string to_string(const RPoly& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    bool int_kind = f.spec.kind == RingKind::Integers;
    for (int i = f.degree(); i >= 0; --i) {
        RingElem ci = f.coeff(i);
        if (is_zero(ci)) continue;
        std::string cs = to_string(ci, f.spec);
        bool negative = int_kind && ci.z() < 0;
        if (first) {
            first = false;
        } else {
            os << (negative ? "-" : "+");
            if (negative) cs = to_string(RingElem(mpz_class(-ci.z())), f.spec);
        }
        if (i == 0) {
            bool needs_paren = cs.find_first_of("+-", 1) != std::string::npos && !int_kind;
            os << (needs_paren ? "(" + cs + ")" : cs);
            continue;
        }
        if (!is_one(ci)) {
            bool needs_paren = !int_kind && (cs.find_first_of("+-") != std::string::npos ||
                                             cs.find(f.spec.var) != std::string::npos);
            if (negative && cs == "1") {
                // sign already emitted
            } else {
                os << (needs_paren ? "(" + cs + ")" : cs) << "*";
            }
        }
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

RPoly parse_poly(const RingSpec& spec, const std::string& var, const std::string& text) {
    return RPoly::from_coeffs(spec, detail::parse_expr_poly(spec, var, text));
}

// --- KPoly ---------------------------------------------------------------------

void KPoly::trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

KPoly KPoly::from(const RPoly& f) {
    std::vector<Frac> c;
    c.reserve(f.c.size());
    for (const auto& x : f.c) c.push_back(frac_of(x));
    return {f.spec, std::move(c)};
}

KPoly KPoly::from_coeffs(const RingSpec& s, std::vector<Frac> coeffs) {
    KPoly f{s, std::move(coeffs)};
    f.trim();
    return f;
}

KPoly operator+(const KPoly& a, const KPoly& b) {
    std::vector<Frac> c(std::max(a.c.size(), b.c.size()), frac_of(ring_zero(a.spec)));
    for (size_t i = 0; i < a.c.size(); ++i) c[i] = c[i] + a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) c[i] = c[i] + b.c[i];
    return KPoly::from_coeffs(a.spec, std::move(c));
}

KPoly operator-(const KPoly& a, const KPoly& b) {
    std::vector<Frac> c(std::max(a.c.size(), b.c.size()), frac_of(ring_zero(a.spec)));
    for (size_t i = 0; i < a.c.size(); ++i) c[i] = c[i] + a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) c[i] = c[i] - b.c[i];
    return KPoly::from_coeffs(a.spec, std::move(c));
}

KPoly operator*(const KPoly& a, const KPoly& b) {
    if (a.is_zero() || b.is_zero()) return KPoly::zero(a.spec);
    std::vector<Frac> c(a.c.size() + b.c.size() - 1, frac_of(ring_zero(a.spec)));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) c[i + j] = c[i + j] + a.c[i] * b.c[j];
    return KPoly::from_coeffs(a.spec, std::move(c));
}

KPoly operator*(const Frac& s, const KPoly& a) {
    std::vector<Frac> c;
    c.reserve(a.c.size());
    for (const auto& x : a.c) c.push_back(s * x);
    return KPoly::from_coeffs(a.spec, std::move(c));
}

KPolyDivMod kpoly_divmod(const KPoly& a, const KPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Frac li = frac_inv(b.c.back());
    KPoly rem = a;
    if (a.degree() < b.degree()) return {KPoly::zero(a.spec), rem};
    std::vector<Frac> quot(a.degree() - b.degree() + 1, frac_of(ring_zero(a.spec)));
    for (int k = static_cast<int>(quot.size()); k-- > 0;) {
        Frac top = rem.coeff(k + b.degree());
        if (top.is_zero()) continue;
        Frac q = li * top;
        quot[k] = q;
        for (int i = 0; i <= b.degree(); ++i) {
            if (k + i >= static_cast<int>(rem.c.size()))
                rem.c.resize(k + i + 1, frac_of(ring_zero(a.spec)));
            rem.c[k + i] = rem.c[k + i] - q * b.c[i];
        }
        rem.trim();
    }
    return {KPoly::from_coeffs(a.spec, std::move(quot)), rem};
}

KPolyGcdExt kpoly_gcd_ext(const KPoly& a, const KPoly& b) {
    KPoly r0 = a, r1 = b;
    KPoly one = KPoly::from_coeffs(a.spec, {frac_of(ring_one(a.spec))});
    KPoly s0 = one, s1 = KPoly::zero(a.spec);
    KPoly t0 = KPoly::zero(a.spec), t1 = one;
    while (!r1.is_zero()) {
        auto [q, r] = kpoly_divmod(r0, r1);
        KPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Frac li = frac_inv(r0.c.back());
    return {li * r0, li * s0, li * t0};
}

}   // namespace lmrep

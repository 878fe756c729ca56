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

#include "lmrep/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "lmrep/detail/expr.hpp"

namespace lmrep {

// --- RingSpec ----------------------------------------------------------------

RingSpec RingSpec::integers() {
    RingSpec s;
    s.kind = RingKind::Integers;
    return s;
}

RingSpec RingSpec::poly_mod_p(std::uint32_t p, std::string var) {
    if (p < 2 || p >= (1u << 16))
        throw std::domain_error("characteristic must be a prime < 2^16");
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::domain_error("characteristic must be prime");
    RingSpec s;
    s.kind = RingKind::PolyOverPrimeField;
    s.p = p;
    s.var = std::move(var);
    return s;
}

RingSpec RingSpec::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s == "Z" || s == "ZZ") return integers();
    // GF(p)[v]
    if (s.rfind("GF(", 0) == 0) {
        auto close = s.find(')');
        if (close != std::string::npos && close + 2 < s.size() && s[close + 1] == '[' &&
            s.back() == ']') {
            std::string num = s.substr(3, close - 3);
            std::string var = s.substr(close + 2, s.size() - close - 3);
            if (!num.empty() && !var.empty() &&
                std::all_of(num.begin(), num.end(),
                            [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
                unsigned long p = std::stoul(num);
                try {
                    return poly_mod_p(static_cast<std::uint32_t>(p), var);
                } catch (const std::domain_error& e) {
                    throw parse_error(e.what());
                }
            }
        }
    }
    throw parse_error("unrecognized ring: \"" + text + "\" (expected Z or GF(p)[t])");
}

std::string RingSpec::to_string() const {
    if (kind == RingKind::Integers) return "Z";
    return "GF(" + std::to_string(p) + ")[" + var + "]";
}

// --- F_p scalar helpers -------------------------------------------------------

namespace {

inline std::uint32_t addm(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
}
inline std::uint32_t subm(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return a >= b ? a - b : a + p - b;
}
inline std::uint32_t mulm(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}
std::uint32_t invm(std::uint32_t a, std::uint32_t p) {
    // extended Euclid on machine words
    std::int64_t t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw std::domain_error("not invertible mod p");
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

FpPoly fp_make(std::uint32_t p, std::vector<std::uint32_t> c) {
    FpPoly f;
    f.p = p;
    f.c = std::move(c);
    f.trim();
    return f;
}

void check_same_field(const FpPoly& a, const FpPoly& b) {
    if (a.p != b.p) throw std::logic_error("mixed characteristics");
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b) {
    check_same_field(a, b);
    std::vector<std::uint32_t> c(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        std::uint32_t x = i < a.c.size() ? a.c[i] : 0;
        std::uint32_t y = i < b.c.size() ? b.c[i] : 0;
        c[i] = addm(x, y, a.p);
    }
    return fp_make(a.p, std::move(c));
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b) {
    check_same_field(a, b);
    std::vector<std::uint32_t> c(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        std::uint32_t x = i < a.c.size() ? a.c[i] : 0;
        std::uint32_t y = i < b.c.size() ? b.c[i] : 0;
        c[i] = subm(x, y, a.p);
    }
    return fp_make(a.p, std::move(c));
}

FpPoly fp_neg(const FpPoly& a) {
    FpPoly r = a;
    for (auto& x : r.c)
        if (x) x = a.p - x;
    return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b) {
    check_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return fp_make(a.p, {});
    std::vector<std::uint32_t> c(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i]) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            c[i + j] = static_cast<std::uint32_t>(
                (c[i + j] + static_cast<std::uint64_t>(a.c[i]) * b.c[j]) % a.p);
    }
    return fp_make(a.p, std::move(c));
}

// quotient and canonical (degree-reduced) remainder
std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b) {
    check_same_field(a, b);
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.c.size() < b.c.size()) return {fp_make(a.p, {}), a};
    std::vector<std::uint32_t> rem = a.c;
    std::vector<std::uint32_t> quot(a.c.size() - b.c.size() + 1, 0);
    std::uint32_t lead_inv = invm(b.c.back(), a.p);
    for (size_t k = quot.size(); k-- > 0;) {
        std::uint32_t top = rem[k + b.c.size() - 1];
        if (!top) continue;
        std::uint32_t q = mulm(top, lead_inv, a.p);
        quot[k] = q;
        for (size_t i = 0; i < b.c.size(); ++i)
            rem[k + i] = subm(rem[k + i], mulm(q, b.c[i], a.p), a.p);
    }
    return {fp_make(a.p, std::move(quot)), fp_make(a.p, std::move(rem))};
}

}   // namespace

void FpPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

// --- RingElem arithmetic ------------------------------------------------------

namespace {
void check_same_kind(const RingElem& a, const RingElem& b) {
    if (a.is_int_kind() != b.is_int_kind()) throw std::logic_error("mixed ring kinds");
}
}   // namespace

bool RingElem::operator==(const RingElem& o) const {
    if (is_int_kind() != o.is_int_kind()) return false;
    if (is_int_kind()) return z() == o.z();
    return fp().p == o.fp().p && fp().c == o.fp().c;
}

RingElem operator+(const RingElem& a, const RingElem& b) {
    check_same_kind(a, b);
    if (a.is_int_kind()) return RingElem(mpz_class(a.z() + b.z()));
    return RingElem(fp_add(a.fp(), b.fp()));
}

RingElem operator-(const RingElem& a, const RingElem& b) {
    check_same_kind(a, b);
    if (a.is_int_kind()) return RingElem(mpz_class(a.z() - b.z()));
    return RingElem(fp_sub(a.fp(), b.fp()));
}

RingElem operator*(const RingElem& a, const RingElem& b) {
    check_same_kind(a, b);
    if (a.is_int_kind()) return RingElem(mpz_class(a.z() * b.z()));
    return RingElem(fp_mul(a.fp(), b.fp()));
}

RingElem operator-(const RingElem& a) {
    if (a.is_int_kind()) return RingElem(mpz_class(-a.z()));
    return RingElem(fp_neg(a.fp()));
}

bool is_zero(const RingElem& a) {
    return a.is_int_kind() ? a.z() == 0 : a.fp().is_zero();
}

bool is_one(const RingElem& a) {
    return a.is_int_kind() ? a.z() == 1 : (a.fp().degree() == 0 && a.fp().c[0] == 1);
}

bool is_unit(const RingElem& a) {
    if (a.is_int_kind()) return a.z() == 1 || a.z() == -1;
    return a.fp().degree() == 0;
}

int cmp(const RingElem& a, const RingElem& b) {
    check_same_kind(a, b);
    if (a.is_int_kind()) {
        mpz_class aa = abs(a.z()), bb = abs(b.z());
        int c = ::cmp(aa, bb);
        if (c) return c;
        return ::cmp(a.z(), b.z());
    }
    const FpPoly &x = a.fp(), &y = b.fp();
    if (x.degree() != y.degree()) return x.degree() < y.degree() ? -1 : 1;
    for (size_t i = x.c.size(); i-- > 0;)
        if (x.c[i] != y.c[i]) return x.c[i] < y.c[i] ? -1 : 1;
    return 0;
}

DivModResult euclid_divmod(const RingElem& a, const RingElem& b) {
    check_same_kind(a, b);
    if (is_zero(b)) throw std::domain_error("euclidean division by zero");
    if (a.is_int_kind()) {
        mpz_class q, r;
        if (b.z() > 0)
            mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.z().get_mpz_t(), b.z().get_mpz_t());
        else
            mpz_cdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.z().get_mpz_t(), b.z().get_mpz_t());
        return {RingElem(std::move(q)), RingElem(std::move(r))};
    }
    auto [q, r] = fp_divmod(a.fp(), b.fp());
    return {RingElem(std::move(q)), RingElem(std::move(r))};
}

RingElem divexact(const RingElem& a, const RingElem& b) {
    auto [q, r] = euclid_divmod(a, b);
    if (!is_zero(r)) throw std::domain_error("inexact division");
    return q;
}

bool divides(const RingElem& b, const RingElem& a) {
    if (is_zero(b)) return is_zero(a);
    return is_zero(euclid_divmod(a, b).rem);
}

NormalizeResult normalize_unit(const RingElem& a) {
    if (a.is_int_kind()) {
        if (a.z() < 0) return {RingElem(mpz_class(-1)), RingElem(mpz_class(-a.z()))};
        return {RingElem(mpz_class(1)), a};
    }
    const FpPoly& f = a.fp();
    if (f.is_zero())
        return {RingElem(fp_make(f.p, {1})), a};
    std::uint32_t lead = f.c.back();
    if (lead == 1) return {RingElem(fp_make(f.p, {1})), a};
    std::uint32_t li = invm(lead, f.p);
    FpPoly monic = f;
    for (auto& x : monic.c) x = mulm(x, li, f.p);
    return {RingElem(fp_make(f.p, {lead})), RingElem(std::move(monic))};
}

RingElem unit_inv(const RingElem& u) {
    if (u.is_int_kind()) {
        if (u.z() != 1 && u.z() != -1) throw std::domain_error("not a unit");
        return u;
    }
    if (u.fp().degree() != 0) throw std::domain_error("not a unit");
    return RingElem(fp_make(u.fp().p, {invm(u.fp().c[0], u.fp().p)}));
}

GcdExtResult gcd_ext(const RingElem& a, const RingElem& b) {
    check_same_kind(a, b);
    if (is_zero(a) && is_zero(b)) throw std::domain_error("gcd of zeros");
    if (a.is_int_kind()) {
        mpz_class g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.z().get_mpz_t(),
                   b.z().get_mpz_t());
        return {RingElem(std::move(g)), RingElem(std::move(s)), RingElem(std::move(t))};
    }
    // polynomial extended Euclid, then scale so g is monic
    RingElem r0 = a, r1 = b;
    RingElem s0 = ring_one(RingSpec::poly_mod_p(a.fp().p)), s1 = ring_zero(RingSpec::poly_mod_p(a.fp().p));
    RingElem t0 = s1, t1 = s0;
    while (!is_zero(r1)) {
        auto [q, r] = euclid_divmod(r0, r1);
        RingElem s2 = s0 - q * s1, t2 = t0 - q * t1;
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    auto norm = normalize_unit(r0);
    RingElem ui = unit_inv(norm.unit);
    return {norm.normal, ui * s0, ui * t0};
}

RingElem gcd(const RingElem& a, const RingElem& b) {
    if (is_zero(a) && is_zero(b)) return a;
    return gcd_ext(a, b).g;
}

RingElem lcm(const RingElem& a, const RingElem& b) {
    if (is_zero(a) || is_zero(b)) return a.is_int_kind() ? RingElem(mpz_class(0)) : a;
    return normalize_unit(divexact(a * b, gcd(a, b))).normal;
}

RingElem crt(const std::vector<RingElem>& residues, const std::vector<RingElem>& moduli) {
    if (residues.size() != moduli.size() || residues.empty())
        throw std::domain_error("crt: mismatched residue/modulus lists");
    for (const auto& m : moduli)
        if (is_zero(m)) throw std::domain_error("crt: zero modulus");
    RingElem x = euclid_divmod(residues[0], moduli[0]).rem;
    RingElem m = moduli[0];
    for (size_t i = 1; i < residues.size(); ++i) {
        auto e = gcd_ext(m, moduli[i]);
        if (!is_unit(e.g)) throw std::domain_error("crt: moduli not coprime");
        // x_new = x + m * (s/g) * (r_i - x) mod m*m_i
        RingElem inv = unit_inv(e.g) * e.s;   // inverse of m modulo moduli[i]
        RingElem delta = euclid_divmod((residues[i] - x) * inv, moduli[i]).rem;
        x = x + m * delta;
        m = m * moduli[i];
        x = euclid_divmod(x, m).rem;
    }
    return x;
}

RingElem elem_pow(const RingElem& a, unsigned e) {
    RingElem r = a.is_int_kind() ? RingElem(mpz_class(1)) : RingElem(fp_make(a.fp().p, {1}));
    RingElem base = a;
    while (e) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

// --- primality and factorization -----------------------------------------------

namespace {

// enumerate monic polynomials of degree d over F_p in lexicographic order
std::vector<FpPoly> monic_of_degree(std::uint32_t p, int d) {
    double count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    if (count > (1 << 20)) throw std::domain_error("exhaustive search infeasible");
    std::vector<FpPoly> out;
    std::vector<std::uint32_t> digits(d, 0);
    while (true) {
        std::vector<std::uint32_t> c = digits;
        c.push_back(1);
        out.push_back(fp_make(p, std::move(c)));
        int i = 0;
        for (; i < d; ++i) {
            if (++digits[i] < p) break;
            digits[i] = 0;
        }
        if (i == d) break;
    }
    return out;
}

bool fp_is_irreducible(const FpPoly& f) {
    int d = f.degree();
    if (d <= 0) return false;
    if (d == 1) return true;
    for (int k = 1; 2 * k <= d; ++k)
        for (const FpPoly& g : monic_of_degree(f.p, k))
            if (fp_divmod(f, g).second.is_zero()) return false;
    return true;
}

}   // namespace

bool is_prime_elem(const RingElem& a) {
    if (a.is_int_kind()) {
        mpz_class n = abs(a.z());
        if (n < 2) return false;
        return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
    }
    return fp_is_irreducible(a.fp());
}

std::vector<std::pair<RingElem, int>> factor_elem(const RingElem& a) {
    if (is_zero(a)) throw std::domain_error("factor of zero");
    std::vector<std::pair<RingElem, int>> out;
    if (a.is_int_kind()) {
        mpz_class n = abs(a.z());
        if (n == 1) return out;
        auto strip = [&](const mpz_class& d) {
            int e = 0;
            while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
                n /= d;
                ++e;
            }
            if (e) out.emplace_back(RingElem(d), e);
        };
        strip(2);
        mpz_class d = 3;
        while (d * d <= n) {
            strip(d);
            d += 2;
            if (d > (1 << 26)) {
                if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) break;
                throw std::domain_error("factorization exceeds trial-division budget");
            }
        }
        if (n > 1) out.emplace_back(RingElem(n), 1);
        return out;
    }
    FpPoly f = normalize_unit(a).normal.fp();
    while (f.degree() >= 1) {
        FpPoly divisor = f;   // falls through when f itself is irreducible
        bool found = false;
        for (int k = 1; 2 * k <= f.degree() && !found; ++k)
            for (const FpPoly& g : monic_of_degree(f.p, k))
                if (fp_divmod(f, g).second.is_zero()) {
                    divisor = g;
                    found = true;
                    break;
                }
        int e = 0;
        while (true) {
            auto [q, r] = fp_divmod(f, divisor);
            if (!r.is_zero()) break;
            f = q;
            ++e;
        }
        out.emplace_back(RingElem(divisor), e);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return cmp(x.first, y.first) < 0; });
    return out;
}

// --- spec-bound constructors and text IO ----------------------------------------

RingElem ring_zero(const RingSpec& spec) {
    if (spec.kind == RingKind::Integers) return RingElem(mpz_class(0));
    return RingElem(fp_make(spec.p, {}));
}

RingElem ring_one(const RingSpec& spec) {
    if (spec.kind == RingKind::Integers) return RingElem(mpz_class(1));
    return RingElem(fp_make(spec.p, {1}));
}

RingElem ring_from_int(const RingSpec& spec, long v) {
    if (spec.kind == RingKind::Integers) return RingElem(mpz_class(v));
    long m = v % static_cast<long>(spec.p);
    if (m < 0) m += spec.p;
    return RingElem(fp_make(spec.p, {static_cast<std::uint32_t>(m)}));
}

RingElem nth_element(const RingSpec& spec, unsigned long k) {
    if (spec.kind == RingKind::Integers) {
        if (k == 0) return RingElem(mpz_class(0));
        long v = static_cast<long>((k + 1) / 2);
        return RingElem(mpz_class(k % 2 == 1 ? v : -v));
    }
    std::vector<std::uint32_t> digits;
    while (k) {
        digits.push_back(static_cast<std::uint32_t>(k % spec.p));
        k /= spec.p;
    }
    return RingElem(fp_make(spec.p, std::move(digits)));
}

std::vector<RingElem> ring_units(const RingSpec& spec) {
    std::vector<RingElem> out;
    if (spec.kind == RingKind::Integers) {
        out.push_back(RingElem(mpz_class(1)));
        out.push_back(RingElem(mpz_class(-1)));
    } else {
        for (std::uint32_t c = 1; c < spec.p; ++c) out.push_back(RingElem(fp_make(spec.p, {c})));
    }
    return out;
}

std::string to_string(const RingElem& a, const RingSpec& spec) {
    if (a.is_int_kind()) return a.z().get_str();
    const FpPoly& f = a.fp();
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = f.c.size(); i-- > 0;) {
        if (!f.c[i]) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << f.c[i];
        } else {
            if (f.c[i] != 1) os << f.c[i] << "*";
            os << spec.var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

RingElem parse_elem(const RingSpec& spec, const std::string& text) {
    auto coeffs = detail::parse_expr_poly(spec, "", text);
    return coeffs.at(0);
}

// --- expression parser (shared with the polynomial module) -----------------------

namespace detail {

namespace {

struct Token {
    enum Kind { Num, Ident, Plus, Minus, Star, Caret, LParen, RParen, End } kind;
    std::string text;
};

std::vector<Token> tokenize(const std::string& raw) {
    std::string s;
    s.reserve(raw.size());
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char ch = s[i];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Num, s.substr(i, j - i)});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            out.push_back({Token::Ident, s.substr(i, j - i)});
            i = j;
            continue;
        }
        switch (ch) {
            case '+': out.push_back({Token::Plus, "+"}); break;
            case '-': out.push_back({Token::Minus, "-"}); break;
            case '*': out.push_back({Token::Star, "*"}); break;
            case '^': out.push_back({Token::Caret, "^"}); break;
            case '(': out.push_back({Token::LParen, "("}); break;
            case ')': out.push_back({Token::RParen, ")"}); break;
            default: throw parse_error(std::string("unexpected character '") + ch + "'");
        }
        ++i;
    }
    out.push_back({Token::End, ""});
    return out;
}

// dense polynomial in the main variable, coefficients in A
using PolyVec = std::vector<RingElem>;

struct Parser {
    const RingSpec& spec;
    const std::string& mv;
    std::vector<Token> toks;
    size_t pos = 0;

    const Token& peek() const { return toks[pos]; }
    Token next() { return toks[pos++]; }

    PolyVec constant(RingElem c) { return {std::move(c)}; }

    PolyVec padd(const PolyVec& a, const PolyVec& b) {
        PolyVec r(std::max(a.size(), b.size()), ring_zero(spec));
        for (size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
        for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
        return r;
    }
    PolyVec psub(const PolyVec& a, const PolyVec& b) {
        PolyVec r(std::max(a.size(), b.size()), ring_zero(spec));
        for (size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
        for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
        return r;
    }
    PolyVec pmul(const PolyVec& a, const PolyVec& b) {
        PolyVec r(a.size() + b.size() - 1, ring_zero(spec));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
        return r;
    }
    PolyVec ppow(PolyVec base, unsigned long e) {
        if (e > 512) throw parse_error("exponent too large");
        PolyVec r = constant(ring_one(spec));
        while (e) {
            if (e & 1ul) r = pmul(r, base);
            base = pmul(base, base);
            e >>= 1;
        }
        return r;
    }

    PolyVec parse_expr() {
        bool neg = false;
        if (peek().kind == Token::Plus) next();
        else if (peek().kind == Token::Minus) {
            next();
            neg = true;
        }
        PolyVec acc = parse_term();
        if (neg) acc = psub(constant(ring_zero(spec)), acc);
        while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            bool sub = next().kind == Token::Minus;
            PolyVec t = parse_term();
            acc = sub ? psub(acc, t) : padd(acc, t);
        }
        return acc;
    }

    PolyVec parse_term() {
        PolyVec acc = parse_power();
        while (true) {
            if (peek().kind == Token::Star) {
                next();
                acc = pmul(acc, parse_power());
            } else if (peek().kind == Token::Ident || peek().kind == Token::LParen) {
                acc = pmul(acc, parse_power());   // implicit multiplication
            } else {
                break;
            }
        }
        return acc;
    }

    PolyVec parse_power() {
        PolyVec base = parse_atom();
        if (peek().kind == Token::Caret) {
            next();
            if (peek().kind != Token::Num) throw parse_error("expected integer exponent");
            unsigned long e = std::stoul(next().text);
            return ppow(std::move(base), e);
        }
        return base;
    }

    PolyVec parse_atom() {
        Token t = next();
        switch (t.kind) {
            case Token::Num: {
                if (spec.kind == RingKind::Integers) return constant(RingElem(mpz_class(t.text)));
                mpz_class v(t.text);
                mpz_class r = v % spec.p;
                return constant(ring_from_int(spec, r.get_si()));
            }
            case Token::Ident: {
                if (!mv.empty() && t.text == mv) {
                    PolyVec x(2, ring_zero(spec));
                    x[1] = ring_one(spec);
                    return x;
                }
                if (spec.kind == RingKind::PolyOverPrimeField && t.text == spec.var) {
                    FpPoly g;
                    g.p = spec.p;
                    g.c = {0, 1};
                    return constant(RingElem(std::move(g)));
                }
                throw parse_error("unknown symbol \"" + t.text + "\"");
            }
            case Token::LParen: {
                PolyVec inner = parse_expr();
                if (next().kind != Token::RParen) throw parse_error("expected ')'");
                return inner;
            }
            default: throw parse_error("unexpected token \"" + t.text + "\"");
        }
    }
};

}   // namespace

std::vector<RingElem> parse_expr_poly(const RingSpec& spec, const std::string& mv,
                                      const std::string& text) {
    Parser p{spec, mv, tokenize(text)};
    PolyVec v = p.parse_expr();
    if (p.peek().kind != Token::End) throw parse_error("trailing input in expression");
    while (v.size() > 1 && is_zero(v.back())) v.pop_back();
    if (mv.empty() && v.size() > 1) throw parse_error("polynomial where a constant was expected");
    return v;
}

}   // namespace detail

// --- fraction field ---------------------------------------------------------------

Frac frac_reduce(const RingElem& num, const RingElem& den) {
    if (is_zero(den)) throw std::domain_error("zero denominator");
    if (is_zero(num)) {
        RingElem one = num.is_int_kind() ? RingElem(mpz_class(1)) : RingElem(FpPoly{den.fp().p, {1}});
        return {num, one};
    }
    RingElem g = gcd(num, den);
    RingElem n = divexact(num, g), d = divexact(den, g);
    auto norm = normalize_unit(d);
    RingElem ui = unit_inv(norm.unit);
    return {ui * n, norm.normal};
}

Frac frac_of(const RingElem& a) {
    RingElem one = a.is_int_kind() ? RingElem(mpz_class(1)) : RingElem(FpPoly{a.fp().p, {1}});
    return {a, one};
}

Frac operator+(const Frac& a, const Frac& b) {
    return frac_reduce(a.num * b.den + b.num * a.den, a.den * b.den);
}
Frac operator-(const Frac& a, const Frac& b) {
    return frac_reduce(a.num * b.den - b.num * a.den, a.den * b.den);
}
Frac operator*(const Frac& a, const Frac& b) { return frac_reduce(a.num * b.num, a.den * b.den); }
Frac operator-(const Frac& a) { return {-a.num, a.den}; }

Frac frac_inv(const Frac& a) {
    if (a.is_zero()) throw std::domain_error("inverse of zero");
    return frac_reduce(a.den, a.num);
}

Frac operator/(const Frac& a, const Frac& b) { return a * frac_inv(b); }

bool is_integral(const Frac& a) { return is_unit(a.den); }

std::string to_string(const Frac& a, const RingSpec& spec) {
    if (is_unit(a.den)) return to_string(a.num, spec);
    std::string n = to_string(a.num, spec), d = to_string(a.den, spec);
    bool pn = n.find_first_of("+-", 1) != std::string::npos && spec.kind != RingKind::Integers;
    bool pd = d.find_first_of("+-", 1) != std::string::npos;
    std::string out = pn ? "(" + n + ")" : n;
    out += "/";
    out += pd ? "(" + d + ")" : d;
    return out;
}

}   // namespace lmrep

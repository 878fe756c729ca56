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

#include "lmrep/selfcheck.hpp"

#include <random>
#include <sstream>

#include "lmrep/classgroup.hpp"
#include "lmrep/json_io.hpp"

namespace lmrep {

namespace {

const RingSpec kRings[2] = {RingSpec::integers(), RingSpec::poly_mod_p(2)};

RingElem random_elem(const RingSpec& spec, std::mt19937_64& rng, int size) {
    if (spec.kind == RingKind::Integers)
        return ring_from_int(spec, static_cast<long>(rng() % (2 * size + 1)) - size);
    return nth_element(spec, rng() % 32);
}

RPoly random_monic_cubic(const RingSpec& spec, std::mt19937_64& rng) {
    std::vector<RingElem> c;
    for (int i = 0; i < 3; ++i) c.push_back(random_elem(spec, rng, 7));
    c.push_back(ring_one(spec));
    return RPoly::from_coeffs(spec, std::move(c));
}

DegreeOneForm sample_form(const OrderCtx& ctx, std::mt19937_64& rng) {
    while (true) {
        RingElem z = random_elem(ctx.ring, rng, 9);
        RingElem fz = poly_eval(ctx.f, z);
        if (is_zero(fz)) continue;
        RingElem a = ring_one(ctx.ring);
        for (auto& [p, e] : factor_elem(fz))
            for (int k = 0; k < e; ++k)
                if (rng() % 2) a = a * p;
        return degree_one_form_of(ctx, a, z);
    }
}

struct Runner {
    const SelfcheckOptions& options;
    SelfcheckReport report;

    static unsigned long fnv1a(const std::string& s) {
        unsigned long h = 1469598103934665603ul;
        for (unsigned char c : s) h = (h ^ c) * 1099511628211ul;
        return h;
    }

    template <typename Body>
    void suite(const std::string& name, int cases, Body&& body) {
        SuiteResult result;
        result.name = name;
        result.cases = cases;
        std::mt19937_64 rng(options.seed ^ fnv1a(name));
        for (int i = 0; i < cases && result.passed; ++i) {
            std::string cex = body(rng);
            if (!cex.empty()) {
                result.passed = false;
                result.counterexample = cex;
            }
        }
        report.all_passed = report.all_passed && result.passed;
        report.suites.push_back(std::move(result));
    }
};

std::string describe(const RingSpec& spec, const RPoly& f) {
    return spec.to_string() + ", f = " + to_string(f, "x");
}

}   // namespace

SelfcheckReport run_selfcheck(const SelfcheckOptions& options) {
    Runner r{options, {}};

    r.suite("bezout-gcd", 2000, [](std::mt19937_64& rng) -> std::string {
        const RingSpec& spec = kRings[rng() % 2];
        RingElem a = random_elem(spec, rng, 5000), b = random_elem(spec, rng, 5000);
        if (is_zero(a) && is_zero(b)) return {};
        auto e = gcd_ext(a, b);
        bool ok = e.s * a + e.t * b == e.g && divides(e.g, a) && divides(e.g, b) &&
                  normalize_unit(e.g).normal == e.g;
        auto n = normalize_unit(a);
        ok = ok && normalize_unit(n.normal).normal == n.normal && n.unit * n.normal == a;
        if (ok) return {};
        return "gcd_ext(" + to_string(a, spec) + ", " + to_string(b, spec) + ") over " +
               spec.to_string();
    });

    r.suite("crt-residues", 2000, [](std::mt19937_64& rng) -> std::string {
        const RingSpec& spec = kRings[rng() % 2];
        RingElem m1 = random_elem(spec, rng, 60), m2 = random_elem(spec, rng, 60);
        if (is_zero(m1) || is_zero(m2) || is_unit(m1) || is_unit(m2)) return {};
        if (!is_unit(gcd(m1, m2))) return {};
        RingElem r1 = euclid_divmod(random_elem(spec, rng, 200), m1).rem;
        RingElem r2 = euclid_divmod(random_elem(spec, rng, 200), m2).rem;
        RingElem x = crt({r1, r2}, {m1, m2});
        if (euclid_divmod(x, m1).rem == r1 && euclid_divmod(x, m2).rem == r2) return {};
        return "crt residues " + to_string(r1, spec) + "," + to_string(r2, spec) + " mod " +
               to_string(m1, spec) + "," + to_string(m2, spec);
    });

    r.suite("frac-field-axioms", 600, [](std::mt19937_64& rng) -> std::string {
        const RingSpec& spec = kRings[rng() % 2];
        Frac abc[3];
        for (auto& f : abc) {
            RingElem d = random_elem(spec, rng, 30);
            if (is_zero(d)) d = ring_one(spec);
            f = frac_reduce(random_elem(spec, rng, 30), d);
        }
        auto [a, b, c] = std::tuple{abc[0], abc[1], abc[2]};
        bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) &&
                  a * (b + c) == a * b + a * c;
        if (!a.is_zero()) ok = ok && a * frac_inv(a) == frac_of(ring_one(spec));
        if (ok) return {};
        return "fraction triple over " + spec.to_string();
    });

    r.suite("content-gauss", 600, [](std::mt19937_64& rng) -> std::string {
        const RingSpec& spec = kRings[rng() % 2];
        auto rand_poly = [&](int deg) {
            std::vector<RingElem> c;
            for (int i = 0; i <= deg; ++i) c.push_back(random_elem(spec, rng, 30));
            return RPoly::from_coeffs(spec, std::move(c));
        };
        RPoly g = rand_poly(2 + static_cast<int>(rng() % 3));
        RPoly h = rand_poly(2 + static_cast<int>(rng() % 3));
        if (g.is_zero() || h.is_zero()) return {};
        if (content(g * h) == normalize_unit(content(g) * content(h)).normal) return {};
        return "content multiplicativity over " + spec.to_string();
    });

    r.suite("regular-rep-hom", 400, [](std::mt19937_64& rng) -> std::string {
        const RingSpec& spec = kRings[rng() % 2];
        RPoly f = random_monic_cubic(spec, rng);
        auto ctx = OrderCtx::create(spec, f, "x", true);
        std::vector<RingElem> gc, hc;
        for (int i = 0; i < 3; ++i) {
            gc.push_back(random_elem(spec, rng, 8));
            hc.push_back(random_elem(spec, rng, 8));
        }
        OrderElem g = order_elem(ctx, gc), h = order_elem(ctx, hc);
        bool ok = regular_rep(g * h) == regular_rep(g) * regular_rep(h) &&
                  regular_rep(g + h) == regular_rep(g) + regular_rep(h) &&
                  norm_elem(g * h) == norm_elem(g) * norm_elem(h);
        for (int j = 0; ok && j < ctx->n; ++j) {
            std::vector<RingElem> unit(ctx->n, ring_zero(spec));
            unit[j] = ring_one(spec);
            ok = regular_rep(order_elem(ctx, unit)) == ctx->theta_powers[j];
        }
        if (ok) return {};
        return "regular representation over " + describe(spec, f);
    });

    r.suite("hnf-unimodular", 200, [](std::mt19937_64& rng) -> std::string {
        const RingSpec& spec = kRings[rng() % 2];
        RMat base = RMat::zeros(spec, 3, 3);
        for (auto& e : base.a) e = random_elem(spec, rng, 9);
        if (is_zero(det_bareiss(base))) return {};
        RMat h = hnf_rows(base);
        RMat u = RMat::identity(spec, 3);
        for (int step = 0; step < 10; ++step) {
            int i = static_cast<int>(rng() % 3), j = static_cast<int>(rng() % 3);
            if (i == j) continue;
            RingElem c = random_elem(spec, rng, 3);
            for (int k = 0; k < 3; ++k) u.at(i, k) = u.at(i, k) + c * u.at(j, k);
        }
        if (hnf_rows(u * h) == h) return {};
        return "hnf changed under a unimodular transform over " + spec.to_string();
    });

    r.suite("conjugation-cf", 200, [&options = r.options](std::mt19937_64& rng) -> std::string {
        const RingSpec& spec = kRings[rng() % 2];
        RPoly f = random_monic_cubic(spec, rng);
        auto ctx = OrderCtx::create(spec, f, "x", true);
        DegreeOneForm form = sample_form(*ctx, rng);
        RMat closed = cf_matrix(form, *ctx);
        if (options.mutate_u1_sign) {
            // u_1 sits next to the corner entry on row n-2
            closed.at(ctx->n - 2, ctx->n - 2) = -closed.at(ctx->n - 2, ctx->n - 2);
            if (is_zero(closed.at(ctx->n - 2, ctx->n - 2))) return {};
        }
        RMat kc = kappa(form, *ctx) * ctx->theta * adjugate(kappa(form, *ctx));
        RMat x = divexact_mat(kc, form.a);
        RMat tau = tau_matrix(form.z, *ctx);
        RMat conj = cyclic_v(*ctx) * tau * x * adjugate(tau) * transpose(cyclic_v(*ctx));
        if (conj == closed && charpoly(closed) == f) return {};
        std::ostringstream os;
        os << "conjugation mismatch: " << describe(spec, f)
           << ", a = " << to_string(form.a, spec) << ", z = " << to_string(form.z, spec)
           << ", closed = " << matrix_entries_json(closed).dump()
           << ", conjugated = " << matrix_entries_json(conj).dump();
        return os.str();
    });

    r.suite("kappa-gcrd", 200, [](std::mt19937_64& rng) -> std::string {
        const RingSpec& spec = kRings[rng() % 2];
        RPoly f = random_monic_cubic(spec, rng);
        auto ctx = OrderCtx::create(spec, f, "x", true);
        DegreeOneForm form = sample_form(*ctx, rng);
        RMat lam = lambda_matrix(form.z, *ctx);
        RMat stack = RMat::zeros(spec, 6, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                stack.at(i, j) = lam.at(i, j);
                stack.at(3 + i, j) = (i == j) ? form.a : ring_zero(spec);
            }
        if (hnf_rows(stack) == hnf_rows(kappa(form, *ctx))) return {};
        return "kappa gcrd identity failed: " + describe(spec, f) + ", a = " +
               to_string(form.a, spec) + ", z = " + to_string(form.z, spec);
    });

    r.suite("rehm-identity", 100, [](std::mt19937_64& rng) -> std::string {
        const RingSpec& spec = kRings[rng() % 2];
        RPoly f = random_monic_cubic(spec, rng);
        auto ctx = OrderCtx::create(spec, f, "x", true);
        DegreeOneForm form = sample_form(*ctx, rng);
        RMat at = rehm_form(form, *ctx);
        if (charpoly(at) == f && at.at(ctx->n - 1, ctx->n - 2) == form.a) return {};
        return "rehm identity failed: " + describe(spec, f);
    });

    r.suite("degree-one-products", 60, [](std::mt19937_64& rng) -> std::string {
        const RingSpec& spec = kRings[rng() % 2];
        RPoly f = spec.kind == RingKind::Integers
                      ? parse_poly(spec, "x", "x^3+4*x-1")
                      : parse_poly(spec, "y", "y^3+(t^3+t^2+t)");
        auto ctx = OrderCtx::create(spec, f, spec.kind == RingKind::Integers ? "x" : "y");
        RingElem disc = discriminant(f);
        long bound = spec.kind == RingKind::Integers ? 40 : 4;
        auto primes = primes_up_to(spec, bound);
        std::shuffle(primes.begin(), primes.end(), rng);
        IdealLat prod = ideal_from_hnf(ctx, RMat::identity(spec, ctx->n));
        int picked = 0;
        for (const auto& p : primes) {
            if (picked == 2) break;
            if (divides(p.pi, disc)) continue;
            auto infos = degree_one_primes_above(p, ctx);
            if (infos.empty() || infos[0].e != 1) continue;
            int e = 1 + static_cast<int>(rng() % 3);
            prod = ideal_mul(prod, ideal_pow(infos[0].ideal, static_cast<unsigned>(e)));
            ++picked;
        }
        if (picked == 0) return {};
        if (degree_one_form(prod).has_value()) return {};
        return "degree-one product law failed over " + spec.to_string();
    });

    return r.report;
}

}   // namespace lmrep

#include "doctest.h"

#include <random>

#include "lmrep/lm.hpp"

using namespace lmrep;

namespace {

const RingSpec kZ = RingSpec::integers();
const RingSpec kF2 = RingSpec::poly_mod_p(2);

OrderCtxPtr ex1() { return OrderCtx::create(kZ, parse_poly(kZ, "x", "x^3+4*x-1"), "x"); }
OrderCtxPtr ex2() { return OrderCtx::create(kF2, parse_poly(kF2, "y", "y^3+(t^3+t^2+t)"), "y"); }

RingElem Z(long v) { return ring_from_int(kZ, v); }

RMat mat3(const RingSpec& s, std::vector<long> v) {
    RMat m = RMat::zeros(s, 3, 3);
    for (int i = 0; i < 9; ++i) m.a[i] = ring_from_int(s, v[i]);
    return m;
}

RMat matf(const RingSpec& s, std::vector<std::string> v) {
    RMat m = RMat::zeros(s, 3, 3);
    for (int i = 0; i < 9; ++i) m.a[i] = parse_elem(s, v[i]);
    return m;
}

DegreeOneForm sample_form(const OrderCtx& ctx, std::mt19937_64& rng) {
    while (true) {
        RingElem z = ctx.ring.kind == RingKind::Integers
                         ? ring_from_int(ctx.ring, static_cast<long>(rng() % 19) - 9)
                         : nth_element(ctx.ring, rng() % 16);
        RingElem fz = poly_eval(ctx.f, z);
        if (is_zero(fz)) continue;
        auto fac = factor_elem(fz);
        RingElem a = ring_one(ctx.ring);
        for (auto& [p, e] : fac)
            for (int k = 0; k < e; ++k)
                if (rng() % 2) a = a * p;
        return degree_one_form_of(ctx, a, z);
    }
}

RPoly random_monic_cubic(const RingSpec& spec, std::mt19937_64& rng) {
    std::vector<RingElem> c;
    for (int i = 0; i < 3; ++i)
        c.push_back(spec.kind == RingKind::Integers
                        ? ring_from_int(spec, static_cast<long>(rng() % 15) - 7)
                        : nth_element(spec, rng() % 16));
    c.push_back(ring_one(spec));
    return RPoly::from_coeffs(spec, std::move(c));
}

}   // namespace

TEST_SUITE("lm") {

TEST_CASE("cf_matrix reproduces the worked examples") {
    auto ctx = ex1();
    CHECK(cf_matrix(degree_one_form_of(*ctx, Z(3), Z(2)), *ctx) ==
          mat3(kZ, {0, 1, 0, -8, -2, -5, 3, 0, 2}));
    CHECK(cf_matrix(degree_one_form_of(*ctx, Z(1), Z(0)), *ctx) ==
          mat3(kZ, {0, 1, 0, -4, 0, 1, 1, 0, 0}));

    auto ctx2 = ex2();
    CHECK(cf_matrix(degree_one_form_of(*ctx2, parse_elem(kF2, "t"), ring_zero(kF2)), *ctx2) ==
          matf(kF2, {"0", "1", "0", "0", "0", "t^2+t+1", "t", "0", "0"}));
    CHECK(cf_matrix(degree_one_form_of(*ctx2, parse_elem(kF2, "t+1"), ring_one(kF2)), *ctx2) ==
          matf(kF2, {"0", "1", "0", "1", "1", "t^2+1", "t+1", "0", "1"}));
    CHECK(cf_matrix(degree_one_form_of(*ctx2, ring_one(kF2), ring_zero(kF2)), *ctx2) ==
          matf(kF2, {"0", "1", "0", "0", "0", "t^3+t^2+t", "1", "0", "0"}));
}

TEST_CASE("conjugation route with the printed conjugators") {
    auto ctx = ex1();
    DegreeOneForm form = degree_one_form_of(*ctx, Z(3), Z(2));
    CHECK(tau_matrix(form.z, *ctx) == mat3(kZ, {1, 0, 0, 0, 1, 0, 0, -2, 1}));
    CHECK(cyclic_v(*ctx) == mat3(kZ, {0, 1, 0, 0, 0, 1, 1, 0, 0}));
    CHECK(cf_via_conjugation(form, *ctx) == cf_matrix(form, *ctx));
    // trivial class: v T v^{-1} = C_f(1,0)
    DegreeOneForm triv = degree_one_form_of(*ctx, Z(1), Z(0));
    RMat v = cyclic_v(*ctx);
    CHECK(v * ctx->theta * transpose(v) == cf_matrix(triv, *ctx));

    auto ctx2 = ex2();
    DegreeOneForm f2 = degree_one_form_of(*ctx2, parse_elem(kF2, "t+1"), ring_one(kF2));
    RMat tau2 = tau_matrix(f2.z, *ctx2);
    CHECK(tau2 == matf(kF2, {"1", "0", "0", "0", "1", "0", "0", "1", "1"}));
    CHECK(cf_via_conjugation(f2, *ctx2) == cf_matrix(f2, *ctx2));
}

TEST_CASE("conjugation identity on random forms") {
    std::mt19937_64 rng(47);
    for (auto spec : {kZ, kF2}) {
        for (int it = 0; it < 100; ++it) {
            RPoly f = random_monic_cubic(spec, rng);
            auto ctx = OrderCtx::create(spec, f, spec.kind == RingKind::Integers ? "x" : "y", true);
            DegreeOneForm form = sample_form(*ctx, rng);
            RMat c = cf_via_conjugation(form, *ctx);
            CHECK(c == cf_matrix(form, *ctx));
            CHECK(charpoly(c) == f);
        }
    }
}

TEST_CASE("rehm form and its conjugators") {
    auto ctx = ex1();
    DegreeOneForm form = degree_one_form_of(*ctx, Z(3), Z(2));
    RMat at = rehm_form(form, *ctx);
    // last row (0, ..., 0, a, z); last column (-f(z)/a, 0, ..., 0, z)
    CHECK(at == mat3(kZ, {0, -8, -5, 1, -2, 0, 0, 3, 2}));
    CHECK(charpoly(at) == ctx->f);
    CHECK(rehm_form(degree_one_form_of(*ctx, Z(1), Z(0)), *ctx) ==
          mat3(kZ, {0, -4, 1, 1, 0, 0, 0, 1, 0}));

    std::mt19937_64 rng(53);
    for (auto spec : {kZ, kF2}) {
        for (int it = 0; it < 60; ++it) {
            RPoly f = random_monic_cubic(spec, rng);
            auto c2 = OrderCtx::create(spec, f, spec.kind == RingKind::Integers ? "x" : "y", true);
            DegreeOneForm fo = sample_form(*c2, rng);
            RMat a2 = rehm_form(fo, *c2);
            CHECK(charpoly(a2) == f);
            CHECK(a2.at(2, 1) == fo.a);
            CHECK(a2.at(2, 2) == fo.z);
            CHECK(is_zero(a2.at(2, 0)));
        }
    }
}

TEST_CASE("rehm form is similar to cf over GL_n(A)") {
    // explicit conjugator M = (w sigma)(v tau)^{-1}: M C_f = rehm M
    std::mt19937_64 rng(67);
    for (auto spec : {kZ, kF2}) {
        for (int it = 0; it < 40; ++it) {
            RPoly f = random_monic_cubic(spec, rng);
            auto ctx = OrderCtx::create(spec, f, spec.kind == RingKind::Integers ? "x" : "y", true);
            DegreeOneForm form = sample_form(*ctx, rng);
            RMat c = cf_matrix(form, *ctx);
            RMat at = rehm_form(form, *ctx);
            RMat vt = cyclic_v(*ctx) * tau_matrix(form.z, *ctx);
            RMat m = antidiag_w(*ctx) * sigma_matrix(*ctx) * adjugate(vt);
            CHECK(is_unit(det_bareiss(m)));
            CHECK(m * c == at * m);
        }
    }
}

TEST_CASE("rehm form on degree five") {
    auto ctx = OrderCtx::create(kZ, parse_poly(kZ, "x", "x^5+3*x^2-x+7"), "x", true);
    std::mt19937_64 rng(59);
    for (int it = 0; it < 20; ++it) {
        DegreeOneForm form = sample_form(*ctx, rng);
        RMat c = cf_via_conjugation(form, *ctx);
        CHECK(charpoly(c) == ctx->f);
        RMat at = rehm_form(form, *ctx);
        CHECK(charpoly(at) == ctx->f);
    }
}

TEST_CASE("ideal_to_matrix") {
    auto ctx = ex1();
    IdealLat unit = ideal_from_generators({order_from_int(ctx, 1)});
    CHECK(ideal_to_matrix(unit) == ctx->theta);

    IdealLat b = ideal_from_text(ctx, "3, x-2");
    RMat m = ideal_to_matrix(b);
    CHECK(charpoly(m) == ctx->f);

    auto ctx2 = ex2();
    IdealLat p = ideal_from_text(ctx2, "t, y");
    RMat m2 = ideal_to_matrix(p);
    CHECK(charpoly(m2) == ctx2->f);
    DegreeOneForm f0 = degree_one_form_of(*ctx2, parse_elem(kF2, "t"), ring_zero(kF2));
    RMat k = kappa(f0, *ctx2);
    CHECK(m2 == divexact_mat(k * ctx2->theta * adjugate(k), det_bareiss(k)));
}

TEST_CASE("matrix_to_ideal") {
    auto ctx = ex1();
    IdealLat from_companion = matrix_to_ideal(ctx->theta, ctx);
    // the unit-ideal class: returned ideal is principal
    ColonLattice witness = colon_lattice(from_companion,
                                         ideal_from_generators({order_from_int(ctx, 1)}));
    bool principal = false;
    for (int i = 0; i < 3 && !principal; ++i) {
        FieldElem gamma = witness.element(i);
        if (gamma.is_zero()) continue;
        if (ideal_mul_field(gamma, ideal_from_generators({order_from_int(ctx, 1)})) ==
            from_companion)
            principal = true;
    }
    CHECK(principal);

    RMat wrong = mat3(kZ, {1, 0, 0, 0, 1, 0, 0, 0, 1});
    CHECK_THROWS_WITH_AS(matrix_to_ideal(wrong, ctx), "matrix not in correspondence scope",
                         std::domain_error);
}

TEST_CASE("representative_for_ideal") {
    auto ctx = ex1();
    IdealLat b = ideal_from_text(ctx, "3, x-2");
    Representative rep = representative_for_ideal(b);
    CHECK(rep.c == mat3(kZ, {0, 1, 0, -8, -2, -5, 3, 0, 2}));
    CHECK(rep.kappa_used == mat3(kZ, {3, 0, 0, -2, 1, 0, -4, 0, 1}));
    CHECK(rep.form.a == Z(3));
    CHECK(rep.form.z == Z(2));

    IdealLat unit = ideal_from_generators({order_from_int(ctx, 1)});
    Representative triv = representative_for_ideal(unit);
    CHECK(triv.c == mat3(kZ, {0, 1, 0, -4, 0, 1, 1, 0, 0}));

    IdealLat two = ideal_from_generators({order_from_int(ctx, 2)});
    CHECK_THROWS_WITH_AS(representative_for_ideal(two),
                         "no degree-one form; pick another class representative",
                         std::domain_error);

    auto ctx2 = ex2();
    Representative r2 = representative_for_ideal(ideal_from_text(ctx2, "t, y"));
    CHECK(r2.c == matf(kF2, {"0", "1", "0", "0", "0", "t^2+t+1", "t", "0", "0"}));
}

TEST_CASE("n=2 shape law") {
    // every 2x2 matrix with irreducible charpoly has the C_f(a,z) shape:
    // the bottom-left entry divides f at the bottom-right entry
    std::mt19937_64 rng(61);
    int tested = 0;
    while (tested < 100) {
        RMat m = RMat::zeros(kZ, 2, 2);
        for (auto& e : m.a) e = ring_from_int(kZ, static_cast<long>(rng() % 13) - 6);
        RPoly f = charpoly(m);
        if (is_zero(m.at(1, 0))) continue;
        if (!irreducible_low_degree(f)) continue;
        ++tested;
        RingElem a = m.at(1, 0), z = m.at(1, 1);
        CHECK(divides(a, poly_eval(f, z)));
        // with w = m(0,1): f(z) = -w*a, so the corner entry is exactly -f(z)/a
        CHECK(m.at(0, 1) == -divexact(poly_eval(f, z), a));
        CHECK(m.at(0, 0) == u_values(z, *OrderCtx::create(kZ, f, "x", true))[0]);
    }
}

}   // TEST_SUITE

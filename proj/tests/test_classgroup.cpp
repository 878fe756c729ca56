#include "doctest.h"

#include <algorithm>
#include <random>

#include "lmrep/classgroup.hpp"

using namespace lmrep;

namespace {

const RingSpec kZ = RingSpec::integers();
const RingSpec kF2 = RingSpec::poly_mod_p(2);

OrderCtxPtr ex1() { return OrderCtx::create(kZ, parse_poly(kZ, "x", "x^3+4*x-1"), "x"); }
OrderCtxPtr ex2() { return OrderCtx::create(kF2, parse_poly(kF2, "y", "y^3+(t^3+t^2+t)"), "y"); }

RingElem Z(long v) { return ring_from_int(kZ, v); }

IdealLat unit_ideal(OrderCtxPtr ctx) {
    return ideal_from_hnf(ctx, RMat::identity(ctx->ring, ctx->n));
}

}   // namespace

TEST_SUITE("classgroup") {

TEST_CASE("primes_up_to") {
    auto zp = primes_up_to(kZ, 13);
    REQUIRE(zp.size() == 6);
    CHECK(zp[0].pi == Z(2));
    CHECK(zp[5].pi == Z(13));

    auto fp = primes_up_to(kF2, 2);
    REQUIRE(fp.size() == 3);
    CHECK(fp[0].pi == parse_elem(kF2, "t"));
    CHECK(fp[1].pi == parse_elem(kF2, "t+1"));
    CHECK(fp[2].pi == parse_elem(kF2, "t^2+t+1"));
}

TEST_CASE("degree_one_primes_above") {
    auto ctx = ex1();
    auto p3 = degree_one_primes_above(PrimeOfA{Z(3)}, ctx);
    REQUIRE(p3.size() == 1);
    CHECK(p3[0].z == Z(2));
    CHECK(p3[0].e == 1);
    CHECK(contract_to_A(p3[0].ideal) == Z(3));

    auto ctx2 = ex2();
    auto pt = degree_one_primes_above(PrimeOfA{parse_elem(kF2, "t")}, ctx2);
    REQUIRE(pt.size() == 1);
    CHECK(is_zero(pt[0].z));
    CHECK(pt[0].e == 3);

    auto pt1 = degree_one_primes_above(PrimeOfA{parse_elem(kF2, "t+1")}, ctx2);
    REQUIRE(pt1.size() == 1);
    CHECK(is_one(pt1[0].z));
    CHECK(pt1[0].e == 1);
}

TEST_CASE("enumerate_ideals small bounds") {
    auto ctx = ex1();
    // no roots below 2 means only the unit ideal
    auto only_unit = enumerate_ideals(ctx, 1, 1);
    REQUIRE(only_unit.size() == 1);
    CHECK(only_unit[0].ideal.is_unit_ideal());

    // roots exist mod 2 (z=1) and mod 3 (z=2)
    auto small = enumerate_ideals(ctx, 3, 1);
    REQUIRE(small.size() == 4);
    CHECK(small[0].ideal.is_unit_ideal());
    CHECK(ideal_norm(small[1].ideal) == Z(2));
    CHECK(ideal_norm(small[2].ideal) == Z(3));
    CHECK(ideal_norm(small[3].ideal) == Z(6));
    CHECK(small[3].factors.size() == 2);

    auto ctx2 = ex2();
    auto ff = enumerate_ideals(ctx2, 1, 2);
    // groups: one prime above (t) and one above (t+1), exponents up to 2
    REQUIRE(ff.size() == 9);
}

TEST_CASE("is_equivalent basics") {
    auto ctx = ex1();
    IdealLat b = ideal_from_text(ctx, "3, x-2");
    auto self = is_equivalent(b, b, 1);
    REQUIRE(self.equivalent());
    CHECK(*self.witness == to_field(order_from_int(ctx, 1)));

    // the class group has order 2, so b is not principal: Unknown
    auto against_unit = is_equivalent(b, unit_ideal(ctx), 6);
    CHECK_FALSE(against_unit.equivalent());

    // b^2 is principal; a witness exists at a modest box
    IdealLat b2 = ideal_mul(b, b);
    auto sq = is_equivalent(unit_ideal(ctx), b2, 6);
    REQUIRE(sq.equivalent());
    CHECK(ideal_mul_field(*sq.witness, unit_ideal(ctx)) == b2);
    Frac nw = norm_field(*sq.witness);
    CHECK((nw == frac_of(Z(9)) || nw == frac_of(Z(-9))));
}

TEST_CASE("is_equivalent respects principal scaling") {
    auto ctx = ex1();
    IdealLat b = ideal_from_text(ctx, "3, x-2");
    IdealLat scaled = ideal_scale(Z(5), b);
    auto r = is_equivalent(b, scaled, 6);
    REQUIRE(r.equivalent());
    CHECK(ideal_mul_field(*r.witness, b) == scaled);
}

TEST_CASE("classify keeps the two Example 1 classes apart at small bounds") {
    auto ctx = ex1();
    auto corpus = enumerate_ideals(ctx, 10, 2);
    ClassTable table = classify(corpus, 6);
    CHECK(table.classes.size() == 2);
    CHECK(table.unresolved.empty());
    CHECK(table.ideal_of(table.classes[0].representative_index).is_unit_ideal());
    IdealLat b = ideal_from_text(ctx, "3, x-2");
    bool found = false;
    for (int i : table.classes[1].member_indices)
        if (table.ideal_of(i) == b) found = true;
    CHECK(found);
    for (const ClassInfo& cls : table.classes)
        for (size_t k = 0; k < cls.member_indices.size(); ++k)
            CHECK(ideal_mul_field(cls.witnesses[k], table.ideal_of(cls.representative_index)) ==
                  table.ideal_of(cls.member_indices[k]));
    // degree-one representatives: (1,0) for the trivial class, (a,z) else
    REQUIRE(table.classes[0].degree_one_rep.has_value());
    CHECK(is_one(table.classes[0].degree_one_rep->a));
    REQUIRE(table.classes[1].degree_one_rep.has_value());
}

TEST_CASE("classify function-field corpus finds three classes") {
    auto ctx2 = ex2();
    auto corpus = enumerate_ideals(ctx2, 2, 2);
    ClassTable table = classify(corpus, 4);
    CHECK(table.classes.size() == 3);
    // [b^2] = [(t+1, y+1)]
    IdealLat b = ideal_from_text(ctx2, "t, y");
    IdealLat b2 = ideal_mul(b, b);
    IdealLat q = ideal_from_text(ctx2, "t+1, y+1");
    int cb2 = -1, cq = -1;
    for (size_t ci = 0; ci < table.classes.size(); ++ci)
        for (int i : table.classes[ci].member_indices) {
            if (table.ideal_of(i) == b2) cb2 = static_cast<int>(ci);
            if (table.ideal_of(i) == q) cq = static_cast<int>(ci);
        }
    REQUIRE(cb2 >= 0);
    REQUIRE(cq >= 0);
    CHECK(cb2 == cq);
}

TEST_CASE("degree-one product and factor laws") {
    std::mt19937_64 rng(71);
    auto c1 = ex1();
    auto c2 = ex2();
    int built = 0;
    while (built < 100) {
        OrderCtxPtr c = (built % 2 == 0) ? c1 : c2;
        const RingSpec& spec = c->ring;
        RingElem disc = discriminant(c->f);
        std::vector<PrimeIdealInfo> picked;
        long bound = spec.kind == RingKind::Integers ? 60 : 4;
        auto primes = primes_up_to(spec, bound);
        std::shuffle(primes.begin(), primes.end(), rng);
        for (const auto& p : primes) {
            if (picked.size() == 3) break;
            if (divides(p.pi, disc)) continue;
            auto infos = degree_one_primes_above(p, c);
            for (auto& q : infos)
                if (q.e == 1 && picked.size() < 3) {
                    picked.push_back(q);
                    break;
                }
        }
        if (picked.empty()) continue;
        ++built;
        IdealLat prod = unit_ideal(c);
        std::vector<std::pair<PrimeIdealInfo, int>> factors;
        for (auto& q : picked) {
            int e = 1 + static_cast<int>(rng() % 3);
            prod = ideal_mul(prod, ideal_pow(q.ideal, static_cast<unsigned>(e)));
            factors.emplace_back(q, e);
        }
        auto form = degree_one_form(prod);
        CHECK(form.has_value());
        for (auto& [q, e] : factors) {
            CHECK(degree_one_form(q.ideal).has_value());
            IdealLat qe = ideal_pow(q.ideal, static_cast<unsigned>(e));
            CHECK(contract_to_A(qe) ==
                  normalize_unit(elem_pow(q.p.pi, static_cast<unsigned>(e))).normal);
        }
    }
}

TEST_CASE("ramified prime of the function field is still degree one") {
    // (t, y) has ramification index 3 yet passes the degree-one test
    auto ctx2 = ex2();
    auto pt = degree_one_primes_above(PrimeOfA{parse_elem(kF2, "t")}, ctx2);
    REQUIRE(pt.size() == 1);
    CHECK(pt[0].e == 3);
    CHECK(degree_one_form(pt[0].ideal).has_value());
    // but its square is not
    CHECK_FALSE(degree_one_form(ideal_pow(pt[0].ideal, 2)).has_value());
}

TEST_CASE("verify_lenstra on the function-field corpus") {
    auto ctx2 = ex2();
    auto corpus = enumerate_ideals(ctx2, 4, 2);
    ClassTable table = classify(corpus, 4);
    auto s = default_ramified_set(*ctx2, table.ideals);
    CHECK(!s.empty());   // (t, y) ramifies with e = 3
    auto report = verify_lenstra(table, s);
    REQUIRE(report.per_class.size() == table.classes.size());
    CHECK(report.per_class[0].satisfied);
    CHECK(report.all_satisfied);
}

TEST_CASE("small_residue_bound") {
    auto pz = small_residue_bound(3, kZ);
    REQUIRE(pz.size() == 2);
    CHECK(pz[0].pi == Z(2));
    CHECK(pz[1].pi == Z(3));

    auto pf = small_residue_bound(2, kF2);
    REQUIRE(pf.size() == 2);
    CHECK(pf[0].pi == parse_elem(kF2, "t"));
    CHECK(pf[1].pi == parse_elem(kF2, "t+1"));

    // superset property over Z
    auto p20 = small_residue_bound(20, kZ);
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L}) {
        bool present = false;
        for (auto& q : p20) present = present || q.pi == Z(p);
        CHECK(present);
    }
    // and over F2[t] at m = 4: every irreducible of degree <= 2
    auto pf4 = small_residue_bound(4, kF2);
    for (auto s : {"t", "t+1", "t^2+t+1"}) {
        bool present = false;
        for (auto& q : pf4) present = present || q.pi == parse_elem(kF2, s);
        CHECK(present);
    }
}

TEST_CASE("round trip through the correspondence stays in class") {
    auto ctx = ex1();
    auto corpus = enumerate_ideals(ctx, 5, 1);
    for (const auto& entry : corpus) {
        IdealLat back = matrix_to_ideal(ideal_to_matrix(entry.ideal), ctx);
        auto r = is_equivalent(entry.ideal, back, 6);
        CHECK(r.equivalent());
    }
}

}   // TEST_SUITE

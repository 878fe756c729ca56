#include "doctest.h"

#include <random>

#include "lmrep/poly.hpp"

using namespace lmrep;

namespace {

const RingSpec kZ = RingSpec::integers();
const RingSpec kF2 = RingSpec::poly_mod_p(2);

RPoly zp(const std::string& s) { return parse_poly(kZ, "x", s); }
RPoly fp2(const std::string& s) { return parse_poly(kF2, "y", s); }
RingElem Z(long v) { return ring_from_int(kZ, v); }

RPoly random_poly(const RingSpec& spec, std::mt19937_64& rng, int deg, int size) {
    std::vector<RingElem> c;
    for (int i = 0; i <= deg; ++i) {
        long v = static_cast<long>(rng() % (2 * size + 1)) - size;
        c.push_back(ring_from_int(spec, v));
    }
    return RPoly::from_coeffs(spec, std::move(c));
}

}   // namespace

TEST_SUITE("poly") {

TEST_CASE("poly_eval") {
    CHECK(poly_eval(zp("x^3+4*x-1"), Z(2)) == Z(15));
    CHECK(poly_eval(zp("7*x^2-3"), Z(0)) == Z(-3));
    RPoly f = fp2("y^3+(t^3+t^2+t)");
    RingElem v = poly_eval(f, ring_one(kF2));
    CHECK(v == parse_elem(kF2, "t^3+t^2+t+1"));
    CHECK(v == parse_elem(kF2, "(t+1)*(t^2+1)"));
}

TEST_CASE("poly text round trip") {
    CHECK(to_string(zp("x^3+4*x-1"), "x") == "x^3+4*x-1");
    CHECK(to_string(fp2("y^3+(t^3+t^2+t)"), "y") == "y^3+(t^3+t^2+t)");
    CHECK(zp("-x^2+x") == parse_poly(kZ, "x", to_string(zp("-x^2+x"), "x")));
}

TEST_CASE("content and primitive part") {
    CHECK(content(zp("6*x^2+4")) == Z(2));
    CHECK(content(zp("x^3+4*x-1")) == Z(1));
    RPoly g = parse_poly(kF2, "y", "(t^2+t)*y+t");
    CHECK(content(g) == parse_elem(kF2, "t"));
    CHECK(primitive_part(g) == parse_poly(kF2, "y", "(t+1)*y+1"));
    CHECK_THROWS_AS(content(RPoly::zero(kZ)), std::domain_error);
}

TEST_CASE("gauss content multiplicativity") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        RPoly g = random_poly(kZ, rng, 1 + static_cast<int>(rng() % 4), 30);
        RPoly h = random_poly(kZ, rng, 1 + static_cast<int>(rng() % 4), 30);
        if (g.is_zero() || h.is_zero()) continue;
        CHECK(content(g * h) == normalize_unit(content(g) * content(h)).normal);
    }
}

TEST_CASE("discriminant") {
    CHECK(discriminant(zp("x^3+4*x-1")) == Z(-283));
    CHECK(discriminant(zp("x^2-1")) == Z(4));
    RingElem d = discriminant(fp2("y^3+(t^3+t^2+t)"));
    CHECK(d == parse_elem(kF2, "t^6+t^4+t^2"));
}

TEST_CASE("discriminant ramification link") {
    // disc(f) = 0 mod p iff f mod p has a repeated factor, checked through
    // the root multiplicities on sampled primes
    RPoly f = zp("x^3+4*x-1");
    for (long p : {2L, 3L, 5L, 7L, 11L, 283L}) {
        PrimeOfA pr = PrimeOfA::of(Z(p));
        bool disc_zero = is_zero(euclid_divmod(discriminant(f), Z(p)).rem);
        auto roots = roots_mod_prime(f, pr);
        bool repeated = false;
        for (auto& [z, m] : roots)
            if (m >= 2) repeated = true;
        if (p == 283) CHECK(disc_zero);
        if (repeated) CHECK(disc_zero);
        if (disc_zero) CHECK(repeated);
    }
}

TEST_CASE("discriminant vanishing matches gcd(f, f') mod p") {
    // reinterpret f mod p as a polynomial over F_p and take the actual gcd
    RPoly f = zp("x^3+4*x-1");
    RPoly fp = derivative(f);
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 283L}) {
        RingSpec rp = RingSpec::poly_mod_p(static_cast<std::uint32_t>(p), "x");
        auto lift = [&](const RPoly& g) {
            RingElem acc = ring_zero(rp);
            RingElem xv = nth_element(rp, static_cast<unsigned long>(p));
            RingElem pw = ring_one(rp);
            for (int i = 0; i <= g.degree(); ++i) {
                long c = static_cast<long>(mpz_class(g.coeff(i).z() % p).get_si());
                acc = acc + ring_from_int(rp, c) * pw;
                pw = pw * xv;
            }
            return acc;
        };
        RingElem g = gcd(lift(f), lift(fp));
        bool repeated = !is_unit(g);
        bool disc_zero = is_zero(euclid_divmod(discriminant(f), Z(p)).rem);
        CHECK(repeated == disc_zero);
    }
}

TEST_CASE("roots_mod_prime integers") {
    RPoly f = zp("x^3+4*x-1");
    auto r3 = roots_mod_prime(f, PrimeOfA::of(Z(3)));
    REQUIRE(r3.size() == 1);
    CHECK(r3[0].first == Z(2));
    CHECK(r3[0].second == 1);

    auto r2 = roots_mod_prime(f, PrimeOfA::of(Z(2)));
    REQUIRE(r2.size() == 1);
    CHECK(r2[0].first == Z(1));
    CHECK(r2[0].second == 1);

    // exhaustiveness: every residue accounted for
    for (long p : {5L, 7L, 11L, 13L}) {
        auto roots = roots_mod_prime(f, PrimeOfA::of(Z(p)));
        int total = 0;
        for (long z = 0; z < p; ++z) {
            bool is_root = is_zero(euclid_divmod(poly_eval(f, Z(z)), Z(p)).rem);
            bool listed = false;
            for (auto& [zr, m] : roots)
                if (zr == Z(z)) listed = true;
            CHECK(is_root == listed);
            total += is_root;
        }
        CHECK(static_cast<int>(roots.size()) == total);
        int mult_sum = 0;
        for (auto& [zr, m] : roots) mult_sum += m;
        CHECK(mult_sum <= f.degree());
    }
}

TEST_CASE("roots_mod_prime function field") {
    RPoly f = fp2("y^3+(t^3+t^2+t)");
    auto rt = roots_mod_prime(f, PrimeOfA::of(parse_elem(kF2, "t")));
    REQUIRE(rt.size() == 1);
    CHECK(is_zero(rt[0].first));
    CHECK(rt[0].second == 3);

    auto rt1 = roots_mod_prime(f, PrimeOfA::of(parse_elem(kF2, "t+1")));
    REQUIRE(rt1.size() == 1);
    CHECK(is_one(rt1[0].first));
    CHECK(rt1[0].second == 1);

    // t^3+t^2+t = t(t^2+t+1), so f = y^3 mod the degree-2 prime as well
    auto rq = roots_mod_prime(f, PrimeOfA::of(parse_elem(kF2, "t^2+t+1")));
    REQUIRE(rq.size() == 1);
    CHECK(is_zero(rq[0].first));
    CHECK(rq[0].second == 3);
}

TEST_CASE("irreducible_low_degree") {
    CHECK(irreducible_low_degree(zp("x^3+4*x-1")));
    CHECK_FALSE(irreducible_low_degree(zp("x^2-1")));
    CHECK(irreducible_low_degree(fp2("y^3+(t^3+t^2+t)")));
    CHECK_FALSE(irreducible_low_degree(fp2("y^2+(t^2)")));   // (y+t)^2
    CHECK(irreducible_low_degree(zp("x^2+1")));
    CHECK_THROWS_WITH_AS(irreducible_low_degree(zp("x^4+x+1")),
                         "irreducibility must be asserted by caller", std::domain_error);
}

TEST_CASE("poly division") {
    RPoly f = zp("x^3+4*x-1"), g = zp("x-2");
    auto [q, r] = poly_divmod(f, g);
    CHECK(q * g + r == f);
    CHECK(r.degree() == 0);
    CHECK(r.coeff(0) == Z(15));
    CHECK(poly_divexact(f * g, g) == f);
    CHECK_THROWS_AS(poly_divexact(f, g), std::domain_error);
}

TEST_CASE("kpoly gcd with irreducible f is trivial") {
    KPoly f = KPoly::from(zp("x^3+4*x-1"));
    KPoly a = KPoly::from(zp("x^2-7*x+2"));
    auto e = kpoly_gcd_ext(a, f);
    CHECK(e.g.degree() == 0);
    CHECK(e.s * a + e.t * f == e.g);
}

TEST_CASE("prime validation") {
    CHECK_THROWS_AS(PrimeOfA::of(Z(6)), std::domain_error);
    CHECK(PrimeOfA::of(Z(-5)).pi == Z(5));
    CHECK_THROWS_AS(PrimeOfA::of(parse_elem(kF2, "t^2+1")), std::domain_error);
    CHECK(residue_field_size(PrimeOfA::of(parse_elem(kF2, "t^2+t+1"))) == 4);
}

}   // TEST_SUITE

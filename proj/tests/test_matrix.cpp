#include "doctest.h"

#include <random>

#include "lmrep/matrix.hpp"

using namespace lmrep;

namespace {

const RingSpec kZ = RingSpec::integers();

RMat mat3(const RingSpec& s, std::vector<long> v) {
    RMat m = RMat::zeros(s, 3, 3);
    for (int i = 0; i < 9; ++i) m.a[i] = ring_from_int(s, v[i]);
    return m;
}

}   // namespace

TEST_SUITE("matrix") {

TEST_CASE("det bareiss vs fraction gauss") {
    std::mt19937_64 rng(2);
    for (int it = 0; it < 200; ++it) {
        RMat m = RMat::zeros(kZ, 4, 4);
        for (auto& e : m.a) e = ring_from_int(kZ, static_cast<long>(rng() % 21) - 10);
        RingElem d1 = det_bareiss(m);
        Frac d2 = det_frac(to_qmat(m));
        CHECK(frac_of(d1) == d2);
    }
    auto s5 = RingSpec::poly_mod_p(5);
    for (int it = 0; it < 100; ++it) {
        RMat m = RMat::zeros(s5, 3, 3);
        for (auto& e : m.a) {
            std::vector<std::uint32_t> c;
            for (int k = 0; k <= static_cast<int>(rng() % 3); ++k)
                c.push_back(static_cast<std::uint32_t>(rng() % 5));
            FpPoly f;
            f.p = 5;
            f.c = std::move(c);
            f.trim();
            e = RingElem(std::move(f));
        }
        CHECK(frac_of(det_bareiss(m)) == det_frac(to_qmat(m)));
    }
}

TEST_CASE("adjugate identity") {
    RMat m = mat3(kZ, {3, 0, 0, -2, 1, 0, -4, 0, 1});
    RMat adj = adjugate(m);
    RingElem det = det_bareiss(m);
    RMat prod = adj * m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(prod.at(i, j) == (i == j ? det : ring_zero(kZ)));
}

TEST_CASE("qmat inverse") {
    RMat m = mat3(kZ, {3, 0, 0, -2, 1, 0, -4, 0, 1});
    QMat inv = qmat_inverse(to_qmat(m));
    QMat prod = to_qmat(m) * inv;
    CHECK(prod == QMat::identity(kZ, 3));
    RMat sing = mat3(kZ, {1, 2, 3, 2, 4, 6, 0, 0, 1});
    CHECK_THROWS_AS(qmat_inverse(to_qmat(sing)), std::domain_error);
    CHECK(is_zero(det_bareiss(sing)));
}

TEST_CASE("row_times_mat matches full product") {
    std::mt19937_64 rng(4);
    for (int it = 0; it < 50; ++it) {
        RMat m = RMat::zeros(kZ, 3, 3);
        for (auto& e : m.a) e = ring_from_int(kZ, static_cast<long>(rng() % 19) - 9);
        std::vector<RingElem> v = {ring_from_int(kZ, static_cast<long>(rng() % 9) - 4),
                                   ring_from_int(kZ, static_cast<long>(rng() % 9) - 4),
                                   ring_from_int(kZ, static_cast<long>(rng() % 9) - 4)};
        auto r = row_times_mat(v, m);
        for (int j = 0; j < 3; ++j) {
            RingElem expect = ring_zero(kZ);
            for (int i = 0; i < 3; ++i) expect = expect + v[i] * m.at(i, j);
            CHECK(r[j] == expect);
        }
    }
}

}   // TEST_SUITE

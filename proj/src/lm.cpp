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

#include "lmrep/lm.hpp"

namespace lmrep {

RMat ideal_to_matrix(const IdealLat& b) {
    RMat num = b.h * b.ctx->theta * adjugate(b.h);
    return divexact_mat(num, ideal_norm(b));
}

IdealLat matrix_to_ideal(const RMat& m, OrderCtxPtr ctx) {
    if (m.rows != ctx->n || m.cols != ctx->n || charpoly(m) != ctx->f)
        throw std::domain_error("matrix not in correspondence scope");
    const int n = ctx->n;
    const RingSpec& spec = ctx->ring;
    FieldElem zero = field_elem(ctx, std::vector<Frac>(n, frac_of(ring_zero(spec))));
    std::vector<Frac> theta_c(n, frac_of(ring_zero(spec)));
    theta_c[1] = frac_of(ring_one(spec));
    FieldElem theta_fe = field_elem(ctx, std::move(theta_c));

    // e = M - theta I over L, then Gauss-Jordan; the kernel is 1-dimensional
    std::vector<std::vector<FieldElem>> e(n, std::vector<FieldElem>(n, zero));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<Frac> c(n, frac_of(ring_zero(spec)));
            c[0] = frac_of(m.at(i, j));
            FieldElem entry = field_elem(ctx, std::move(c));
            e[i][j] = (i == j) ? entry - theta_fe : entry;
        }
    std::vector<int> pivot_row_of_col(n, -1);
    int rank = 0;
    for (int col = 0; col < n; ++col) {
        int pr = -1;
        for (int i = rank; i < n; ++i)
            if (!e[i][col].is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(e[rank], e[pr]);
        FieldElem inv = field_inv(e[rank][col]);
        for (int j = 0; j < n; ++j) e[rank][j] = e[rank][j] * inv;
        for (int i = 0; i < n; ++i) {
            if (i == rank || e[i][col].is_zero()) continue;
            FieldElem factor = e[i][col];
            for (int j = 0; j < n; ++j) e[i][j] = e[i][j] - factor * e[rank][j];
        }
        pivot_row_of_col[col] = rank;
        ++rank;
    }
    if (rank != n - 1) throw std::logic_error("eigenspace dimension unexpected");
    int free_col = -1;
    for (int col = 0; col < n; ++col)
        if (pivot_row_of_col[col] < 0) free_col = col;
    std::vector<FieldElem> v(n, zero);
    v[free_col] = field_elem(ctx, [&] {
        std::vector<Frac> c(n, frac_of(ring_zero(spec)));
        c[0] = frac_of(ring_one(spec));
        return c;
    }());
    for (int col = 0; col < n; ++col) {
        int pr = pivot_row_of_col[col];
        if (pr >= 0) v[col] = zero - e[pr][free_col];
    }
    // clear denominators across all coordinates, then strip the content
    RingElem den = ring_one(spec);
    for (const auto& vi : v)
        for (const auto& fr : vi.coords) den = lcm(den, fr.den);
    RMat big = RMat::zeros(spec, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Frac& fr = v[i].coords[j];
            big.at(i, j) = fr.num * divexact(den, fr.den);
        }
    RingElem ct = ring_zero(spec);
    for (const auto& x : big.a)
        if (!is_zero(x)) ct = is_zero(ct) ? x : gcd(ct, x);
    if (is_zero(ct)) throw std::logic_error("zero eigenvector");
    if (!is_unit(ct)) big = divexact_mat(big, ct);
    std::vector<OrderElem> gens;
    gens.reserve(n);
    for (int i = 0; i < n; ++i) {
        std::vector<RingElem> c;
        c.reserve(n);
        for (int j = 0; j < n; ++j) c.push_back(big.at(i, j));
        gens.push_back(order_elem(ctx, std::move(c)));
    }
    return ideal_from_generators(gens);
}

std::vector<RingElem> u_values(const RingElem& z, const OrderCtx& ctx) {
    const int n = ctx.n;
    std::vector<RingElem> u;
    u.reserve(n - 1);
    RingElem s = z + ctx.f.coeff(n - 1);
    u.push_back(-s);
    for (int i = 2; i <= n - 1; ++i) {
        s = z * s + ctx.f.coeff(n - i);
        u.push_back(-s);
    }
    return u;
}

RMat cf_matrix(const DegreeOneForm& form, const OrderCtx& ctx) {
    const int n = ctx.n;
    if (!divides(form.a, poly_eval(ctx.f, form.z)))
        throw std::domain_error("a does not divide f(z)");
    RingElem corner = -divexact(poly_eval(ctx.f, form.z), form.a);
    std::vector<RingElem> u = u_values(form.z, ctx);
    RMat c = RMat::zeros(ctx.ring, n, n);
    for (int i = 0; i + 2 < n; ++i) c.at(i, i + 1) = ring_one(ctx.ring);
    for (int j = 0; j + 1 < n; ++j) c.at(n - 2, j) = u[n - 2 - j];
    c.at(n - 2, n - 1) = corner;
    c.at(n - 1, 0) = form.a;
    c.at(n - 1, n - 1) = form.z;
    return c;
}

RMat tau_matrix(const RingElem& z, const OrderCtx& ctx) {
    RMat tau = RMat::identity(ctx.ring, ctx.n);
    for (int i = 2; i < ctx.n; ++i) tau.at(i, i - 1) = -z;
    return tau;
}

RMat cyclic_v(const OrderCtx& ctx) {
    RMat v = RMat::zeros(ctx.ring, ctx.n, ctx.n);
    for (int i = 0; i + 1 < ctx.n; ++i) v.at(i, i + 1) = ring_one(ctx.ring);
    v.at(ctx.n - 1, 0) = ring_one(ctx.ring);
    return v;
}

RMat sigma_matrix(const OrderCtx& ctx) {
    // band rule sigma[i][j] = k_{n-(i-j)} below the diagonal from column 2 on;
    // the display in the source material is off by one and is corrected here,
    // validated through the conjugation identity
    const int n = ctx.n;
    RMat s = RMat::identity(ctx.ring, n);
    for (int i = 2; i < n; ++i)
        for (int j = 1; j < i; ++j) s.at(i, j) = ctx.f.coeff(n - (i - j));
    return s;
}

RMat antidiag_w(const OrderCtx& ctx) {
    RMat w = RMat::zeros(ctx.ring, ctx.n, ctx.n);
    for (int i = 0; i < ctx.n; ++i) w.at(i, ctx.n - 1 - i) = ring_one(ctx.ring);
    return w;
}

namespace {

/// kappa T(theta) kappa^{-1}, integral whenever a | f(z).
RMat kappa_conjugate(const DegreeOneForm& form, const OrderCtx& ctx) {
    RMat k = kappa(form, ctx);
    RMat num = k * ctx.theta * adjugate(k);
    return divexact_mat(num, normalize_unit(det_bareiss(k)).normal);
}

}   // namespace

RMat cf_via_conjugation(const DegreeOneForm& form, const OrderCtx& ctx) {
    RMat x = kappa_conjugate(form, ctx);
    RMat tau = tau_matrix(form.z, ctx);
    RMat v = cyclic_v(ctx);
    RMat y = v * tau * x * adjugate(tau) * transpose(v);
    if (y != cf_matrix(form, ctx))
        throw std::logic_error("conjugation route disagrees with the closed form");
    return y;
}

RMat rehm_form(const DegreeOneForm& form, const OrderCtx& ctx) {
    const int n = ctx.n;
    RingElem corner = -divexact(poly_eval(ctx.f, form.z), form.a);
    std::vector<RingElem> u = u_values(form.z, ctx);
    RMat at = RMat::zeros(ctx.ring, n, n);
    for (int i = 1; i + 1 < n; ++i) at.at(i, i - 1) = ring_one(ctx.ring);
    for (int i = 0; i + 1 < n; ++i) at.at(i, n - 2) = u[n - 2 - i];
    at.at(n - 1, n - 2) = form.a;
    at.at(0, n - 1) = corner;
    at.at(n - 1, n - 1) = form.z;
    RMat x = kappa_conjugate(form, ctx);
    RMat sigma = sigma_matrix(ctx);
    RMat w = antidiag_w(ctx);
    RMat y = w * sigma * x * adjugate(sigma) * w;
    if (y != at) throw std::logic_error("Rehm conjugation disagrees with the display form");
    return at;
}

Representative representative_for_ideal(const IdealLat& b) {
    const OrderCtx& ctx = *b.ctx;
    DegreeOneForm form{ring_one(ctx.ring), ring_zero(ctx.ring)};
    if (!b.is_unit_ideal()) {
        auto d1 = degree_one_form(b);
        if (!d1) throw std::domain_error("no degree-one form; pick another class representative");
        form = *d1;
    }
    RMat c = cf_via_conjugation(form, ctx);
    if (charpoly(c) != ctx.f) throw std::logic_error("representative has wrong charpoly");
    return Representative{form, std::move(c), kappa(form, ctx), b};
}

}   // namespace lmrep

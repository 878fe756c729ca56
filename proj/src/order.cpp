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

#include "lmrep/order.hpp"

namespace lmrep {

RMat companion(const RPoly& f) {
    if (!f.is_monic()) throw std::domain_error("companion matrix needs a monic polynomial");
    int n = f.degree();
    if (n < 2) throw std::domain_error("companion matrix needs degree >= 2");
    RMat t = RMat::zeros(f.spec, n, n);
    for (int i = 0; i + 1 < n; ++i) t.at(i, i + 1) = ring_one(f.spec);
    for (int j = 0; j < n; ++j) t.at(n - 1, j) = -f.coeff(j);
    return t;
}

// --- charpoly ------------------------------------------------------------------

namespace {

using PMat = std::vector<std::vector<RPoly>>;

RPoly det_cofactor(const PMat& m, std::vector<int> cols) {
    size_t row = m.size() - cols.size();
    if (cols.size() == 1) return m[row][cols[0]];
    RPoly acc = RPoly::zero(m[0][0].spec);
    for (size_t k = 0; k < cols.size(); ++k) {
        const RPoly& entry = m[row][cols[k]];
        if (entry.is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        for (size_t j = 0; j < cols.size(); ++j)
            if (j != k) rest.push_back(cols[j]);
        RPoly minor = det_cofactor(m, std::move(rest));
        RPoly term = entry * minor;
        acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

RPoly det_bareiss_poly(PMat m) {
    const RingSpec& spec = m[0][0].spec;
    int n = static_cast<int>(m.size());
    RPoly prev = RPoly::constant(spec, ring_one(spec));
    bool negate = false;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k].is_zero()) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) {
                    swap = i;
                    break;
                }
            if (swap < 0) return RPoly::zero(spec);
            std::swap(m[k], m[swap]);
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = poly_divexact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}   // namespace

RPoly charpoly(const RMat& m) {
    if (m.rows != m.cols) throw std::logic_error("charpoly of non-square matrix");
    int n = m.rows;
    const RingSpec& spec = m.spec;
    if (n == 0) return RPoly::constant(spec, ring_one(spec));
    PMat xm(n, std::vector<RPoly>(n, RPoly::zero(spec)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<RingElem> c = {-m.at(i, j)};
            if (i == j) c.push_back(ring_one(spec));
            xm[i][j] = RPoly::from_coeffs(spec, std::move(c));
        }
    if (n <= 4) {
        std::vector<int> cols(n);
        for (int j = 0; j < n; ++j) cols[j] = j;
        return det_cofactor(xm, std::move(cols));
    }
    return det_bareiss_poly(std::move(xm));
}

// --- OrderCtx -------------------------------------------------------------------

OrderCtxPtr OrderCtx::create(RingSpec ring, RPoly f, std::string var, bool assert_irreducible) {
    if (!f.is_monic() || f.degree() < 2)
        throw std::domain_error("order needs a monic defining polynomial of degree >= 2");
    if (!assert_irreducible) {
        if (f.degree() >= 4) throw std::domain_error("irreducibility must be asserted by caller");
        if (!irreducible_low_degree(f))
            throw std::domain_error("defining polynomial is reducible");
    }
    auto ctx = std::make_shared<OrderCtx>();
    ctx->ring = std::move(ring);
    ctx->n = f.degree();
    ctx->var = std::move(var);
    ctx->irreducibility_asserted = assert_irreducible;
    ctx->theta = companion(f);
    ctx->f = std::move(f);
    ctx->theta_powers.reserve(ctx->n);
    RMat pw = RMat::identity(ctx->ring, ctx->n);
    for (int j = 0; j < ctx->n; ++j) {
        ctx->theta_powers.push_back(pw);
        if (j + 1 < ctx->n) pw = pw * ctx->theta;
    }
    return ctx;
}

// --- OrderElem --------------------------------------------------------------------

OrderElem order_elem(OrderCtxPtr ctx, std::vector<RingElem> coords) {
    if (static_cast<int>(coords.size()) != ctx->n)
        throw std::logic_error("coordinate length mismatch");
    return {std::move(ctx), std::move(coords)};
}

OrderElem order_from_int(OrderCtxPtr ctx, long v) {
    std::vector<RingElem> c(ctx->n, ring_zero(ctx->ring));
    c[0] = ring_from_int(ctx->ring, v);
    return {std::move(ctx), std::move(c)};
}

OrderElem order_from_poly(OrderCtxPtr ctx, const RPoly& g) {
    RPoly r = poly_divmod(g, ctx->f).rem;
    std::vector<RingElem> c(ctx->n, ring_zero(ctx->ring));
    for (int i = 0; i <= r.degree(); ++i) c[i] = r.c[i];
    return {std::move(ctx), std::move(c)};
}

OrderElem operator+(const OrderElem& a, const OrderElem& b) {
    std::vector<RingElem> c(a.coords.size(), ring_zero(a.ctx->ring));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] + b.coords[i];
    return {a.ctx, std::move(c)};
}

OrderElem operator-(const OrderElem& a, const OrderElem& b) {
    std::vector<RingElem> c(a.coords.size(), ring_zero(a.ctx->ring));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] - b.coords[i];
    return {a.ctx, std::move(c)};
}

OrderElem operator*(const OrderElem& a, const OrderElem& b) {
    // coords(a*b) = coords(a) * T(b)
    return {a.ctx, row_times_mat(a.coords, regular_rep(b))};
}

bool is_zero(const OrderElem& a) {
    for (const auto& x : a.coords)
        if (!is_zero(x)) return false;
    return true;
}

RMat regular_rep(const OrderElem& g) {
    const OrderCtx& ctx = *g.ctx;
    RMat acc = RMat::zeros(ctx.ring, ctx.n, ctx.n);
    for (int j = 0; j < ctx.n; ++j) {
        if (is_zero(g.coords[j])) continue;
        acc = acc + g.coords[j] * ctx.theta_powers[j];
    }
    return acc;
}

RingElem norm_elem(const OrderElem& g) { return det_bareiss(regular_rep(g)); }

// --- FieldElem ---------------------------------------------------------------------

FieldElem field_elem(OrderCtxPtr ctx, std::vector<Frac> coords) {
    if (static_cast<int>(coords.size()) != ctx->n)
        throw std::logic_error("coordinate length mismatch");
    return {std::move(ctx), std::move(coords)};
}

FieldElem to_field(const OrderElem& a) {
    std::vector<Frac> c;
    c.reserve(a.coords.size());
    for (const auto& x : a.coords) c.push_back(frac_of(x));
    return {a.ctx, std::move(c)};
}

bool FieldElem::is_zero() const {
    for (const auto& x : coords)
        if (!x.is_zero()) return false;
    return true;
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    std::vector<Frac> c(a.coords.size(), frac_of(ring_zero(a.ctx->ring)));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] + b.coords[i];
    return {a.ctx, std::move(c)};
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    std::vector<Frac> c(a.coords.size(), frac_of(ring_zero(a.ctx->ring)));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] - b.coords[i];
    return {a.ctx, std::move(c)};
}

namespace {

KPoly to_kpoly(const FieldElem& a) {
    return KPoly::from_coeffs(a.ctx->ring, a.coords);
}

FieldElem from_kpoly(OrderCtxPtr ctx, const KPoly& g) {
    KPoly r = kpoly_divmod(g, KPoly::from(ctx->f)).rem;
    std::vector<Frac> c(ctx->n, frac_of(ring_zero(ctx->ring)));
    for (int i = 0; i <= r.degree(); ++i) c[i] = r.c[i];
    return {std::move(ctx), std::move(c)};
}

}   // namespace

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    return from_kpoly(a.ctx, to_kpoly(a) * to_kpoly(b));
}

FieldElem field_inv(const FieldElem& a) {
    if (a.is_zero()) throw std::domain_error("inverse of zero");
    auto e = kpoly_gcd_ext(to_kpoly(a), KPoly::from(a.ctx->f));
    if (e.g.degree() != 0)
        throw std::domain_error("defining polynomial is reducible (nontrivial gcd)");
    return from_kpoly(a.ctx, e.s);
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * field_inv(b); }

QMat regular_rep_field(const FieldElem& g) {
    const OrderCtx& ctx = *g.ctx;
    QMat acc = QMat::zeros(ctx.ring, ctx.n, ctx.n);
    for (int j = 0; j < ctx.n; ++j) {
        if (g.coords[j].is_zero()) continue;
        QMat pw = to_qmat(ctx.theta_powers[j]);
        for (int i = 0; i < ctx.n; ++i)
            for (int k = 0; k < ctx.n; ++k)
                acc.at(i, k) = acc.at(i, k) + g.coords[j] * pw.at(i, k);
    }
    return acc;
}

Frac norm_field(const FieldElem& g) { return det_frac(regular_rep_field(g)); }

FieldElemParts split_denominator(const FieldElem& g) {
    RingElem den = ring_one(g.ctx->ring);
    for (const auto& x : g.coords) den = lcm(den, x.den);
    std::vector<RingElem> num;
    num.reserve(g.coords.size());
    for (const auto& x : g.coords) num.push_back(x.num * divexact(den, x.den));
    return {std::move(num), std::move(den)};
}

}   // namespace lmrep

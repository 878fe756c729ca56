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

#include "lmrep/ideal.hpp"

#include <algorithm>

#include "lmrep/detail/expr.hpp"

namespace lmrep {

// --- Hermite normal form --------------------------------------------------------

RMat hnf_rows(const RMat& m) {
    const int n = m.cols;
    if (m.rows < n) throw std::domain_error("lattice not full rank");
    // active working rows; pivots are extracted column by column from the right
    std::vector<std::vector<RingElem>> active;
    active.reserve(m.rows);
    for (int i = 0; i < m.rows; ++i) {
        std::vector<RingElem> row;
        row.reserve(n);
        bool nonzero = false;
        for (int j = 0; j < n; ++j) {
            row.push_back(m.at(i, j));
            nonzero = nonzero || !is_zero(row.back());
        }
        if (nonzero) active.push_back(std::move(row));
    }
    std::vector<std::vector<RingElem>> pivot(n);
    for (int col = n - 1; col >= 0; --col) {
        int first = -1;
        for (size_t i = 0; i < active.size(); ++i)
            if (!is_zero(active[i][col])) {
                first = static_cast<int>(i);
                break;
            }
        if (first < 0) throw std::domain_error("lattice not full rank");
        std::vector<RingElem> acc = std::move(active[first]);
        active.erase(active.begin() + first);
        for (auto& row : active) {
            if (is_zero(row[col])) continue;
            auto e = gcd_ext(acc[col], row[col]);
            RingElem ca = divexact(acc[col], e.g), cr = divexact(row[col], e.g);
            for (int j = 0; j <= col; ++j) {
                RingElem na = e.s * acc[j] + e.t * row[j];
                RingElem nr = acc[j] * cr - row[j] * ca;
                acc[j] = std::move(na);
                row[j] = -nr;
            }
        }
        // drop rows that became zero
        std::erase_if(active, [&](const std::vector<RingElem>& row) {
            for (const auto& x : row)
                if (!is_zero(x)) return false;
            return true;
        });
        pivot[col] = std::move(acc);
    }
    RMat h = RMat::zeros(m.spec, n, n);
    for (int i = 0; i < n; ++i) {
        auto nu = normalize_unit(pivot[i][i]);
        RingElem ui = unit_inv(nu.unit);
        for (int j = 0; j <= i; ++j) h.at(i, j) = ui * pivot[i][j];
    }
    // reduce below-diagonal entries to canonical residues, rightmost first
    for (int i = 1; i < n; ++i)
        for (int j = i - 1; j >= 0; --j) {
            RingElem q = euclid_divmod(h.at(i, j), h.at(j, j)).quot;
            if (is_zero(q)) continue;
            for (int k = 0; k <= j; ++k) h.at(i, k) = h.at(i, k) - q * h.at(j, k);
        }
    return h;
}

std::optional<std::vector<RingElem>> solve_in_hnf(const RMat& h, const std::vector<RingElem>& v) {
    const int n = h.cols;
    std::vector<RingElem> r = v;
    std::vector<RingElem> c(n, ring_zero(h.spec));
    for (int j = n - 1; j >= 0; --j) {
        if (is_zero(r[j])) continue;
        auto [q, rem] = euclid_divmod(r[j], h.at(j, j));
        if (!is_zero(rem)) return std::nullopt;
        c[j] = q;
        for (int k = 0; k <= j; ++k) r[k] = r[k] - q * h.at(j, k);
    }
    return c;
}

// --- IdealLat ----------------------------------------------------------------------

bool IdealLat::is_unit_ideal() const { return h == RMat::identity(ctx->ring, ctx->n); }

OrderElem IdealLat::basis_elem(int i) const {
    std::vector<RingElem> c;
    c.reserve(ctx->n);
    for (int j = 0; j < ctx->n; ++j) c.push_back(h.at(i, j));
    return order_elem(ctx, std::move(c));
}

IdealLat ideal_from_hnf(OrderCtxPtr ctx, RMat h) {
    if (h.rows != ctx->n || h.cols != ctx->n) throw std::logic_error("HNF dimension mismatch");
    for (int i = 0; i < h.rows; ++i) {
        if (is_zero(h.at(i, i))) throw std::logic_error("HNF with zero diagonal entry");
        for (int j = i + 1; j < h.cols; ++j)
            if (!is_zero(h.at(i, j))) throw std::logic_error("HNF not lower triangular");
    }
    IdealLat b{std::move(ctx), std::move(h)};
    // theta-stability: H T(theta) H^{-1} must be integral, which over A means
    // det(H) divides every entry of H T adj(H)
    RMat num = b.h * b.ctx->theta * adjugate(b.h);
    RingElem det = ideal_norm(b);
    for (const auto& e : num.a)
        if (!divides(det, e))
            throw std::logic_error("lattice is not an ideal (not theta-stable)");
    return b;
}

IdealLat ideal_from_generators(const std::vector<OrderElem>& gens) {
    if (gens.empty()) throw std::domain_error("ideal needs at least one generator");
    OrderCtxPtr ctx = gens[0].ctx;
    bool all_zero = true;
    for (const auto& g : gens) all_zero = all_zero && is_zero(g);
    if (all_zero) throw std::domain_error("ideal needs a nonzero generator");
    const int n = ctx->n;
    RMat stack = RMat::zeros(ctx->ring, static_cast<int>(gens.size()) * n, n);
    int r = 0;
    for (const auto& g : gens) {
        RMat rep = regular_rep(g);   // row j is coords of g * theta^j
        for (int j = 0; j < n; ++j, ++r)
            for (int k = 0; k < n; ++k) stack.at(r, k) = rep.at(j, k);
    }
    return ideal_from_hnf(ctx, hnf_rows(stack));
}

IdealLat ideal_from_text(OrderCtxPtr ctx, const std::string& text) {
    std::vector<OrderElem> gens;
    size_t start = 0;
    int depth = 0;
    for (size_t i = 0; i <= text.size(); ++i) {
        if (i < text.size() && text[i] == '(') ++depth;
        if (i < text.size() && text[i] == ')') --depth;
        if (i == text.size() || (text[i] == ',' && depth == 0)) {
            std::string part = text.substr(start, i - start);
            if (part.find_first_not_of(" \t") == std::string::npos)
                throw parse_error("empty ideal generator");
            gens.push_back(order_from_poly(ctx, parse_poly(ctx->ring, ctx->var, part)));
            start = i + 1;
        }
    }
    return ideal_from_generators(gens);
}

IdealLat ideal_mul(const IdealLat& b, const IdealLat& c) {
    if (b.ctx != c.ctx && b.ctx->f != c.ctx->f) throw std::logic_error("ideals from different orders");
    const int n = b.ctx->n;
    RMat stack = RMat::zeros(b.ctx->ring, n * n, n);
    for (int i = 0; i < n; ++i) {
        RMat rep = regular_rep(c.basis_elem(i));
        for (int j = 0; j < n; ++j) {
            std::vector<RingElem> row;
            row.reserve(n);
            for (int k = 0; k < n; ++k) row.push_back(b.h.at(j, k));
            std::vector<RingElem> prod = row_times_mat(row, rep);
            for (int k = 0; k < n; ++k) stack.at(i * n + j, k) = prod[k];
        }
    }
    return ideal_from_hnf(b.ctx, hnf_rows(stack));
}

IdealLat ideal_pow(const IdealLat& b, unsigned e) {
    IdealLat acc = ideal_from_hnf(b.ctx, RMat::identity(b.ctx->ring, b.ctx->n));
    for (unsigned i = 0; i < e; ++i) acc = ideal_mul(acc, b);
    return acc;
}

IdealLat ideal_scale(const RingElem& a, const IdealLat& b) {
    if (is_zero(a)) throw std::domain_error("scaling an ideal by zero");
    RingElem an = normalize_unit(a).normal;
    return IdealLat{b.ctx, an * b.h};
}

RingElem contract_to_A(const IdealLat& b) { return b.h.at(0, 0); }

RingElem ideal_norm(const IdealLat& b) {
    RingElem acc = ring_one(b.ctx->ring);
    for (int i = 0; i < b.h.rows; ++i) acc = acc * b.h.at(i, i);
    return acc;
}

int ideal_cmp(const IdealLat& a, const IdealLat& b) {
    int c = cmp(ideal_norm(a), ideal_norm(b));
    if (c) return c;
    for (size_t i = 0; i < a.h.a.size(); ++i) {
        c = cmp(a.h.a[i], b.h.a[i]);
        if (c) return c;
    }
    return 0;
}

// --- degree-one machinery -------------------------------------------------------------

DegreeOneForm degree_one_form_of(const OrderCtx& ctx, RingElem a, RingElem z) {
    RingElem an = normalize_unit(a).normal;
    if (is_zero(an)) throw std::domain_error("a must be nonzero");
    if (!divides(an, poly_eval(ctx.f, z))) throw std::domain_error("a does not divide f(z)");
    RingElem zr = is_unit(an) ? ring_zero(ctx.ring) : euclid_divmod(z, an).rem;
    return DegreeOneForm{std::move(an), std::move(zr)};
}

std::optional<DegreeOneForm> degree_one_form(const IdealLat& b) {
    if (b.is_unit_ideal()) throw std::domain_error("proper ideal required");
    const int n = b.ctx->n;
    for (int i = 1; i < n; ++i)
        if (!is_unit(b.h.at(i, i))) return std::nullopt;
    RingElem a = b.h.at(0, 0);
    RingElem z = euclid_divmod(-b.h.at(1, 0), a).rem;
    // theta = z mod b forces f(z) = 0 mod a
    if (!divides(a, poly_eval(b.ctx->f, z)))
        throw std::logic_error("degree-one extraction violated f(z) = 0 mod a");
    return DegreeOneForm{std::move(a), std::move(z)};
}

RMat kappa(const DegreeOneForm& form, const OrderCtx& ctx) {
    if (!divides(form.a, poly_eval(ctx.f, form.z)))
        throw std::domain_error("a does not divide f(z)");
    RMat k = RMat::identity(ctx.ring, ctx.n);
    k.at(0, 0) = form.a;
    RingElem pw = form.z;
    for (int i = 1; i < ctx.n; ++i) {
        k.at(i, 0) = -pw;
        pw = pw * form.z;
    }
    return k;
}

RMat lambda_matrix(const RingElem& z, const OrderCtx& ctx) {
    RMat l = RMat::identity(ctx.ring, ctx.n);
    l.at(0, 0) = -poly_eval(ctx.f, z);
    RingElem pw = z;
    for (int i = 1; i < ctx.n; ++i) {
        l.at(i, 0) = -pw;
        pw = pw * z;
    }
    return l;
}

// --- colon lattice ----------------------------------------------------------------------

namespace {

// Size reduction of an invertible basis (rows). Keeps the row span; makes the
// rows short so witness searches over bounded coordinates succeed early.

void reduce_rows_integer(RMat& b) {
    const int n = b.rows;
    auto dot = [&](int i, int j) {
        mpz_class acc = 0;
        for (int k = 0; k < b.cols; ++k) acc += b.at(i, k).z() * b.at(j, k).z();
        return acc;
    };
    bool changed = true;
    int guard = 0;
    while (changed) {
        if (++guard > 10000) throw std::logic_error("integer basis reduction did not settle");
        changed = false;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                mpz_class den = dot(j, j);
                if (den == 0) continue;
                mpz_class num = dot(i, j);
                // nearest integer to num/den
                mpz_class mu;
                mpz_class t = 2 * num + den;
                mpz_fdiv_q(mu.get_mpz_t(), t.get_mpz_t(), mpz_class(2 * den).get_mpz_t());
                if (mu == 0) continue;
                mpz_class before = dot(i, i);
                std::vector<RingElem> saved;
                for (int k = 0; k < b.cols; ++k) {
                    saved.push_back(b.at(i, k));
                    b.at(i, k) = RingElem(b.at(i, k).z() - mu * b.at(j, k).z());
                }
                if (dot(i, i) < before) {
                    changed = true;
                } else {
                    for (int k = 0; k < b.cols; ++k) b.at(i, k) = saved[k];
                }
            }
    }
}

void reduce_rows_poly(RMat& b) {
    const int n = b.rows;
    auto row_deg = [&](int i) {
        int d = -1;
        for (int k = 0; k < b.cols; ++k) d = std::max(d, b.at(i, k).fp().degree());
        return d;
    };
    auto pivot_col = [&](int i) {
        int d = row_deg(i), piv = -1;
        for (int k = 0; k < b.cols; ++k)
            if (b.at(i, k).fp().degree() == d) piv = k;
        return piv;   // rightmost entry of maximal degree
    };
    std::uint32_t p = b.spec.p;
    int guard = 0;
    while (true) {
        if (++guard > 100000) throw std::logic_error("polynomial basis reduction did not settle");
        int ri = -1, rj = -1;
        for (int i = 0; i < n && ri < 0; ++i)
            for (int j = i + 1; j < n && ri < 0; ++j)
                if (pivot_col(i) == pivot_col(j)) {
                    if (row_deg(i) >= row_deg(j)) {
                        ri = i;
                        rj = j;
                    } else {
                        ri = j;
                        rj = i;
                    }
                }
        if (ri < 0) break;
        int shift = row_deg(ri) - row_deg(rj);
        int piv = pivot_col(ri);
        std::uint32_t lci = b.at(ri, piv).fp().c.back();
        std::uint32_t lcj = b.at(rj, piv).fp().c.back();
        FpPoly factor;
        factor.p = p;
        factor.c.assign(shift + 1, 0);
        // lci / lcj scaled by t^shift
        std::uint64_t inv = 1, base = lcj % p;
        for (std::uint32_t e = p - 2; e; e >>= 1) {   // p prime: inverse by Fermat
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
        }
        factor.c[shift] = static_cast<std::uint32_t>(lci * inv % p);
        RingElem f(factor);
        for (int k = 0; k < b.cols; ++k) b.at(ri, k) = b.at(ri, k) - f * b.at(rj, k);
    }
}

void canonicalize_reduced_rows(RMat& b) {
    const int n = b.rows;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < b.cols; ++k)
            if (!is_zero(b.at(i, k))) {
                RingElem u = unit_inv(normalize_unit(b.at(i, k)).unit);
                if (!is_one(u))
                    for (int m = 0; m < b.cols; ++m) b.at(i, m) = u * b.at(i, m);
                break;
            }
    std::vector<std::vector<RingElem>> rows(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < b.cols; ++k) rows[i].push_back(b.at(i, k));
    // descending lex, so colon(O, O) comes out as the identity
    std::sort(rows.begin(), rows.end(), [&](const auto& x, const auto& y) {
        for (size_t k = 0; k < x.size(); ++k) {
            int c = cmp(x[k], y[k]);
            if (c) return c > 0;
        }
        return false;
    });
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < b.cols; ++k) b.at(i, k) = rows[i][k];
}

void reduce_basis(RMat& b) {
    if (b.spec.kind == RingKind::Integers)
        reduce_rows_integer(b);
    else
        reduce_rows_poly(b);
    canonicalize_reduced_rows(b);
}

}   // namespace

std::optional<std::vector<RingElem>> solve_in_basis(const RMat& b, const std::vector<RingElem>& v) {
    RingElem det = det_bareiss(b);
    if (is_zero(det)) throw std::logic_error("basis matrix is singular");
    std::vector<RingElem> scaled = row_times_mat(v, adjugate(b));
    std::vector<RingElem> c;
    c.reserve(scaled.size());
    for (const auto& x : scaled) {
        if (!divides(det, x)) return std::nullopt;
        c.push_back(divexact(x, det));
    }
    return c;
}

FieldElem ColonLattice::element(int i) const {
    std::vector<Frac> c;
    c.reserve(basis.cols);
    for (int j = 0; j < basis.cols; ++j) c.push_back(frac_reduce(basis.at(i, j), den));
    return field_elem(ctx, std::move(c));
}

ColonLattice colon_lattice(const IdealLat& b2, const IdealLat& b1) {
    const int n = b1.ctx->n;
    OrderCtxPtr ctx = b1.ctx;
    // x*b1 <= b2 in row coordinates: y T(w_j) in rowspan(H2) for every basis
    // element w_j of b1. The intersection of the lattices rowspan(H2 T(w_j)^{-1})
    // is computed through duality: dual of an intersection is the sum of duals,
    // and the dual of rowspan(B) is rowspan(B^{-T}).
    RingElem e = ideal_norm(b2);
    RMat adj2 = adjugate(b2.h);
    RMat stack = RMat::zeros(ctx->ring, n * n, n);
    for (int j = 0; j < n; ++j) {
        RMat nj = transpose(regular_rep(b1.basis_elem(j)) * adj2);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) stack.at(j * n + r, c) = nj.at(r, c);
    }
    RMat hs = hnf_rows(stack);
    RingElem dhs = ring_one(ctx->ring);
    for (int i = 0; i < n; ++i) dhs = dhs * hs.at(i, i);
    RMat g0 = e * transpose(adjugate(hs));
    RMat hg = hnf_rows(g0);
    // cancel common content with the denominator
    RingElem ct = hg.a[0];
    for (const auto& x : hg.a) ct = gcd(ct, x);
    RingElem common = gcd(ct, dhs);
    if (!is_unit(common)) {
        hg = divexact_mat(hg, common);
        dhs = divexact(dhs, common);
    }
    // short rows keep witness coordinates small in the bounded search
    reduce_basis(hg);
    return ColonLattice{ctx, std::move(hg), normalize_unit(dhs).normal};
}

IdealLat ideal_mul_field(const FieldElem& gamma, const IdealLat& b) {
    if (gamma.is_zero()) throw std::domain_error("zero is not an equivalence witness");
    auto parts = split_denominator(gamma);
    OrderElem num = order_elem(b.ctx, parts.num);
    const int n = b.ctx->n;
    RMat rep = regular_rep(num);
    RMat rows = b.h * rep;
    RMat h = hnf_rows(rows);
    // divide the integral lattice num*b by den
    RMat scaled = RMat::zeros(b.ctx->ring, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            if (!divides(parts.den, h.at(i, j)))
                throw std::domain_error("witness does not map the ideal into O");
            scaled.at(i, j) = divexact(h.at(i, j), parts.den);
        }
    return ideal_from_hnf(b.ctx, std::move(scaled));
}

}   // namespace lmrep

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

#pragma once

#include <optional>
#include <vector>

#include "lmrep/order.hpp"

namespace lmrep {

/// Canonical lower-triangular row Hermite normal form of a full-rank stack
/// of row vectors (m >= n): unique basis with unit-normalized diagonal and
/// each below-diagonal entry reduced modulo the diagonal of its column.
/// Errors with "lattice not full rank" when the rows span less than A^n.
RMat hnf_rows(const RMat& m);

/// Coordinates of v in the row span of a lower-triangular HNF basis, or
/// nullopt when v is not in the lattice.
std::optional<std::vector<RingElem>> solve_in_hnf(const RMat& h, const std::vector<RingElem>& v);

/// Same for an arbitrary invertible row basis (exact solve over K, then an
/// integrality check).
std::optional<std::vector<RingElem>> solve_in_basis(const RMat& b, const std::vector<RingElem>& v);

/// Nonzero ideal of O as its canonical HNF row basis in the power basis
/// (the row for 1 comes first, so A meets the ideal in H[0][0]).
/// Theta-stability is verified at construction.
struct IdealLat {
    OrderCtxPtr ctx;
    RMat h;

    bool operator==(const IdealLat& o) const { return h == o.h; }
    bool operator!=(const IdealLat& o) const { return !(*this == o); }
    bool is_unit_ideal() const;
    OrderElem basis_elem(int i) const;
};

/// Wraps an HNF matrix as an ideal, checking the lattice is theta-stable.
IdealLat ideal_from_hnf(OrderCtxPtr ctx, RMat h);

/// HNF of the A-span of { g * theta^i : g in gens, 0 <= i < n }.
IdealLat ideal_from_generators(const std::vector<OrderElem>& gens);

/// Parses comma-separated generator expressions, e.g. "3, x-2".
IdealLat ideal_from_text(OrderCtxPtr ctx, const std::string& text);

IdealLat ideal_mul(const IdealLat& b, const IdealLat& c);
IdealLat ideal_pow(const IdealLat& b, unsigned e);
/// The lattice a*b for a nonzero scalar (unit part of a is dropped).
IdealLat ideal_scale(const RingElem& a, const IdealLat& b);

/// Generator of A meet b, unit-normalized: the (1,1) entry of the HNF.
RingElem contract_to_A(const IdealLat& b);

/// Index [O : b] as the unit-normalized determinant of the HNF.
RingElem ideal_norm(const IdealLat& b);

/// Canonical total order: by norm, then lexicographic HNF comparison.
int ideal_cmp(const IdealLat& a, const IdealLat& b);

/// The pair (a, z) with a | f(z) describing the degree-one ideal
/// (theta - z, a); z is the canonical residue modulo a.
struct DegreeOneForm {
    RingElem a, z;

    bool operator==(const DegreeOneForm& o) const { return a == o.a && z == o.z; }
};

/// Validates a | f(z) and reduces z.
DegreeOneForm degree_one_form_of(const OrderCtx& ctx, RingElem a, RingElem z);

/// Some (a, z) iff the HNF diagonal is (a, 1, ..., 1); None when some later
/// diagonal entry is a non-unit (A + b != O). Errors on the unit ideal.
std::optional<DegreeOneForm> degree_one_form(const IdealLat& b);

/// The ideal matrix kappa(a, z): first column (a, -z, ..., -z^{n-1}),
/// identity elsewhere. Kept in the unreduced display form; hnf_rows(kappa)
/// recovers the canonical basis.
RMat kappa(const DegreeOneForm& form, const OrderCtx& ctx);

/// Ideal matrix of the principal ideal (theta - z): first column
/// (-f(z), -z, ..., -z^{n-1}), identity elsewhere.
RMat lambda_matrix(const RingElem& z, const OrderCtx& ctx);

/// A-basis of (b2 : b1) = { x in L : x*b1 <= b2 }: an integral size-reduced
/// row basis over a single unit-normalized denominator. Rows are kept short
/// (pairwise reduction over Z, weak Popov form over F_p[t]) so that witness
/// coordinates in this basis stay inside small search boxes.
struct ColonLattice {
    OrderCtxPtr ctx;
    RMat basis;
    RingElem den;

    FieldElem element(int i) const;
    int rank() const { return basis.rows; }
};

ColonLattice colon_lattice(const IdealLat& b2, const IdealLat& b1);

/// Exact lattice of gamma*b (gamma nonzero), used to verify equivalence
/// witnesses; throws if the product is not an integral ideal.
IdealLat ideal_mul_field(const FieldElem& gamma, const IdealLat& b);

}   // namespace lmrep

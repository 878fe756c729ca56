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

#include <memory>
#include <string>
#include <vector>

#include "lmrep/matrix.hpp"
#include "lmrep/poly.hpp"
#include "lmrep/ring.hpp"

namespace lmrep {

/// Companion matrix of a monic f of degree >= 2: superdiagonal of 1s,
/// last row (-k_0, ..., -k_{n-1}).
RMat companion(const RPoly& f);

/// Exact characteristic polynomial det(xI - M), monic. Cofactor expansion
/// for n <= 4, fraction-free elimination over A[x] above that; both are
/// division-safe in every characteristic.
RPoly charpoly(const RMat& m);

struct OrderCtx;
using OrderCtxPtr = std::shared_ptr<const OrderCtx>;

/// The order O = A[x]/(f) with the basis 1, theta, ..., theta^{n-1}.
/// Immutable after construction; the multiplication tensor (the regular
/// representations of the basis powers) is precomputed eagerly.
struct OrderCtx {
    RingSpec ring;
    RPoly f;            // monic, degree n >= 2
    int n = 0;
    std::string var;    // generator symbol for printing ("x", "y")
    bool irreducibility_asserted = false;
    RMat theta;                      // T(theta) = companion(f)
    std::vector<RMat> theta_powers;  // T(theta^j) for j = 0..n-1

    /// Validates monicity and degree; degree <= 3 is checked irreducible
    /// unless asserted, degree >= 4 requires assert_irreducible.
    static OrderCtxPtr create(RingSpec ring, RPoly f, std::string var = "x",
                              bool assert_irreducible = false);
};

/// Element of O as coordinates in the power basis.
struct OrderElem {
    OrderCtxPtr ctx;
    std::vector<RingElem> coords;

    bool operator==(const OrderElem& o) const { return coords == o.coords; }
};

OrderElem order_elem(OrderCtxPtr ctx, std::vector<RingElem> coords);
OrderElem order_from_int(OrderCtxPtr ctx, long v);
/// Reduces a polynomial in theta modulo f into coordinates.
OrderElem order_from_poly(OrderCtxPtr ctx, const RPoly& g);

OrderElem operator+(const OrderElem& a, const OrderElem& b);
OrderElem operator-(const OrderElem& a, const OrderElem& b);
OrderElem operator*(const OrderElem& a, const OrderElem& b);
bool is_zero(const OrderElem& a);

/// Regular representation: T(g) with T(g) (1,...,theta^{n-1})^T = g (...)^T.
RMat regular_rep(const OrderElem& g);

/// N(g) = det T(g).
RingElem norm_elem(const OrderElem& g);

/// Element of L = K(theta) as Frac coordinates in the power basis.
struct FieldElem {
    OrderCtxPtr ctx;
    std::vector<Frac> coords;

    bool operator==(const FieldElem& o) const { return coords == o.coords; }
    bool is_zero() const;
};

FieldElem field_elem(OrderCtxPtr ctx, std::vector<Frac> coords);
FieldElem to_field(const OrderElem& a);

FieldElem operator+(const FieldElem& a, const FieldElem& b);
FieldElem operator-(const FieldElem& a, const FieldElem& b);
FieldElem operator*(const FieldElem& a, const FieldElem& b);
/// Inversion via extended gcd with f in K[x]; a nontrivial gcd proves f
/// reducible and raises a hard error.
FieldElem field_inv(const FieldElem& a);
FieldElem operator/(const FieldElem& a, const FieldElem& b);

QMat regular_rep_field(const FieldElem& g);
Frac norm_field(const FieldElem& g);

/// Writes g = num/den with num in O and den in A (den unit-normalized).
struct FieldElemParts {
    std::vector<RingElem> num;
    RingElem den;
};
FieldElemParts split_denominator(const FieldElem& g);

}   // namespace lmrep

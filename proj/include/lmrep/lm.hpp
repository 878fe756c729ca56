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

#include "lmrep/ideal.hpp"

namespace lmrep {

/// H T(theta) H^{-1}: the similarity-class member attached to an ideal
/// through its canonical HNF basis. Exact; integrality is enforced.
RMat ideal_to_matrix(const IdealLat& b);

/// Inverse direction: an eigenvector of M for the eigenvalue theta spans an
/// ideal in the corresponding class. Requires charpoly(M) = f
/// (error "matrix not in correspondence scope" otherwise).
IdealLat matrix_to_ideal(const RMat& m, OrderCtxPtr ctx);

/// u_1, ..., u_{n-1} with u_i = -(z^i + k_{n-1} z^{i-1} + ... + k_{n-i}).
std::vector<RingElem> u_values(const RingElem& z, const OrderCtx& ctx);

/// The near-companion representative C_f(a,z): shifted-identity top block,
/// row n-1 = (u_{n-1}, ..., u_1, -f(z)/a), bottom row (a, 0, ..., 0, z).
RMat cf_matrix(const DegreeOneForm& form, const OrderCtx& ctx);

/// The same matrix through the explicit conjugators:
/// v tau (kappa T kappa^{-1}) tau^{-1} v^{-1}. Exists as a built-in
/// cross-check; a mismatch with the closed form is an internal error.
RMat cf_via_conjugation(const DegreeOneForm& form, const OrderCtx& ctx);

/// Transposed-flavor representative with last row (0, ..., 0, a, z),
/// produced and verified equal to w sigma (kappa T kappa^{-1}) sigma^{-1} w^{-1}.
RMat rehm_form(const DegreeOneForm& form, const OrderCtx& ctx);

// conjugator builders, exposed for the identity suites
RMat tau_matrix(const RingElem& z, const OrderCtx& ctx);
RMat cyclic_v(const OrderCtx& ctx);
RMat sigma_matrix(const OrderCtx& ctx);
RMat antidiag_w(const OrderCtx& ctx);

/// A degree-one class representative bundle.
struct Representative {
    DegreeOneForm form;
    RMat c;            // C_f(a, z)
    RMat kappa_used;   // the paper-form ideal matrix kappa(a, z)
    IdealLat ideal;
};

/// Assembles (a, z), kappa and C_f(a,z) for a degree-one ideal (or the unit
/// ideal via (1, 0)). Errors with "no degree-one form; pick another class
/// representative" when the ideal has none.
Representative representative_for_ideal(const IdealLat& b);

}   // namespace lmrep

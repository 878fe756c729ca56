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

#include <vector>

#include "lmrep/ring.hpp"

namespace lmrep {

/// Dense matrix over A, row-major.
struct RMat {
    RingSpec spec;
    int rows = 0, cols = 0;
    std::vector<RingElem> a;

    RingElem& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const RingElem& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static RMat zeros(const RingSpec& s, int r, int c);
    static RMat identity(const RingSpec& s, int n);

    bool operator==(const RMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    bool operator!=(const RMat& o) const { return !(*this == o); }
};

RMat operator*(const RMat& x, const RMat& y);
RMat operator+(const RMat& x, const RMat& y);
RMat operator-(const RMat& x, const RMat& y);
RMat operator*(const RingElem& s, const RMat& x);
RMat transpose(const RMat& x);

/// Row vector times matrix.
std::vector<RingElem> row_times_mat(const std::vector<RingElem>& v, const RMat& m);

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
RingElem det_bareiss(const RMat& m);

/// Adjugate of a nonsingular square matrix: adj(M) = det(M) * M^{-1},
/// computed exactly (entries stay in A).
RMat adjugate(const RMat& m);

/// Divides every entry exactly; throws when some entry is not divisible.
RMat divexact_mat(const RMat& m, const RingElem& d);

/// Dense matrix over K = Frac(A).
struct QMat {
    RingSpec spec;
    int rows = 0, cols = 0;
    std::vector<Frac> a;

    Frac& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Frac& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static QMat zeros(const RingSpec& s, int r, int c);
    static QMat identity(const RingSpec& s, int n);

    bool operator==(const QMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

QMat operator*(const QMat& x, const QMat& y);
QMat to_qmat(const RMat& m);

/// Conversion back to A; throws std::domain_error on non-integral entries.
RMat to_rmat(const QMat& m);
bool is_integral(const QMat& m);

/// Gauss-Jordan inverse over K; throws std::domain_error when singular.
QMat qmat_inverse(const QMat& m);
Frac det_frac(const QMat& m);

}   // namespace lmrep

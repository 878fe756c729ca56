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

#include "lmrep/matrix.hpp"

namespace lmrep {

RMat RMat::zeros(const RingSpec& s, int r, int c) {
    RMat m{s, r, c, {}};
    m.a.assign(static_cast<size_t>(r) * c, ring_zero(s));
    return m;
}

RMat RMat::identity(const RingSpec& s, int n) {
    RMat m = zeros(s, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = ring_one(s);
    return m;
}

RMat operator*(const RMat& x, const RMat& y) {
    if (x.cols != y.rows) throw std::logic_error("matrix dimension mismatch");
    RMat r = RMat::zeros(x.spec, x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const RingElem& xik = x.at(i, k);
            if (is_zero(xik)) continue;
            for (int j = 0; j < y.cols; ++j) r.at(i, j) = r.at(i, j) + xik * y.at(k, j);
        }
    return r;
}

RMat operator+(const RMat& x, const RMat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::logic_error("matrix dimension mismatch");
    RMat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = r.a[i] + y.a[i];
    return r;
}

RMat operator-(const RMat& x, const RMat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::logic_error("matrix dimension mismatch");
    RMat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = r.a[i] - y.a[i];
    return r;
}

RMat operator*(const RingElem& s, const RMat& x) {
    RMat r = x;
    for (auto& e : r.a) e = s * e;
    return r;
}

RMat transpose(const RMat& x) {
    RMat r = RMat::zeros(x.spec, x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
    return r;
}

std::vector<RingElem> row_times_mat(const std::vector<RingElem>& v, const RMat& m) {
    if (static_cast<int>(v.size()) != m.rows) throw std::logic_error("matrix dimension mismatch");
    std::vector<RingElem> r(m.cols, ring_zero(m.spec));
    for (int i = 0; i < m.rows; ++i) {
        if (is_zero(v[i])) continue;
        for (int j = 0; j < m.cols; ++j) r[j] = r[j] + v[i] * m.at(i, j);
    }
    return r;
}

RingElem det_bareiss(const RMat& m) {
    if (m.rows != m.cols) throw std::logic_error("determinant of non-square matrix");
    int n = m.rows;
    if (n == 0) return ring_one(m.spec);
    RMat w = m;
    RingElem prev = ring_one(m.spec);
    bool negate = false;
    for (int k = 0; k < n - 1; ++k) {
        if (is_zero(w.at(k, k))) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (!is_zero(w.at(i, k))) {
                    swap = i;
                    break;
                }
            if (swap < 0) return ring_zero(m.spec);
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(swap, j));
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                w.at(i, j) = divexact(w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j), prev);
        prev = w.at(k, k);
    }
    RingElem d = w.at(n - 1, n - 1);
    return negate ? -d : d;
}

RMat divexact_mat(const RMat& m, const RingElem& d) {
    RMat r = m;
    for (auto& e : r.a) e = divexact(e, d);
    return r;
}

QMat QMat::zeros(const RingSpec& s, int r, int c) {
    QMat m{s, r, c, {}};
    m.a.assign(static_cast<size_t>(r) * c, frac_of(ring_zero(s)));
    return m;
}

QMat QMat::identity(const RingSpec& s, int n) {
    QMat m = zeros(s, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = frac_of(ring_one(s));
    return m;
}

QMat operator*(const QMat& x, const QMat& y) {
    if (x.cols != y.rows) throw std::logic_error("matrix dimension mismatch");
    QMat r = QMat::zeros(x.spec, x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Frac& xik = x.at(i, k);
            if (xik.is_zero()) continue;
            for (int j = 0; j < y.cols; ++j) r.at(i, j) = r.at(i, j) + xik * y.at(k, j);
        }
    return r;
}

QMat to_qmat(const RMat& m) {
    QMat r{m.spec, m.rows, m.cols, {}};
    r.a.reserve(m.a.size());
    for (const auto& e : m.a) r.a.push_back(frac_of(e));
    return r;
}

bool is_integral(const QMat& m) {
    for (const auto& e : m.a)
        if (!is_integral(e)) return false;
    return true;
}

RMat to_rmat(const QMat& m) {
    RMat r{m.spec, m.rows, m.cols, {}};
    r.a.reserve(m.a.size());
    for (const auto& e : m.a) {
        if (!is_integral(e)) throw std::domain_error("matrix entry not integral");
        r.a.push_back(e.num);
    }
    return r;
}

QMat qmat_inverse(const QMat& m) {
    if (m.rows != m.cols) throw std::logic_error("inverse of non-square matrix");
    int n = m.rows;
    QMat w = m;
    QMat inv = QMat::identity(m.spec, n);
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (!w.at(i, k).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw std::domain_error("matrix is singular");
        if (pivot != k)
            for (int j = 0; j < n; ++j) {
                std::swap(w.at(k, j), w.at(pivot, j));
                std::swap(inv.at(k, j), inv.at(pivot, j));
            }
        Frac pi = frac_inv(w.at(k, k));
        for (int j = 0; j < n; ++j) {
            w.at(k, j) = pi * w.at(k, j);
            inv.at(k, j) = pi * inv.at(k, j);
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || w.at(i, k).is_zero()) continue;
            Frac factor = w.at(i, k);
            for (int j = 0; j < n; ++j) {
                w.at(i, j) = w.at(i, j) - factor * w.at(k, j);
                inv.at(i, j) = inv.at(i, j) - factor * inv.at(k, j);
            }
        }
    }
    return inv;
}

Frac det_frac(const QMat& m) {
    if (m.rows != m.cols) throw std::logic_error("determinant of non-square matrix");
    int n = m.rows;
    QMat w = m;
    Frac det = frac_of(ring_one(m.spec));
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (!w.at(i, k).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) return frac_of(ring_zero(m.spec));
        if (pivot != k) {
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(pivot, j));
            det = -det;
        }
        det = det * w.at(k, k);
        Frac pi = frac_inv(w.at(k, k));
        for (int i = k + 1; i < n; ++i) {
            if (w.at(i, k).is_zero()) continue;
            Frac factor = pi * w.at(i, k);
            for (int j = k; j < n; ++j) w.at(i, j) = w.at(i, j) - factor * w.at(k, j);
        }
    }
    return det;
}

RMat adjugate(const RMat& m) {
    if (m.rows != m.cols) throw std::logic_error("adjugate of non-square matrix");
    RingElem det = det_bareiss(m);
    if (is_zero(det)) throw std::domain_error("adjugate of singular matrix");
    QMat inv = qmat_inverse(to_qmat(m));
    QMat adj = QMat::zeros(m.spec, m.rows, m.cols);
    Frac d = frac_of(det);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) adj.at(i, j) = d * inv.at(i, j);
    return to_rmat(adj);
}

}   // namespace lmrep

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

#include "lmrep/classgroup.hpp"

#include <algorithm>
#include <future>
#include <map>

namespace lmrep {

std::vector<PrimeOfA> primes_up_to(const RingSpec& spec, long bound) {
    std::vector<PrimeOfA> out;
    if (spec.kind == RingKind::Integers) {
        for (long p = 2; p <= bound; ++p)
            if (is_prime_elem(ring_from_int(spec, p))) out.push_back(PrimeOfA{ring_from_int(spec, p)});
        return out;
    }
    unsigned long start = spec.p;
    for (long d = 1; d <= bound; ++d) {
        // monic degree-d polynomials are the enumeration indices [p^d, 2 p^d)
        for (unsigned long k = start; k < 2 * start; ++k) {
            RingElem cand = nth_element(spec, k);
            if (is_prime_elem(cand)) out.push_back(PrimeOfA{cand});
        }
        start *= spec.p;
    }
    return out;
}

std::vector<PrimeIdealInfo> degree_one_primes_above(const PrimeOfA& p, OrderCtxPtr ctx) {
    std::vector<PrimeIdealInfo> out;
    for (auto& [z, mult] : roots_mod_prime(ctx->f, p)) {
        std::vector<RingElem> pz(ctx->n, ring_zero(ctx->ring));
        pz[0] = p.pi;
        std::vector<RingElem> tz(ctx->n, ring_zero(ctx->ring));
        tz[0] = -z;
        tz[1] = ring_one(ctx->ring);
        IdealLat q = ideal_from_generators({order_elem(ctx, pz), order_elem(ctx, tz)});
        auto form = degree_one_form(q);
        if (!form || form->a != p.pi)
            throw std::logic_error("prime above p is not degree one with contraction p");
        out.push_back(PrimeIdealInfo{p, z, mult, std::move(q)});
    }
    return out;
}

std::vector<EnumeratedIdeal> enumerate_ideals(OrderCtxPtr ctx, long prime_bound, int exp_bound) {
    if (prime_bound < 0 || exp_bound < 1) throw std::domain_error("bounds must be positive");
    // the per-prime factorizations are independent; evaluate them in parallel
    // and merge in index order so the output stays canonical
    std::vector<PrimeOfA> primes = primes_up_to(ctx->ring, prime_bound);
    std::vector<std::future<std::vector<PrimeIdealInfo>>> jobs;
    jobs.reserve(primes.size());
    for (const PrimeOfA& p : primes)
        jobs.push_back(std::async(std::launch::async,
                                  [&ctx, p] { return degree_one_primes_above(p, ctx); }));
    std::vector<std::vector<PrimeIdealInfo>> groups;
    for (auto& job : jobs) {
        auto infos = job.get();
        if (!infos.empty()) groups.push_back(std::move(infos));
    }
    std::vector<EnumeratedIdeal> out;
    EnumeratedIdeal unit{ideal_from_hnf(ctx, RMat::identity(ctx->ring, ctx->n)), {}};
    // depth-first over base-prime groups: skip the group or pick one prime
    // above it with an exponent
    std::vector<std::pair<PrimeIdealInfo, int>> chosen;
    auto rec = [&](auto&& self, size_t gi, const IdealLat& cur) -> void {
        if (gi == groups.size()) {
            out.push_back(EnumeratedIdeal{cur, chosen});
            return;
        }
        self(self, gi + 1, cur);
        for (const PrimeIdealInfo& info : groups[gi]) {
            IdealLat step = cur;
            for (int e = 1; e <= exp_bound; ++e) {
                step = ideal_mul(step, info.ideal);
                chosen.emplace_back(info, e);
                self(self, gi + 1, step);
                chosen.pop_back();
            }
        }
    };
    rec(rec, 0, unit.ideal);
    std::stable_sort(out.begin(), out.end(), [](const EnumeratedIdeal& a, const EnumeratedIdeal& b) {
        return ideal_cmp(a.ideal, b.ideal) < 0;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const EnumeratedIdeal& a, const EnumeratedIdeal& b) {
                              return a.ideal == b.ideal;
                          }),
              out.end());
    return out;
}

// --- bounded equivalence search -----------------------------------------------------

namespace {

std::vector<RingElem> box_coefficients(const RingSpec& spec, int box) {
    std::vector<RingElem> out;
    if (spec.kind == RingKind::Integers) {
        for (int k = 0; k <= 2 * box; ++k) out.push_back(nth_element(spec, k));
    } else {
        unsigned long count = 1;
        for (int i = 0; i <= box; ++i) {
            count *= spec.p;
            if (count > (1ul << 22)) throw std::domain_error("box too large for this ring");
        }
        for (unsigned long k = 0; k < count; ++k) out.push_back(nth_element(spec, k));
    }
    return out;
}

bool leading_coordinate_canonical(const std::vector<RingElem>& c) {
    for (const auto& x : c) {
        if (is_zero(x)) continue;
        return is_one(normalize_unit(x).unit);
    }
    return false;   // all zero
}

}   // namespace

EquivResult is_equivalent(const IdealLat& b1, const IdealLat& b2, int box) {
    if (box < 1) throw std::domain_error("box must be at least 1");
    OrderCtxPtr ctx = b1.ctx;
    const int n = ctx->n;
    ColonLattice colon = colon_lattice(b2, b1);
    std::vector<RMat> reps;
    reps.reserve(n);
    for (int i = 0; i < n; ++i) {
        std::vector<RingElem> row;
        for (int j = 0; j < n; ++j) row.push_back(colon.basis.at(i, j));
        reps.push_back(regular_rep(order_elem(ctx, std::move(row))));
    }
    RingElem rhs = normalize_unit(ideal_norm(b2) * elem_pow(colon.den, static_cast<unsigned>(n)))
                       .normal;
    RingElem n1 = ideal_norm(b1);
    bool ints = ctx->ring.kind == RingKind::Integers;
    auto size_of = [&](const RingElem& v) -> int {
        if (is_zero(v)) return -1;
        return ints ? static_cast<int>(mpz_sizeinbase(v.z().get_mpz_t(), 2) > 30
                                           ? box + 1
                                           : std::abs(v.z().get_si()))
                    : v.fp().degree();
    };
    std::vector<RingElem> c(n, ring_zero(ctx->ring));
    EquivResult found;
    // candidates are visited in shells of growing maximal coordinate size so
    // small witnesses surface first; inside a shell the first coordinate
    // varies fastest and each coordinate is scanned smallest-first
    auto rec = [&](auto&& self, int level, int shell, int max_size,
                   const std::vector<RingElem>& coeffs, const RMat& partial) -> bool {
        if (level < 0) {
            if (max_size != shell) return false;   // visited in an earlier shell
            if (!leading_coordinate_canonical(c)) return false;
            RingElem det = det_bareiss(partial);
            if (normalize_unit(det * n1).normal != rhs) return false;
            std::vector<Frac> gc;
            gc.reserve(n);
            std::vector<RingElem> numc = row_times_mat(c, colon.basis);
            for (int j = 0; j < n; ++j) gc.push_back(frac_reduce(numc[j], colon.den));
            FieldElem gamma = field_elem(ctx, std::move(gc));
            if (gamma.is_zero()) return false;
            if (ideal_mul_field(gamma, b1) != b2) return false;
            found.witness = std::move(gamma);
            return true;
        }
        for (const RingElem& v : coeffs) {
            c[level] = v;
            RMat next = is_zero(v) ? partial : partial + v * reps[level];
            if (self(self, level - 1, shell, std::max(max_size, size_of(v)), coeffs, next))
                return true;
        }
        c[level] = ring_zero(ctx->ring);
        return false;
    };
    for (int shell = 0; shell <= box; ++shell) {
        std::vector<RingElem> coeffs = box_coefficients(ctx->ring, shell);
        if (rec(rec, n - 1, shell, -1, coeffs, RMat::zeros(ctx->ring, n, n))) break;
    }
    return found;
}

// --- classify ----------------------------------------------------------------------------

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
};

int find_index(const std::vector<EnumeratedIdeal>& ideals, const IdealLat& b) {
    int lo = 0, hi = static_cast<int>(ideals.size()) - 1;
    while (lo <= hi) {
        int mid = (lo + hi) / 2;
        int c = ideal_cmp(ideals[mid].ideal, b);
        if (c == 0) return mid;
        if (c < 0)
            lo = mid + 1;
        else
            hi = mid - 1;
    }
    return -1;
}

}   // namespace

ClassTable classify(std::vector<EnumeratedIdeal> ideals, int box) {
    if (ideals.empty()) throw std::domain_error("classify needs at least one ideal");
    std::stable_sort(ideals.begin(), ideals.end(),
                     [](const EnumeratedIdeal& a, const EnumeratedIdeal& b) {
                         return ideal_cmp(a.ideal, b.ideal) < 0;
                     });
    ideals.erase(std::unique(ideals.begin(), ideals.end(),
                             [](const EnumeratedIdeal& a, const EnumeratedIdeal& b) {
                                 return a.ideal == b.ideal;
                             }),
                 ideals.end());
    const int count = static_cast<int>(ideals.size());
    OrderCtxPtr ctx = ideals[0].ideal.ctx;
    FieldElem one = to_field(order_from_int(ctx, 1));

    UnionFind uf(count);
    std::vector<int> roots;                       // class roots in creation order
    std::vector<FieldElem> witness(count, one);   // witness[i] * ideal[root(i)] = ideal[i]
    std::vector<std::pair<int, int>> unknown_pairs;
    // class of the product of two class-root ideals, learned once per pair
    std::map<std::pair<int, int>, std::optional<std::pair<int, FieldElem>>> product_table;

    auto verified_witness = [&](const FieldElem& gamma, int root, const IdealLat& target) {
        return ideal_mul_field(gamma, ideals[root].ideal) == target;
    };

    // bounded search of `b` against every existing class root; a second hit
    // merges two classes (and exposes an earlier Unknown as a box failure)
    auto search_all_roots = [&](int index) {
        const IdealLat& b = ideals[index].ideal;
        std::vector<int> snapshot = roots;
        int joined = -1;
        for (int root : snapshot) {
            if (uf.find(root) != root) continue;   // merged away earlier in this loop
            if (root == joined) continue;
            EquivResult fwd = is_equivalent(ideals[root].ideal, b, box);
            std::optional<FieldElem> gamma = fwd.witness;
            if (!gamma) {
                EquivResult bwd = is_equivalent(b, ideals[root].ideal, box);
                if (bwd.witness) gamma = field_inv(*bwd.witness);
            }
            if (!gamma) {
                unknown_pairs.emplace_back(root, index);
                continue;
            }
            if (!verified_witness(*gamma, root, b))
                throw std::logic_error("equivalence witness failed re-verification");
            if (joined < 0) {
                uf.parent[index] = root;
                witness[index] = *gamma;
                joined = root;
                continue;
            }
            int keep = std::min(joined, root), drop = std::max(joined, root);
            FieldElem bridge = (drop == root) ? field_inv(*gamma) * witness[index]
                                              : field_inv(witness[index]) * *gamma;
            if (!verified_witness(bridge, keep, ideals[drop].ideal))
                throw std::logic_error("merge witness failed re-verification");
            for (int j = 0; j < index; ++j) {
                if (j == drop || uf.find(j) != drop) continue;
                witness[j] = bridge * witness[j];
                uf.parent[j] = keep;
            }
            witness[drop] = bridge;
            uf.parent[drop] = keep;
            if (drop == joined) witness[index] = *gamma;
            uf.parent[index] = keep;
            std::erase(roots, drop);
            joined = keep;
        }
        if (joined < 0) roots.push_back(index);
    };

    for (int i = 0; i < count; ++i) {
        const EnumeratedIdeal& entry = ideals[i];
        bool classified = false;
        if (entry.factors.size() >= 2) {
            // compositional route: split off the last prime power
            const auto& [last_prime, last_exp] = entry.factors.back();
            IdealLat tail_ideal = ideal_pow(last_prime.ideal, static_cast<unsigned>(last_exp));
            IdealLat head_ideal = ideal_from_hnf(ctx, RMat::identity(ctx->ring, ctx->n));
            for (size_t k = 0; k + 1 < entry.factors.size(); ++k)
                head_ideal = ideal_mul(head_ideal,
                                       ideal_pow(entry.factors[k].first.ideal,
                                                 static_cast<unsigned>(entry.factors[k].second)));
            int hi = find_index(ideals, head_ideal);
            int ti = find_index(ideals, tail_ideal);
            if (hi >= 0 && ti >= 0 && hi < i && ti < i) {
                int rh = uf.find(hi), rt = uf.find(ti);
                auto key = std::minmax(rh, rt);
                auto it = product_table.find({key.first, key.second});
                if (it == product_table.end()) {
                    // learn the class of the product of the two roots
                    IdealLat prod = ideal_mul(ideals[rh].ideal, ideals[rt].ideal);
                    std::optional<std::pair<int, FieldElem>> learned;
                    for (int root : roots) {
                        EquivResult r = is_equivalent(ideals[root].ideal, prod, box);
                        if (r.witness) {
                            learned = {root, *r.witness};
                            break;
                        }
                    }
                    it = product_table.emplace(std::pair(key.first, key.second), learned).first;
                }
                if (it->second) {
                    const auto& [proot, pgamma] = *it->second;
                    // head = w_h root_h, tail = w_t root_t,
                    // root_h root_t = pgamma root_p  =>  head*tail = w_h w_t pgamma root_p
                    FieldElem gamma = witness[hi] * witness[ti] * pgamma;
                    int target = uf.find(proot);
                    FieldElem adjusted =
                        (target == proot) ? gamma : gamma * witness[proot];
                    if (verified_witness(adjusted, target, entry.ideal)) {
                        uf.parent[i] = target;
                        witness[i] = adjusted;
                        classified = true;
                    }
                }
            }
        }
        if (!classified) search_all_roots(i);
    }

    ClassTable table;
    table.box = box;
    // classes keyed by root, in ascending root order (canonical order)
    std::vector<int> final_roots;
    for (int i = 0; i < count; ++i)
        if (uf.find(i) == i) final_roots.push_back(i);
    std::sort(final_roots.begin(), final_roots.end());
    for (int root : final_roots) {
        ClassInfo info;
        info.representative_index = root;
        for (int i = 0; i < count; ++i) {
            if (uf.find(i) != root) continue;
            info.member_indices.push_back(i);
            info.witnesses.push_back(witness[i]);
            if (!verified_witness(witness[i], root, ideals[i].ideal))
                throw std::logic_error("class table witness failed re-verification");
        }
        for (int i : info.member_indices) {
            const IdealLat& b = ideals[i].ideal;
            if (b.is_unit_ideal()) {
                info.degree_one_rep =
                    DegreeOneForm{ring_one(ctx->ring), ring_zero(ctx->ring)};
                break;
            }
            auto form = degree_one_form(b);
            if (form) {
                info.degree_one_rep = form;
                break;
            }
        }
        for (int i : info.member_indices) {
            if (ideals[i].ideal.is_unit_ideal() || !ideals[i].factors.empty()) {
                info.distinct_base_product_index = i;
                break;
            }
        }
        table.classes.push_back(std::move(info));
    }
    for (auto& [a, b] : unknown_pairs)
        if (uf.find(a) == uf.find(b)) table.unresolved.emplace_back(a, b);
    table.ideals = std::move(ideals);
    return table;
}

std::vector<PrimeIdealInfo> default_ramified_set(const OrderCtx& ctx,
                                                 const std::vector<EnumeratedIdeal>& ideals) {
    RingElem disc = discriminant(ctx.f);
    std::vector<PrimeIdealInfo> s;
    auto seen = [&](const PrimeIdealInfo& q) {
        for (const auto& x : s)
            if (x == q) return true;
        return false;
    };
    for (const auto& entry : ideals)
        for (const auto& [q, e] : entry.factors) {
            bool ramified = q.e >= 2 || (!is_zero(disc) && divides(q.p.pi, disc));
            if (ramified && !seen(q)) s.push_back(q);
        }
    return s;
}

LenstraReport verify_lenstra(const ClassTable& table, const std::vector<PrimeIdealInfo>& s) {
    LenstraReport report;
    report.all_satisfied = true;
    for (const ClassInfo& cls : table.classes) {
        LenstraClassReport r;
        for (int i : cls.member_indices) {
            const EnumeratedIdeal& entry = table.ideals[i];
            if (entry.ideal.is_unit_ideal()) {
                r.satisfied = true;   // the empty product covers the trivial class
                r.member_index = i;
                break;
            }
            if (entry.factors.empty()) continue;
            bool avoids = true;
            for (const auto& [q, e] : entry.factors)
                for (const auto& bad : s)
                    if (q == bad) avoids = false;
            if (!avoids) continue;
            auto form = degree_one_form(entry.ideal);
            if (form) {
                r.satisfied = true;
                r.member_index = i;
                break;
            }
        }
        report.all_satisfied = report.all_satisfied && r.satisfied;
        report.per_class.push_back(r);
    }
    return report;
}

std::vector<PrimeOfA> small_residue_bound(int m, const RingSpec& spec) {
    if (m < 2) throw std::domain_error("bound must be at least 2");
    std::vector<unsigned> prime_powers;
    for (int q = 2; q <= m; ++q) {
        int v = q, p = 0;
        for (int d = 2; d <= v; ++d)
            if (v % d == 0) {
                p = d;
                break;
            }
        while (v % p == 0) v /= p;
        if (v == 1) prime_powers.push_back(static_cast<unsigned>(q));
    }
    for (unsigned long k = 0;; ++k) {
        if (k > (1ul << 22)) throw std::domain_error("no candidate with F(a) nonzero found");
        RingElem a = nth_element(spec, k);
        std::vector<RingElem> factors;
        bool zero = false;
        for (unsigned q : prime_powers) {
            RingElem v = elem_pow(a, q) - a;
            if (is_zero(v)) {
                zero = true;
                break;
            }
            factors.push_back(std::move(v));
        }
        if (zero) continue;
        std::vector<PrimeOfA> primes;
        auto seen = [&](const RingElem& p) {
            for (const auto& x : primes)
                if (x.pi == p) return true;
            return false;
        };
        for (const RingElem& v : factors)
            for (auto& [p, e] : factor_elem(v))
                if (!seen(p)) primes.push_back(PrimeOfA{p});
        std::sort(primes.begin(), primes.end(),
                  [](const PrimeOfA& x, const PrimeOfA& y) { return cmp(x.pi, y.pi) < 0; });
        return primes;
    }
}

}   // namespace lmrep

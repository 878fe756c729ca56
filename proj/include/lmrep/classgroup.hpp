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
#include <utility>
#include <vector>

#include "lmrep/lm.hpp"

namespace lmrep {

/// A degree-one prime (p, theta - z) together with its ramification index,
/// read off as the root multiplicity of f modulo p.
struct PrimeIdealInfo {
    PrimeOfA p;
    RingElem z;
    int e = 1;
    IdealLat ideal;

    bool operator==(const PrimeIdealInfo& o) const { return ideal == o.ideal; }
};

/// Base primes of A up to the bound: magnitude for Z, degree for F_p[t].
/// Deterministic small-first order.
std::vector<PrimeOfA> primes_up_to(const RingSpec& spec, long bound);

/// One entry per root of f mod p (Kummer-Dedekind at a degree-one factor).
std::vector<PrimeIdealInfo> degree_one_primes_above(const PrimeOfA& p, OrderCtxPtr ctx);

/// An enumerated ideal together with its construction as a product of
/// degree-one primes over pairwise distinct base primes.
struct EnumeratedIdeal {
    IdealLat ideal;
    std::vector<std::pair<PrimeIdealInfo, int>> factors;
};

/// Unit ideal plus all products over pairwise distinct base primes up to the
/// bounds, deduplicated and canonically ordered (norm, then HNF).
std::vector<EnumeratedIdeal> enumerate_ideals(OrderCtxPtr ctx, long prime_bound, int exp_bound);

/// Bounded equivalence search. Equivalent(gamma) is a proof that
/// gamma * b1 = b2 (verified exactly); Unknown is not a disproof.
struct EquivResult {
    std::optional<FieldElem> witness;
    bool equivalent() const { return witness.has_value(); }
};

/// Scans the colon lattice (b2 : b1) over coefficient vectors bounded by the
/// box (absolute value over Z, degree over F_p[t]), pruned by the norm
/// condition; candidates are visited small-first so the returned witness is
/// deterministic.
EquivResult is_equivalent(const IdealLat& b1, const IdealLat& b2, int box);

struct ClassInfo {
    int representative_index;                 // canonical-minimal member
    std::vector<int> member_indices;          // ascending
    std::vector<FieldElem> witnesses;         // witness[i] * rep = member[i]
    std::optional<DegreeOneForm> degree_one_rep;
    std::optional<int> distinct_base_product_index;
};

struct ClassTable {
    std::vector<EnumeratedIdeal> ideals;      // canonical order
    std::vector<ClassInfo> classes;
    int box = 0;
    /// Pairs the bounded search judged Unknown that later turned out to lie
    /// in one class (a visible box-too-small event). Pairs that stay in
    /// distinct classes are the expected semi-decision outcome and are not
    /// recorded: non-equivalence is never certified.
    std::vector<std::pair<int, int>> unresolved;

    const IdealLat& ideal_of(int index) const { return ideals[index].ideal; }
};

/// Greedy union-find over verified witnesses. Members whose factored form is
/// available are classified compositionally (witnesses multiply along the
/// product structure and are re-verified exactly); everything else falls back
/// to the bounded pairwise search.
ClassTable classify(std::vector<EnumeratedIdeal> ideals, int box);

/// The default avoided set S: primes with ramification index >= 2 or whose
/// base prime divides disc f.
std::vector<PrimeIdealInfo> default_ramified_set(const OrderCtx& ctx,
                                                 const std::vector<EnumeratedIdeal>& ideals);

struct LenstraClassReport {
    bool satisfied = false;
    std::optional<int> member_index;
};

struct LenstraReport {
    std::vector<LenstraClassReport> per_class;
    bool all_satisfied = false;
};

/// Checks that every class contains a member that is a product of degree-one
/// primes over pairwise distinct base primes, avoids S, and is itself of
/// degree one (the unit ideal standing in for the trivial class).
LenstraReport verify_lenstra(const ClassTable& table, const std::vector<PrimeIdealInfo>& s);

/// Prime divisors of F(a) for the smallest a with F(a) != 0, where
/// F = prod over prime powers 1 < q <= m of (X^q - X): a finite superset of
/// the primes with residue field of size at most m.
std::vector<PrimeOfA> small_residue_bound(int m, const RingSpec& spec);

}   // namespace lmrep

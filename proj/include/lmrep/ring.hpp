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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace lmrep {

/// Thrown when text input does not match a documented grammar.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class RingKind { Integers, PolyOverPrimeField };

/// Identifies the base Euclidean PID A: either Z or F_p[t].
struct RingSpec {
    RingKind kind = RingKind::Integers;
    std::uint32_t p = 0;      // characteristic, PolyOverPrimeField only; prime < 2^16
    std::string var = "t";

    static RingSpec integers();
    static RingSpec poly_mod_p(std::uint32_t p, std::string var = "t");
    static RingSpec parse(const std::string& text);   // "Z" or "GF(p)[v]"

    bool operator==(const RingSpec& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const RingSpec& o) const { return !(*this == o); }
    std::string to_string() const;
};

/// Dense polynomial over F_p, p < 2^16. Coefficients canonical in [0,p),
/// no trailing zeros; the zero polynomial has an empty coefficient vector.
struct FpPoly {
    std::uint32_t p = 0;
    std::vector<std::uint32_t> c;   // c[i] = coefficient of t^i

    void trim();
    int degree() const { return static_cast<int>(c.size()) - 1; }   // -1 for zero
    bool is_zero() const { return c.empty(); }
};

/// Element of the base ring A. The active alternative must agree with the
/// RingSpec of every other operand; mixing kinds is a logic error.
class RingElem {
  public:
    RingElem() : v_(mpz_class(0)) {}
    explicit RingElem(mpz_class z) : v_(std::move(z)) {}
    explicit RingElem(FpPoly f) : v_(std::move(f)) {}

    bool is_int_kind() const { return std::holds_alternative<mpz_class>(v_); }
    const mpz_class& z() const { return std::get<mpz_class>(v_); }
    mpz_class& z() { return std::get<mpz_class>(v_); }
    const FpPoly& fp() const { return std::get<FpPoly>(v_); }
    FpPoly& fp() { return std::get<FpPoly>(v_); }

    bool operator==(const RingElem& o) const;
    bool operator!=(const RingElem& o) const { return !(*this == o); }

  private:
    std::variant<mpz_class, FpPoly> v_;
};

RingElem operator+(const RingElem& a, const RingElem& b);
RingElem operator-(const RingElem& a, const RingElem& b);
RingElem operator*(const RingElem& a, const RingElem& b);
RingElem operator-(const RingElem& a);

bool is_zero(const RingElem& a);
bool is_one(const RingElem& a);
bool is_unit(const RingElem& a);

/// Degree-style size used for canonical orderings: |a| for Z, deg for F_p[t]
/// (zero sorts first). Total order; ties broken on the representation.
int cmp(const RingElem& a, const RingElem& b);

struct DivModResult {
    RingElem quot, rem;
};

/// Euclidean division with the canonical residue: 0 <= r < |b| over Z,
/// deg r < deg b over F_p[t]. b must be nonzero.
DivModResult euclid_divmod(const RingElem& a, const RingElem& b);

/// Exact division; throws std::domain_error if b does not divide a.
RingElem divexact(const RingElem& a, const RingElem& b);

bool divides(const RingElem& b, const RingElem& a);

struct NormalizeResult {
    RingElem unit, normal;   // input = unit * normal
};

/// Canonical associate: positive over Z, monic over F_p[t]; 0 -> (1, 0).
NormalizeResult normalize_unit(const RingElem& a);

/// Inverse of a unit (±1 over Z, nonzero constant over F_p[t]).
RingElem unit_inv(const RingElem& u);

struct GcdExtResult {
    RingElem g, s, t;   // g = s*a + t*b, g unit-normalized
};

/// Extended Euclid. Errors with "gcd of zeros" when both inputs vanish.
GcdExtResult gcd_ext(const RingElem& a, const RingElem& b);

RingElem gcd(const RingElem& a, const RingElem& b);
RingElem lcm(const RingElem& a, const RingElem& b);

/// Chinese remainder lift: result = residues[i] mod moduli[i], reduced
/// modulo the product. Moduli must be nonzero and pairwise coprime.
RingElem crt(const std::vector<RingElem>& residues, const std::vector<RingElem>& moduli);

RingElem elem_pow(const RingElem& a, unsigned e);

/// Trial-division primality for desk-scale elements; irreducibility over
/// F_p (root test for deg <= 3, divisor sweep above).
bool is_prime_elem(const RingElem& a);

/// Trial-division factorization into unit-normalized primes (exponents > 0).
/// Throws std::domain_error when the sweep exceeds the desk-scale budget.
std::vector<std::pair<RingElem, int>> factor_elem(const RingElem& a);

// --- RingSpec-bound constructors and text grammar ---------------------------

RingElem ring_zero(const RingSpec& spec);
RingElem ring_one(const RingSpec& spec);
RingElem ring_from_int(const RingSpec& spec, long v);

/// Element text grammar: signed decimal over Z; sums of c*t^k over F_p[t]
/// ("t^3+t^2+t", "2*t+1"). Whitespace-insensitive.
RingElem parse_elem(const RingSpec& spec, const std::string& text);
std::string to_string(const RingElem& a, const RingSpec& spec);

/// k-th element in the canonical small-first enumeration of A:
/// Z: 0, 1, -1, 2, -2, ...; F_p[t]: coefficients are the base-p digits of k.
RingElem nth_element(const RingSpec& spec, unsigned long k);

/// The units of A relevant for divisor sweeps: {1,-1} over Z, F_p^* otherwise.
std::vector<RingElem> ring_units(const RingSpec& spec);

// --- fraction field ----------------------------------------------------------

/// Element of K = Frac(A), always reduced, denominator unit-normalized.
struct Frac {
    RingElem num, den;

    bool is_zero() const { return lmrep::is_zero(num); }
    bool operator==(const Frac& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Frac& o) const { return !(*this == o); }
};

/// Canonical reduced fraction; throws std::domain_error on zero denominator.
Frac frac_reduce(const RingElem& num, const RingElem& den);
Frac frac_of(const RingElem& a);

Frac operator+(const Frac& a, const Frac& b);
Frac operator-(const Frac& a, const Frac& b);
Frac operator*(const Frac& a, const Frac& b);
Frac operator-(const Frac& a);
Frac frac_inv(const Frac& a);
Frac operator/(const Frac& a, const Frac& b);

bool is_integral(const Frac& a);
std::string to_string(const Frac& a, const RingSpec& spec);

}   // namespace lmrep

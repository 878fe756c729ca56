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

#include <string>
#include <utility>
#include <vector>

#include "lmrep/ring.hpp"

namespace lmrep {

/// Dense univariate polynomial over A. Canonical: no trailing zero
/// coefficients; the zero polynomial has an empty vector (degree -1).
struct RPoly {
    RingSpec spec;
    std::vector<RingElem> c;   // c[i] multiplies x^i

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_monic() const { return !c.empty() && is_one(c.back()); }
    RingElem coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : ring_zero(spec);
    }
    RingElem lead() const;
    void trim();

    static RPoly zero(const RingSpec& s) { return {s, {}}; }
    static RPoly from_coeffs(const RingSpec& s, std::vector<RingElem> coeffs);
    static RPoly constant(const RingSpec& s, RingElem a);
    static RPoly x(const RingSpec& s);

    bool operator==(const RPoly& o) const { return c == o.c; }
    bool operator!=(const RPoly& o) const { return !(*this == o); }
};

RPoly operator+(const RPoly& a, const RPoly& b);
RPoly operator-(const RPoly& a, const RPoly& b);
RPoly operator*(const RPoly& a, const RPoly& b);
RPoly operator-(const RPoly& a);
RPoly operator*(const RingElem& s, const RPoly& a);

RingElem poly_eval(const RPoly& f, const RingElem& z);
RPoly derivative(const RPoly& f);

/// Quotient/remainder; the divisor's leading coefficient must be a unit
/// (monic after normalization). Remainder has smaller degree.
struct RPolyDivMod {
    RPoly quot, rem;
};
RPolyDivMod poly_divmod(const RPoly& a, const RPoly& b);

/// Exact division in A[x]; throws std::domain_error when not divisible.
RPoly poly_divexact(const RPoly& a, const RPoly& b);

/// Unit-normalized gcd of the coefficients. Errors on the zero polynomial.
RingElem content(const RPoly& g);
RPoly primitive_part(const RPoly& g);

/// Sylvester resultant of f and g where g is treated as having formal
/// degree deg_g (>= actual degree; leading zeros padded).
RingElem resultant(const RPoly& f, const RPoly& g, int deg_g);

/// disc(f) = (-1)^{n(n-1)/2} Res(f, f') for monic f of degree n >= 2.
RingElem discriminant(const RPoly& f);

/// A prime element of A: a prime integer or an irreducible polynomial
/// over F_p, unit-normalized.
struct PrimeOfA {
    RingElem pi;

    static PrimeOfA of(RingElem candidate);   // validates primality
    bool operator==(const PrimeOfA& o) const { return pi == o.pi; }
};

/// Size of the residue field A/pi; throws "exhaustive search infeasible"
/// above the desk-scale bound 2^20.
unsigned long residue_field_size(const PrimeOfA& p);

/// All canonical residues of A modulo pi, in enumeration order.
std::vector<RingElem> residues_mod(const PrimeOfA& p);

/// All z in A/pi with f(z) = 0 mod pi, each with its multiplicity as a root
/// of f mod pi. Exhaustive over the residue field.
std::vector<std::pair<RingElem, int>> roots_mod_prime(const RPoly& f, const PrimeOfA& p);

/// Rational-root irreducibility test for monic f with 2 <= deg f <= 3.
/// deg f >= 4 errors: "irreducibility must be asserted by caller".
bool irreducible_low_degree(const RPoly& f);

/// Polynomial text grammar in main variable `var`, e.g. "x^3+4*x-1" or
/// "y^3+(t^3+t^2+t)".
RPoly parse_poly(const RingSpec& spec, const std::string& var, const std::string& text);
std::string to_string(const RPoly& f, const std::string& var);

// --- polynomials over the fraction field K ----------------------------------

struct KPoly {
    RingSpec spec;
    std::vector<Frac> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    Frac coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : frac_of(ring_zero(spec));
    }
    void trim();

    static KPoly zero(const RingSpec& s) { return {s, {}}; }
    static KPoly from(const RPoly& f);
    static KPoly from_coeffs(const RingSpec& s, std::vector<Frac> coeffs);

    bool operator==(const KPoly& o) const { return c == o.c; }
};

KPoly operator+(const KPoly& a, const KPoly& b);
KPoly operator-(const KPoly& a, const KPoly& b);
KPoly operator*(const KPoly& a, const KPoly& b);
KPoly operator*(const Frac& s, const KPoly& a);

struct KPolyDivMod {
    KPoly quot, rem;
};
KPolyDivMod kpoly_divmod(const KPoly& a, const KPoly& b);

/// Monic gcd plus Bezout coefficients over K[x].
struct KPolyGcdExt {
    KPoly g, s, t;
};
KPolyGcdExt kpoly_gcd_ext(const KPoly& a, const KPoly& b);

}   // namespace lmrep

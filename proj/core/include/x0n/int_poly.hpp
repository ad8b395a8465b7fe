// Copyright 2026 The x0n Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Integer back end for dense polynomials over Q and Q(zeta_m).
//
// A polynomial is cleared of denominators and stored as integer coefficient
// vectors of a fixed width (phi(m) for Q(zeta_m), 1 for Q) over a single
// common denominator. Products go through Kronecker substitution: both
// operands are packed into one big integer each, multiplied by GMP, and the
// signed coefficients are read back out of fixed-width slots.

#ifndef X0N_INT_POLY_HPP
#define X0N_INT_POLY_HPP

#include <cstddef>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "x0n/cyclotomic.hpp"
#include "x0n/rational.hpp"

namespace x0n::detail {

struct IntPoly {
  std::size_t width = 1;
  // Coefficient i occupies data[i * width, (i + 1) * width).
  std::vector<mpz_class> data;
  mpz_class den = 1;

  std::size_t size() const { return data.size() / width; }
};

IntPoly to_int_poly(std::span<const Rational> coeffs);
IntPoly to_int_poly(std::span<const CyclotomicNumber> coeffs);

std::vector<Rational> to_rationals(const IntPoly& p);
std::vector<CyclotomicNumber> to_cyclotomics(const IntPoly& p, const FieldPtr& field);

enum class IntMulMethod { Schoolbook, Kronecker };

// a * b truncated to `terms` coefficients. For width > 1 the product is
// reduced modulo the field's cyclotomic polynomial.
IntPoly int_poly_mul(const IntPoly& a, const IntPoly& b, std::size_t terms, const CyclotomicField* field,
                     IntMulMethod method);

// Convolution of two integer sequences truncated to `terms` entries, via a
// single GMP multiplication.
std::vector<mpz_class> kronecker_convolve(std::span<const mpz_class> a, std::span<const mpz_class> b,
                                          std::size_t terms);

// sum_j scalars[j] * powers[j], each power truncated to `terms` coefficients.
// All powers must share one denominator and width.
IntPoly int_poly_combine(const IntPoly& scalars, std::span<const IntPoly> powers, std::size_t terms,
                         const CyclotomicField* field);

// Rescales every polynomial so they all share the lcm of their denominators.
void unify_denominators(std::span<IntPoly> polys);

}  // namespace x0n::detail

#endif  // X0N_INT_POLY_HPP

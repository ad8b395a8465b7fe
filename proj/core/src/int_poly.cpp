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

#include "x0n/int_poly.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

#include "x0n/error.hpp"

namespace x0n::detail {

namespace {

std::size_t max_bits(std::span<const mpz_class> v) {
  std::size_t bits = 0;
  for (const auto& x : v) {
    if (x != 0) bits = std::max(bits, mpz_sizeinbase(x.get_mpz_t(), 2));
  }
  return bits;
}

// Packs data[i * width + t] into slot i * stride + t of a big integer whose
// slots are `limbs` limbs wide. Signed entries are split into a nonnegative
// and a nonpositive part and recombined with one subtraction.
mpz_class pack(std::span<const mpz_class> data, std::size_t width, std::size_t stride, std::size_t nterms,
               std::size_t limbs) {
  const std::size_t nslots = nterms == 0 ? 0 : (nterms - 1) * stride + width;
  const auto total = static_cast<mp_size_t>(nslots * limbs);
  mpz_class pos;
  mpz_class neg;
  if (total == 0) return pos;
  mp_limb_t* pl = mpz_limbs_write(pos.get_mpz_t(), total);
  mp_limb_t* nl = mpz_limbs_write(neg.get_mpz_t(), total);
  std::memset(pl, 0, sizeof(mp_limb_t) * static_cast<std::size_t>(total));
  std::memset(nl, 0, sizeof(mp_limb_t) * static_cast<std::size_t>(total));
  for (std::size_t i = 0; i < nterms; ++i) {
    for (std::size_t t = 0; t < width; ++t) {
      const mpz_class& c = data[i * width + t];
      const int s = sgn(c);
      if (s == 0) continue;
      const std::size_t n = mpz_size(c.get_mpz_t());
      mp_limb_t* dst = (s > 0 ? pl : nl) + (i * stride + t) * limbs;
      std::memcpy(dst, mpz_limbs_read(c.get_mpz_t()), n * sizeof(mp_limb_t));
    }
  }
  mpz_limbs_finish(pos.get_mpz_t(), total);
  mpz_limbs_finish(neg.get_mpz_t(), total);
  pos -= neg;
  return pos;
}

// Inverse of pack for a product: reads `nslots` signed slots.
std::vector<mpz_class> unpack(const mpz_class& packed, std::size_t nslots, std::size_t limbs) {
  std::vector<mpz_class> out(nslots);
  const int sign = sgn(packed);
  if (sign == 0) return out;
  const mp_limb_t* src = mpz_limbs_read(packed.get_mpz_t());
  const std::size_t avail = mpz_size(packed.get_mpz_t());
  const std::size_t slot_bits = limbs * GMP_NUMB_BITS;
  mpz_class half;
  mpz_class full;
  mpz_ui_pow_ui(full.get_mpz_t(), 2, slot_bits);
  half = full / 2;
  bool carry = false;
  for (std::size_t k = 0; k < nslots; ++k) {
    const std::size_t lo = k * limbs;
    mpz_class& v = out[k];
    if (lo < avail) {
      const std::size_t n = std::min(limbs, avail - lo);
      mp_limb_t* dst = mpz_limbs_write(v.get_mpz_t(), static_cast<mp_size_t>(n));
      std::memcpy(dst, src + lo, n * sizeof(mp_limb_t));
      mpz_limbs_finish(v.get_mpz_t(), static_cast<mp_size_t>(n));
    }
    if (carry) v += 1;
    if (v >= half) {
      v -= full;
      carry = true;
    } else {
      carry = false;
    }
    if (sign < 0) v = -v;
  }
  return out;
}

std::size_t slot_limbs(std::size_t bits_a, std::size_t bits_b, std::size_t overlap) {
  const std::size_t bits = bits_a + bits_b + static_cast<std::size_t>(std::bit_width(overlap)) + 2;
  return (bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;
}

std::vector<mpz_class> schoolbook(const IntPoly& a, const IntPoly& b, std::size_t terms, std::size_t stride) {
  const std::size_t w = a.width;
  std::vector<mpz_class> out(terms * stride);
  const std::size_t na = std::min(a.size(), terms);
  for (std::size_t i = 0; i < na; ++i) {
    const std::size_t nb = std::min(b.size(), terms - i);
    for (std::size_t t = 0; t < w; ++t) {
      const mpz_class& x = a.data[i * w + t];
      if (x == 0) continue;
      for (std::size_t j = 0; j < nb; ++j) {
        for (std::size_t u = 0; u < w; ++u) {
          const mpz_class& y = b.data[j * w + u];
          if (y == 0) continue;
          mpz_addmul(out[(i + j) * stride + t + u].get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
        }
      }
    }
  }
  return out;
}

// Collapses unreduced stride-(2w-1) coefficients into reduced width-w ones.
std::vector<mpz_class> reduce_rows(std::vector<mpz_class> raw, std::size_t terms, std::size_t stride,
                                   const CyclotomicField* field) {
  const std::size_t w = field->degree();
  std::vector<mpz_class> out(terms * w);
  for (std::size_t i = 0; i < terms; ++i) {
    std::span<mpz_class> row(raw.data() + i * stride, stride);
    field->reduce(row);
    for (std::size_t t = 0; t < w; ++t) out[i * w + t].swap(row[t]);
  }
  return out;
}

}  // namespace

IntPoly to_int_poly(std::span<const Rational> coeffs) {
  IntPoly p;
  p.width = 1;
  for (const auto& c : coeffs) {
    if (c.den() != 1) p.den = lcm(p.den, c.den());
  }
  p.data.resize(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    if (p.den == coeffs[i].den()) {
      p.data[i] = coeffs[i].num();
    } else {
      mpz_divexact(p.data[i].get_mpz_t(), p.den.get_mpz_t(), coeffs[i].den().get_mpz_t());
      p.data[i] *= coeffs[i].num();
    }
  }
  return p;
}

IntPoly to_int_poly(std::span<const CyclotomicNumber> coeffs) {
  IntPoly p;
  p.width = coeffs.empty() ? 1 : coeffs.front().field()->degree();
  for (const auto& c : coeffs) {
    for (const auto& r : c.coords()) {
      if (r.den() != 1) p.den = lcm(p.den, r.den());
    }
  }
  p.data.resize(coeffs.size() * p.width);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const auto& coords = coeffs[i].coords();
    for (std::size_t t = 0; t < p.width; ++t) {
      const Rational& r = coords[t];
      if (r.is_zero()) continue;
      mpz_class& dst = p.data[i * p.width + t];
      if (p.den == r.den()) {
        dst = r.num();
      } else {
        mpz_divexact(dst.get_mpz_t(), p.den.get_mpz_t(), r.den().get_mpz_t());
        dst *= r.num();
      }
    }
  }
  return p;
}

std::vector<Rational> to_rationals(const IntPoly& p) {
  std::vector<Rational> out;
  out.reserve(p.data.size());
  for (const auto& x : p.data) {
    if (p.den == 1 || x == 0) out.emplace_back(x);
    else out.emplace_back(x, p.den);
  }
  return out;
}

std::vector<CyclotomicNumber> to_cyclotomics(const IntPoly& p, const FieldPtr& field) {
  if (p.width != field->degree()) throw Error(ErrorCode::RingMismatch, "integer polynomial width does not match field");
  std::vector<CyclotomicNumber> out;
  out.reserve(p.size());
  std::vector<Rational> coords(p.width);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t t = 0; t < p.width; ++t) {
      const mpz_class& x = p.data[i * p.width + t];
      coords[t] = (p.den == 1 || x == 0) ? Rational(x) : Rational(x, p.den);
    }
    out.emplace_back(field, coords);
  }
  return out;
}

std::vector<mpz_class> kronecker_convolve(std::span<const mpz_class> a, std::span<const mpz_class> b,
                                          std::size_t terms) {
  const std::size_t na = std::min(a.size(), terms);
  const std::size_t nb = std::min(b.size(), terms);
  if (na == 0 || nb == 0) return std::vector<mpz_class>(terms);
  const std::size_t limbs = slot_limbs(max_bits(a.first(na)), max_bits(b.first(nb)), std::min(na, nb));
  const mpz_class pa = pack(a, 1, 1, na, limbs);
  const mpz_class pb = pack(b, 1, 1, nb, limbs);
  const mpz_class prod = pa * pb;
  return unpack(prod, terms, limbs);
}

IntPoly int_poly_mul(const IntPoly& a, const IntPoly& b, std::size_t terms, const CyclotomicField* field,
                     IntMulMethod method) {
  if (a.width != b.width) throw Error(ErrorCode::RingMismatch, "integer polynomial widths differ");
  const std::size_t w = a.width;
  if (w > 1 && (field == nullptr || field->degree() != w)) {
    throw Error(ErrorCode::RingMismatch, "missing or mismatched cyclotomic field");
  }
  const std::size_t stride = 2 * w - 1;
  IntPoly out;
  out.width = w;
  out.den = a.den * b.den;

  std::vector<mpz_class> raw;
  const std::size_t na = std::min(a.size(), terms);
  const std::size_t nb = std::min(b.size(), terms);
  if (na == 0 || nb == 0) {
    raw.resize(terms * stride);
  } else if (method == IntMulMethod::Schoolbook) {
    raw = schoolbook(a, b, terms, stride);
  } else {
    const std::size_t limbs = slot_limbs(max_bits(std::span(a.data).first(na * w)),
                                         max_bits(std::span(b.data).first(nb * w)), std::min(na, nb) * w);
    const mpz_class pa = pack(a.data, w, stride, na, limbs);
    const mpz_class pb = pack(b.data, w, stride, nb, limbs);
    const mpz_class prod = pa * pb;
    raw = unpack(prod, terms * stride, limbs);
  }
  out.data = w == 1 ? std::move(raw) : reduce_rows(std::move(raw), terms, stride, field);
  return out;
}

void unify_denominators(std::span<IntPoly> polys) {
  mpz_class common = 1;
  for (const auto& p : polys) common = lcm(common, p.den);
  for (auto& p : polys) {
    if (p.den == common) continue;
    mpz_class scale;
    mpz_divexact(scale.get_mpz_t(), common.get_mpz_t(), p.den.get_mpz_t());
    for (auto& x : p.data) x *= scale;
    p.den = common;
  }
}

IntPoly int_poly_combine(const IntPoly& scalars, std::span<const IntPoly> powers, std::size_t terms,
                         const CyclotomicField* field) {
  const std::size_t w = scalars.width;
  const std::size_t stride = 2 * w - 1;
  std::vector<mpz_class> raw(terms * stride);
  const std::size_t count = std::min(scalars.size(), powers.size());
  for (std::size_t j = 0; j < count; ++j) {
    const IntPoly& pj = powers[j];
    const std::size_t n = std::min(pj.size(), terms);
    for (std::size_t t = 0; t < w; ++t) {
      const mpz_class& s = scalars.data[j * w + t];
      if (s == 0) continue;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t u = 0; u < w; ++u) {
          const mpz_class& y = pj.data[i * w + u];
          if (y == 0) continue;
          mpz_addmul(raw[i * stride + t + u].get_mpz_t(), s.get_mpz_t(), y.get_mpz_t());
        }
      }
    }
  }
  IntPoly out;
  out.width = w;
  out.den = scalars.den * (powers.empty() ? mpz_class(1) : powers.front().den);
  out.data = w == 1 ? std::move(raw) : reduce_rows(std::move(raw), terms, stride, field);
  return out;
}

}  // namespace x0n::detail

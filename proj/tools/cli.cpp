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

#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <optional>

#include "x0n/error.hpp"
#include "x0n/modfun.hpp"

namespace x0n::cli {
namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  InitialTerm parse() {
    RootOfUnity c;
    skip_space();
    if (peek() == '-' || peek() == '+') {
      if (take() == '-') c = RootOfUnity(2, 1);
    }
    skip_space();
    if (peek() != 'x') {
      c = c * constant();
      expect('*');
    }
    expect('x');
    Rational q(1);
    skip_space();
    if (peek() == '^') {
      take();
      q = exponent();
    }
    skip_space();
    if (pos_ < text_.size()) fail("unexpected trailing input");
    return InitialTerm(c, q);
  }

 private:
  RootOfUnity constant() {
    skip_space();
    const std::size_t at = pos_;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const mpz_class v = integer();
      if (v == 0) throw Error(ErrorCode::ZeroConstant, "constant at position " + std::to_string(at) + " is zero");
      if (v != 1) {
        throw Error(ErrorCode::NotRootOfUnity, "constant " + v.get_str() + " at position " + std::to_string(at) +
                                                   " is not a root of unity");
      }
      return RootOfUnity();
    }
    if (text_.substr(pos_).starts_with("zeta_")) {
      pos_ += 5;
      const mpz_class m = integer();
      if (m < 1 || !m.fits_slong_p()) fail("root of unity order must be a positive integer", at);
      std::int64_t s = 1;
      skip_space();
      if (peek() == '^') {
        take();
        const mpz_class e = signed_integer();
        const mpz_class r = ((e % m) + m) % m;
        s = r.get_si();
      }
      const std::int64_t order = m.get_si();
      return RootOfUnity(order, s % order);
    }
    if (peek() == 'i') {
      take();
      return RootOfUnity(4, 1);
    }
    fail("expected 'x', an integer, 'i' or 'zeta_M'");
  }

  Rational exponent() {
    skip_space();
    if (peek() != '(') return Rational(signed_integer());
    take();
    const mpz_class num = signed_integer();
    mpz_class den = 1;
    skip_space();
    if (peek() == '/') {
      take();
      skip_space();
      const std::size_t at = pos_;
      den = integer();
      if (den == 0) fail("zero denominator in exponent", at);
    }
    expect(')');
    return Rational(num, den);
  }

  mpz_class signed_integer() {
    skip_space();
    bool negative = false;
    if (peek() == '-' || peek() == '+') negative = take() == '-';
    const mpz_class v = integer();
    return negative ? mpz_class(-v) : v;
  }

  mpz_class integer() {
    skip_space();
    const std::size_t begin = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (begin == pos_) fail("expected an integer", begin);
    return mpz_class(std::string(text_.substr(begin, pos_ - begin)));
  }

  void expect(char ch) {
    skip_space();
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char take() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw ParseError(at, what + " in \"" + std::string(text_) + "\"");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string exponent_text(const Rational& e) { return e.to_string(); }

Rational precision_end(const ExpansionResult& r) { return r.T.q() + r.precision.a; }

}  // namespace

InitialTerm parse_initial_term(std::string_view text) { return TermParser(text).parse(); }

std::string render_initial_term(const InitialTerm& t) { return t.to_string(); }

nlohmann::ordered_json coefficient_json(const CyclotomicNumber& c) {
  nlohmann::ordered_json coords = nlohmann::ordered_json::array();
  for (const auto& x : c.coords()) coords.push_back(x.to_string());
  return {{"conductor", c.conductor()}, {"coords", std::move(coords)}};
}

nlohmann::ordered_json expansion_json(const ExpansionResult& r) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  const auto& h = r.h;
  for (std::size_t i = 0; i < h.coeffs().size(); ++i) {
    if (h.coeffs()[i].is_zero()) continue;
    const Rational e = Rational(h.start() + static_cast<std::int64_t>(i)) / Rational(h.ramification());
    terms.push_back({{"exp", exponent_text(e)}, {"coeff", coefficient_json(h.coeffs()[i])}});
  }
  nlohmann::ordered_json out;
  out["level"] = r.level ? nlohmann::ordered_json(r.level->N) : nlohmann::ordered_json(nullptr);
  out["c"] = {{"order", r.T.c().order()}, {"exponent", r.T.c().exponent()}};
  out["q"] = r.T.q().to_string();
  out["ramification"] = h.ramification();
  out["precision"] = r.T.q().to_string() + "+" + r.precision.a.to_string();
  out["terms"] = std::move(terms);
  return out;
}

nlohmann::ordered_json phi_json(const ModularPolynomial& phi) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& [ab, c] : phi.coefficients) {
    out.push_back({{"exp_x1", ab.first}, {"exp_x2", ab.second}, {"coefficient", c.get_str()}});
  }
  return out;
}

void cmd_expand(const InitialTerm& t, int steps, bool json, std::ostream& out) {
  const auto r = puiseux_x0n(t, steps);
  if (json) {
    out << expansion_json(r).dump() << '\n';
    return;
  }
  out << "T = " << render_initial_term(t) << '\n';
  out << "level: " << (r.level ? std::to_string(r.level->N) : std::string("not found (cap 256)")) << '\n';
  out << "precision: a = " << r.precision.a << ", h known mod x^" << precision_end(r) << '\n';
  for (std::size_t i = 0; i < r.h.coeffs().size(); ++i) {
    const auto& c = r.h.coeffs()[i];
    if (c.is_zero()) continue;
    const Rational e = Rational(r.h.start() + static_cast<std::int64_t>(i)) / Rational(r.h.ramification());
    out << "  x^" << (e.is_integer() ? e.to_string() : "(" + e.to_string() + ")") << ": " << c << '\n';
  }
}

void cmd_infer_level(const InitialTerm& t, std::int64_t cap, std::ostream& out) {
  out << infer_level(t, cap).N << '\n';
}

void cmd_verify(const InitialTerm& t, int steps, std::ostream& out) {
  const auto r = puiseux_x0n(t, steps);
  const auto residual = relation_residual(r.h, t.q());
  const Rational bound = precision_end(r);
  const auto v = residual.u_valuation();
  out << "T = " << render_initial_term(t) << ", steps = " << steps << '\n';
  out << "required residual valuation >= " << bound << '\n';
  if (v) {
    const Rational val = Rational(*v) / Rational(residual.ramification());
    out << "residual valuation = " << val << '\n';
    if (val < bound) throw Error(ErrorCode::OracleMismatch, "residual valuation " + val.to_string() + " < " + bound.to_string());
  } else {
    out << "residual vanishes mod x^" << residual.truncation() << '\n';
    if (residual.truncation() < bound) {
      throw Error(ErrorCode::OracleMismatch, "residual only known mod x^" + residual.truncation().to_string());
    }
  }
  out << "ok\n";
}

void cmd_oracle_check(std::int64_t level, int steps, std::size_t q_order, std::ostream& out) {
  const auto report = infinity_cusp_check(level, steps, q_order);
  if (!report.equal()) {
    for (const auto i : report.mismatches) {
      out << "q^" << i << ": h(x(q)) has " << report.composed[i] << ", x(q^" << level << ") has " << report.expected[i]
          << '\n';
    }
    throw Error(ErrorCode::OracleMismatch, std::to_string(report.mismatches.size()) + " coefficients differ");
  }
  out << "h(x(q)) = x(q^" << level << ") mod q^" << q_order << '\n';
}

void cmd_phi(std::int64_t level, std::ostream& out) { out << phi_json(phi_reconstruct_prime(level)).dump() << '\n'; }

std::vector<BenchRow> bench_composition(const std::vector<std::size_t>& sizes) {
  if (sizes.empty()) return {};
  if (!std::is_sorted(sizes.begin(), sizes.end()) || sizes.front() < 4) {
    throw Error(ErrorCode::InvalidArgument, "bench sizes must be ascending and at least 4");
  }
  const std::size_t largest = sizes.back();
  int k = 0;
  while ((std::size_t{1} << k) + 2 < largest) ++k;
  const auto h = puiseux_x0n(InitialTerm(RootOfUnity(), Rational(2)), k).h;

  using clock = std::chrono::steady_clock;
  auto ms = [](clock::time_point from) { return std::chrono::duration<double, std::milli>(clock::now() - from).count(); };
  std::vector<BenchRow> rows;
  for (const std::size_t n : sizes) {
    std::vector<Rational> c;
    c.reserve(n);
    for (std::size_t e = 0; e < n; ++e) c.push_back(h.coefficient(static_cast<std::int64_t>(e)).rational_value());
    const RatSeries inner(std::move(c));
    const RatSeries outer = series_G(n / 2 + 1);

    BenchRow row{n, 0, 0};
    auto start = clock::now();
    const auto bk = ts_compose_brent_kung(outer, inner, n);
    row.brent_kung_ms = ms(start);
    start = clock::now();
    const auto horner = ts_compose_horner(outer, inner, n);
    row.horner_ms = ms(start);
    if (!(bk == horner)) throw Error(ErrorCode::OracleMismatch, "compositions differ at size " + std::to_string(n));
    rows.push_back(row);
  }
  return rows;
}

void cmd_bench(const std::vector<std::size_t>& sizes, std::ostream& out) {
  out << "size,horner_ms,brent_kung_ms\n";
  char line[96];
  for (const auto& row : bench_composition(sizes)) {
    std::snprintf(line, sizeof line, "%zu,%.3f,%.3f\n", row.size, row.horner_ms, row.brent_kung_ms);
    out << line;
  }
}

}  // namespace x0n::cli

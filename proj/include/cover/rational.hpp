// Copyright 2026 The cover Authors
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

#ifndef COVER_RATIONAL_HPP_
#define COVER_RATIONAL_HPP_

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cover {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer Numerator(const Rational& r) {
  return boost::multiprecision::numerator(r);
}
inline Integer Denominator(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

inline double ToDouble(const Rational& r) { return r.convert_to<double>(); }

// "p" for integers, "p/q" otherwise.
inline std::string ToString(const Rational& r) {
  if (Denominator(r) == 1) return Numerator(r).str();
  return Numerator(r).str() + "/" + Denominator(r).str();
}

inline std::string FormatFixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  return buf;
}

// "p/q (≈x.xxxx)"; integers print without the approximation.
inline std::string FormatApprox(const Rational& r, int digits = 4) {
  if (Denominator(r) == 1) return Numerator(r).str();
  return ToString(r) + " (≈" + FormatFixed(ToDouble(r), digits) + ")";
}

namespace internal {

inline bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace internal

// Accepts "[-]digits", "[-]digits.digits" and "[-]digits/digits".
// Decimal literals are converted exactly (1.25 -> 5/4).
inline std::optional<Rational> ParseRational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!internal::AllDigits(num) || !internal::AllDigits(den)) {
      return std::nullopt;
    }
    Integer d{std::string(den)};
    if (d == 0) return std::nullopt;
    value = Rational(Integer(std::string(num)), d);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty()) return std::nullopt;
    if (!whole.empty() && !internal::AllDigits(whole)) return std::nullopt;
    if (!frac.empty() && !internal::AllDigits(frac)) return std::nullopt;
    Integer scale = boost::multiprecision::pow(Integer(10),
                                               static_cast<unsigned>(frac.size()));
    Integer digits{std::string(whole.empty() ? "0" : whole) +
                   std::string(frac)};
    value = Rational(digits, scale);
  } else {
    if (!internal::AllDigits(text)) return std::nullopt;
    value = Rational(Integer(std::string(text)));
  }
  return negative ? Rational(-value) : value;
}

// Best rational approximation with denominator <= max_denominator, via the
// continued fraction expansion of `x`.
inline Rational ApproximateRational(double x, std::int64_t max_denominator) {
  if (!std::isfinite(x)) return Rational(0);
  const bool negative = x < 0;
  double rest = std::fabs(x);
  // Convergents h/k.
  Integer h_prev = 1, h = static_cast<std::int64_t>(std::floor(rest));
  Integer k_prev = 0, k = 1;
  double frac = rest - std::floor(rest);
  for (int iter = 0; iter < 64 && frac > 1e-15; ++iter) {
    rest = 1.0 / frac;
    const double a_d = std::floor(rest);
    if (a_d > 1e15) break;
    const Integer a = static_cast<std::int64_t>(a_d);
    Integer h_next = a * h + h_prev;
    Integer k_next = a * k + k_prev;
    if (k_next > max_denominator) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    frac = rest - a_d;
  }
  Rational r(h, k);
  return negative ? Rational(-r) : r;
}

}  // namespace cover

#endif  // COVER_RATIONAL_HPP_

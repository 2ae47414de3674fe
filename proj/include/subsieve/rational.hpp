// Copyright 2026 The subsieve Authors.
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

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "subsieve/errors.hpp"

namespace subsieve {

// Costs and capacities are exact; set-function values are doubles.
using Rational = boost::multiprecision::cpp_rational;

inline double ToDouble(const Rational& r) { return r.convert_to<double>(); }

inline std::string ToString(const Rational& r) { return r.str(); }

// Accepts `7`, `-3`, `p/q` and plain decimals such as `2.25` (converted
// exactly). Throws InputError on anything else or a zero denominator.
inline Rational ParseRational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw InputError("not a rational number: '" + std::string(text) + "'");
  };
  if (text.empty()) return fail();
  auto is_int = [](std::string_view s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  using boost::multiprecision::cpp_int;
  auto to_int = [](std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return cpp_int(std::string(s));
  };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+') {
      return fail();
    }
    cpp_int d = to_int(den);
    if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    return Rational(to_int(num), d);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    std::string_view digits = whole;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
      digits.remove_prefix(1);
    }
    if (digits.empty() && frac.empty()) return fail();
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return fail();
    }
    for (char c : frac) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return fail();
    }
    cpp_int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    cpp_int mantissa(std::string(digits.empty() ? "0" : digits) +
                     std::string(frac));
    Rational r(mantissa, scale);
    return negative ? Rational(-r) : r;
  }
  if (!is_int(text)) return fail();
  return Rational(to_int(text));
}

}  // namespace subsieve

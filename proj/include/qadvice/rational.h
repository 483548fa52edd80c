// Copyright 2026 The qadvice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QADVICE_RATIONAL_H
#define QADVICE_RATIONAL_H

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace qadvice {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", an integer, or a finite decimal such as "0.25" exactly.
Rational parse_rational(std::string_view text);

/// Renders as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational &r);

double to_double(const Rational &r);

/// Smallest integer >= r.
BigInt ceil(const Rational &r);

/// r - floor(r), always in [0, 1).
Rational fractional_part(const Rational &r);

}  // namespace qadvice

#endif

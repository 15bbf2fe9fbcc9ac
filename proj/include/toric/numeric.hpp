// Copyright 2026 The toric-classify Authors
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

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace toric {

using Integer = mpz_class;
using Rational = mpq_class;

using IntegerVector = std::vector<Integer>;
// Coordinates of a point of g* (or k*); mpq keeps every entry canonical.
using RationalVector = std::vector<Rational>;

// Parses "-12", "+7" as integers. Throws Error(Parse) on anything else.
Integer parse_integer(std::string_view text);
// Parses "p/q", "p" (and "-p/q"). Zero denominators are rejected.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

Integer gcd(const Integer& a, const Integer& b);

// Nonnegative gcd of all coordinates; 0 for the zero vector.
Integer content(const IntegerVector& v);

Rational dot(const RationalVector& a, const RationalVector& b);
Rational dot(const RationalVector& a, const IntegerVector& b);
Integer dot(const IntegerVector& a, const IntegerVector& b);

RationalVector to_rational(const IntegerVector& v);

bool is_zero(const IntegerVector& v);
bool is_zero(const RationalVector& v);

}  // namespace toric

// Copyright 2026 The onecvx Authors
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

#ifndef ONECVX_RATIONAL_HPP
#define ONECVX_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace onecvx {

// Every quantity in the library is an exact rational; no floating point
// appears anywhere in the computational core.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q" or "p" (optional leading sign on p, q a positive integer).
/// The result is canonicalized to lowest terms. Throws std::invalid_argument
/// on anything else, including q = 0.
Rational parse_rational(const std::string& text);

/// Canonical text form: "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

}  // namespace onecvx

#endif  // ONECVX_RATIONAL_HPP

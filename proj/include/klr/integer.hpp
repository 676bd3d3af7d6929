#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace klr {

using Int = mpz_class;
using Rational = mpq_class;

// Narrowing with a range check; throws std::overflow_error.
long to_long(const Int& v);
int to_int(const Int& v);

std::string to_string(const Int& v);
std::string to_string(const Rational& v);

Rational parse_rational(const std::string& text);

}  // namespace klr

#include "klr/integer.hpp"

#include <limits>
#include <stdexcept>

namespace klr {

long to_long(const Int& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer out of range: " + v.get_str());
  return v.get_si();
}

int to_int(const Int& v) {
  long x = to_long(v);
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
    throw std::overflow_error("integer out of range: " + v.get_str());
  return static_cast<int>(x);
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rational& v) { return v.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0 || r.get_den() == 0)
    throw std::invalid_argument("not a rational: " + text);
  r.canonicalize();
  return r;
}

}  // namespace klr

#include "submwp/rational.hpp"

#include <cmath>
#include <cstdlib>

#include "submwp/errors.hpp"

namespace submwp {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw DomainError("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw DomainError("malformed rational literal: '" + s + "'");
  if (q.get_den() == 0) throw DomainError("zero denominator in rational literal: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

Rational rational_of(double v) {
  if (!std::isfinite(v)) throw NumericError("non-finite value cannot become a rational");
  return Rational(v);
}

double to_double(const Rational& r) { return r.get_d(); }

Rational snap(double v, long den) {
  if (den <= 0) throw DomainError("snap denominator must be positive");
  if (!std::isfinite(v)) throw NumericError("non-finite value in snap");
  const double scaled = v * static_cast<double>(den);
  Rational q(std::llround(scaled), den);
  q.canonicalize();
  return q;
}

}  // namespace submwp

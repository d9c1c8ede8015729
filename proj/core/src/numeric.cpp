#include "thinset/numeric.hpp"

#include <cmath>

#include "thinset/errors.hpp"

namespace thinset {

Rational ratio(const Int& num, const Int& den) {
  if (den == 0) throw DomainError("zero denominator");
  return Rational(num, den);
}

Rational ratio(i64 num, i64 den) { return ratio(Int(num), Int(den)); }

std::string to_pq(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(text));
    const Int num(text.substr(0, slash));
    const Int den(text.substr(slash + 1));
    return ratio(num, den);
  } catch (const std::exception&) {
    throw DomainError("not a rational: \"" + text + "\"");
  }
}

int floor_log2(i64 n) {
  if (n < 1) throw DomainError("floor_log2 requires n >= 1");
  int result = 0;
  while (n > 1) {
    n >>= 1;
    ++result;
  }
  return result;
}

i64 isqrt(i64 n) {
  if (n < 0) throw DomainError("isqrt requires n >= 0");
  if (n < 2) return n;
  i64 root = static_cast<i64>(std::sqrt(static_cast<double>(n)));
  while (root > 0 && root * root > n) --root;
  while ((root + 1) * (root + 1) <= n) ++root;
  return root;
}

Int int_pow(const Int& base, i64 exp) {
  if (exp < 0) throw DomainError("int_pow requires exp >= 0");
  Int result = 1;
  Int b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    b *= b;
    exp >>= 1;
  }
  return result;
}

}  // namespace thinset

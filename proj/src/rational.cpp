#include "tsw/rational.hpp"

#include <limits>

#include "tsw/errors.hpp"

namespace tsw {

Rational parseRational(std::string_view text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(BigInt(std::string(text)));
    }
    BigInt num{std::string(text.substr(0, slash))};
    BigInt den{std::string(text.substr(slash + 1))};
    if (den == 0) throw ParseError("zero denominator", slash + 1);
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("malformed rational '" + std::string(text) + "'", 0);
  }
}

std::string formatRational(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

BigInt ceilRational(const Rational& r) {
  BigInt q = numerator(r) / denominator(r);
  if (q * denominator(r) != numerator(r) && r > 0) ++q;
  return q;
}

long long toLongLong(const BigInt& v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min()) {
    throw std::overflow_error("integer out of 64-bit range: " + v.str());
  }
  return static_cast<long long>(v);
}

}  // namespace tsw

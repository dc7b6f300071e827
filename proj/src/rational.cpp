#include "icb/rational.hpp"

#include "icb/graph.hpp"

namespace icb {

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  BigInt num, den = 1;
  try {
    num = BigInt(slash == std::string::npos ? text : text.substr(0, slash));
    if (slash != std::string::npos) den = BigInt(text.substr(slash + 1));
  } catch (const std::runtime_error&) {
    throw Error(ErrorKind::Parse, "malformed rational '" + text + "'");
  }
  if (den <= 0) throw Error(ErrorKind::Parse, "rational denominator must be positive");
  return Rational(num, den);
}

namespace {

std::int64_t to_int64(const BigInt& v, const char* what) {
  if (v < std::numeric_limits<std::int64_t>::min() ||
      v > std::numeric_limits<std::int64_t>::max())
    throw Error(ErrorKind::Internal, std::string(what) + " exceeds 64-bit range");
  return v.convert_to<std::int64_t>();
}

}  // namespace

std::int64_t rational_num64(const Rational& r) {
  return to_int64(boost::multiprecision::numerator(r), "rational numerator");
}

std::int64_t rational_den64(const Rational& r) {
  return to_int64(boost::multiprecision::denominator(r), "rational denominator");
}

}  // namespace icb

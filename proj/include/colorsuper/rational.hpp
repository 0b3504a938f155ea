#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "colorsuper/errors.hpp"

namespace colorsuper {

/// Exact rational scalar used everywhere; no floating point appears in any
/// verification path.
using Scalar = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline bool is_zero(const Scalar& s) { return s.is_zero(); }

/// Compact display form: "3", "-1/2".
inline std::string scalar_to_string(const Scalar& s) {
  if (denominator(s) == 1) return numerator(s).str();
  return numerator(s).str() + "/" + denominator(s).str();
}

/// Wire form with explicit denominator: "3/1", "-1/2".
inline std::string scalar_to_wire(const Scalar& s) {
  return numerator(s).str() + "/" + denominator(s).str();
}

/// Parses "n" or "n/d". Throws SchemaError on anything else.
inline Scalar parse_scalar(const std::string& text) {
  const auto bad = [&] { throw SchemaError("not a rational: '" + text + "'"); };
  std::size_t begin = text.find_first_not_of(" \t");
  std::size_t end = text.find_last_not_of(" \t");
  if (begin == std::string::npos) bad();
  std::string body = text.substr(begin, end - begin + 1);
  std::string num = body, den = "1";
  if (auto slash = body.find('/'); slash != std::string::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  try {
    BigInt n(num), d(den);
    if (d == 0) throw SchemaError("zero denominator: '" + text + "'");
    return Scalar(n, d);
  } catch (const std::runtime_error&) {
    bad();
  }
  return Scalar();  // unreachable
}

}  // namespace colorsuper

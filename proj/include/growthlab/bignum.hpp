#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace growthlab {

// Exact nonnegative integer. All exact indices and orders live here;
// serialization is the plain decimal string.
using BigNat = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigNat& x) { return x.str(); }

inline BigNat from_decimal(const std::string& s) { return BigNat(s); }

// Natural log of a positive BigNat, accurate to double precision even when
// the value itself does not fit in a double.
inline double log_of(const BigNat& x) {
  if (x <= 0) throw std::domain_error("log_of: nonpositive value");
  unsigned bits = boost::multiprecision::msb(x);
  if (bits <= 900) return std::log(x.convert_to<double>());
  BigNat top = x >> (bits - 63);
  return std::log(top.convert_to<double>()) +
         static_cast<double>(bits - 63) * std::log(2.0);
}

std::string format_double17(double v);

// Natural log of a positive quantity.  Additive composition corresponds to
// multiplication of the underlying values.
struct LogValue {
  double log = 0.0;

  static LogValue of(double value) { return {std::log(value)}; }
  static LogValue of(const BigNat& value) { return {log_of(value)}; }
  static LogValue one() { return {0.0}; }

  LogValue operator*(const LogValue& o) const { return {log + o.log}; }
  LogValue& operator*=(const LogValue& o) {
    log += o.log;
    return *this;
  }
  LogValue pow(double e) const { return {log * e}; }
  bool operator<(const LogValue& o) const { return log < o.log; }
  bool operator<=(const LogValue& o) const { return log <= o.log; }

  // 17 significant digits: round-trips an IEEE-754 double.
  std::string str() const { return format_double17(log); }
};

}  // namespace growthlab

#pragma once

#include <numeric>
#include <string>

namespace flagvar {

/// Reduced nonnegative fraction p/q with q > 0. All proportionality tests in
/// this library are exact; there is no floating point anywhere.
struct Ratio {
  long long num = 0;
  long long den = 1;

  static Ratio reduced(long long n, long long d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    return Ratio{n / g, d / g};
  }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  friend bool operator==(const Ratio&, const Ratio&) = default;
};

}  // namespace flagvar

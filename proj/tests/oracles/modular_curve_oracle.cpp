#include "modular_curve_oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {

namespace {

std::size_t phi(std::size_t n) {
  std::size_t r = n;
  for (std::size_t q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    while (n % q == 0) n /= q;
    r -= r / q;
  }
  if (n > 1) r -= r / n;
  return r;
}

}  // namespace

// index = N^2/2 prod (1 - 1/q^2); phi(d) phi(N/d) / 2 cusps of width N/d;
// no elliptic points for N >= 4, so g = 1 + index/12 - cusps/2.
X1Data x1(std::size_t n) {
  if (n < 5) throw std::invalid_argument("x1 oracle needs N >= 5");
  X1Data d;
  std::size_t num = n * n, m = n;
  for (std::size_t q = 2; q <= m; ++q) {
    if (m % q) continue;
    while (m % q == 0) m /= q;
    num = num / (q * q) * (q * q - 1);
  }
  d.index = num / 2;
  for (std::size_t e = 1; e <= n; ++e) {
    if (n % e) continue;
    std::size_t count = phi(e) * phi(n / e) / 2;
    d.cusp_widths.insert(d.cusp_widths.end(), count, n / e);
  }
  std::sort(d.cusp_widths.begin(), d.cusp_widths.end());
  long long twice = 2 + static_cast<long long>(d.index) / 6 - static_cast<long long>(d.cusp_widths.size());
  if (d.index % 6 != 0 || twice % 2 != 0 || twice < 0) throw std::logic_error("x1 genus not integral");
  d.genus = static_cast<std::size_t>(twice / 2);
  return d;
}

}  // namespace oracle

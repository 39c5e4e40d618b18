#include "g2lab/grid.hpp"

#include <cmath>
#include <cstring>
#include <map>

namespace g2lab {

const AxisOps& AxisOps::get(int n, double length) {
  static std::map<std::pair<int, long long>, AxisOps> cache;
  long long lenKey;
  static_assert(sizeof(double) == sizeof(long long));
  std::memcpy(&lenKey, &length, sizeof lenKey);
  auto key = std::make_pair(n, lenKey);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  AxisOps ops;
  ops.n = n;
  ops.length = length;
  ops.waveNumber.assign(n, 0.0);
  const double twoPi = 6.283185307179586476925286766559;
  for (int m = 0; m < n; ++m) {
    int mt = (m <= n / 2) ? m : m - n;
    if (n % 2 == 0 && m == n / 2) mt = 0;  // Nyquist
    ops.waveNumber[m] = twoPi * mt / length;
  }
  ops.fwd.assign(static_cast<size_t>(n) * n, {0.0, 0.0});
  ops.inv.assign(static_cast<size_t>(n) * n, {0.0, 0.0});
  for (int m = 0; m < n; ++m)
    for (int t = 0; t < n; ++t) {
      double ang = -twoPi * m * t / n;
      ops.fwd[static_cast<size_t>(m) * n + t] = {std::cos(ang), std::sin(ang)};
      ops.inv[static_cast<size_t>(t) * n + m] = {std::cos(ang) / n,
                                                 -std::sin(ang) / n};
    }
  ops.deriv.assign(static_cast<size_t>(n) * n, 0.0);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      // Re( (1/n) sum_m i k_m e^{2 pi i m (s-t)/n} )
      double sum = 0.0;
      for (int m = 0; m < n; ++m) {
        double ang = twoPi * m * (s - t) / n;
        sum += -ops.waveNumber[m] * std::sin(ang);
      }
      ops.deriv[static_cast<size_t>(s) * n + t] = sum / n;
    }
  return cache.emplace(key, std::move(ops)).first->second;
}

double pairwiseSum(const double* v, long long n) {
  if (n <= 8) {
    double s = 0.0;
    for (long long i = 0; i < n; ++i) s += v[i];
    return s;
  }
  long long half = n / 2;
  return pairwiseSum(v, half) + pairwiseSum(v + half, n - half);
}

}  // namespace g2lab

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace g2lab {

/// Periodic 7-torus grid. Directions with N_i = 1 carry no variation.
struct Grid {
  std::array<int, 7> dims{1, 1, 1, 1, 1, 1, 1};
  std::array<double, 7> lengths{1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0};

  bool operator==(const Grid&) const = default;

  long long points() const {
    long long p = 1;
    for (int n : dims) p *= n;
    return p;
  }
  double cellVolume() const {
    double v = 1.0;
    for (int i = 0; i < 7; ++i) v *= lengths[i] / dims[i];
    return v;
  }
  double torusVolume() const {
    double v = 1.0;
    for (double l : lengths) v *= l;
    return v;
  }
  long long stride(int axis) const {
    long long s = 1;
    for (int i = 0; i < axis; ++i) s *= dims[i];
    return s;
  }
  std::array<int, 7> coord(long long idx) const {
    std::array<int, 7> c{};
    for (int i = 0; i < 7; ++i) {
      c[i] = static_cast<int>(idx % dims[i]);
      idx /= dims[i];
    }
    return c;
  }
  long long index(const std::array<int, 7>& c) const {
    long long idx = 0;
    for (int i = 6; i >= 0; --i) idx = idx * dims[i] + c[i];
    return idx;
  }
  /// Coordinates of a grid point in [0, L_i).
  std::array<double, 7> position(long long idx) const {
    auto c = coord(idx);
    std::array<double, 7> x{};
    for (int i = 0; i < 7; ++i) x[i] = lengths[i] * c[i] / dims[i];
    return x;
  }
};

/// Dense collocation operators for one periodic axis: spectral derivative
/// and forward/inverse DFT. The Nyquist derivative is zeroed for even N.
struct AxisOps {
  int n = 1;
  double length = 1.0;
  std::vector<double> deriv;                  // n*n, row-major
  std::vector<std::complex<double>> fwd, inv; // n*n DFT and inverse
  std::vector<double> waveNumber;             // n, Nyquist zeroed

  static const AxisOps& get(int n, double length);
};

/// Deterministic pairwise summation (order-independent of chunking).
double pairwiseSum(const double* v, long long n);

}  // namespace g2lab

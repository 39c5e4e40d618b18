#pragma once

#include <span>
#include <vector>

#include "g2lab/linalg7.hpp"
#include "g2lab/multi_index.hpp"

namespace g2lab {

/// Alternating p-tensor on R^7, stored as the C(7,p) coefficients over
/// strictly increasing index tuples.
class Form {
 public:
  Form() : degree_(0), c_(1, 0.0) {}
  explicit Form(int degree)
      : degree_(degree), c_(MultiIndexTable::get().count(degree), 0.0) {}
  Form(int degree, std::vector<double> coeffs);

  int degree() const { return degree_; }
  int size() const { return static_cast<int>(c_.size()); }
  double& operator[](int slot) { return c_[slot]; }
  double operator[](int slot) const { return c_[slot]; }
  std::span<const double> coeffs() const { return c_; }
  std::span<double> coeffs() { return c_; }

  /// Coefficient for an arbitrary index tuple (antisymmetric lookup).
  double entry(std::span<const int> idx) const;
  /// Basis form e^{i1...ip}; indices 0-based, must be valid.
  static Form basis(std::span<const int> idx);

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(double s);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(Form a, double s) { return a *= s; }
  friend Form operator*(double s, Form a) { return a *= s; }

 private:
  int degree_;
  std::vector<double> c_;
};

/// Symmetric 2-tensor, packed upper triangle (28 entries, i <= j).
class SymTensor2 {
 public:
  SymTensor2() { v_.fill(0.0); }
  static int pack(int i, int j) {
    if (i > j) std::swap(i, j);
    return i * 7 - i * (i - 1) / 2 + (j - i);
  }
  double operator()(int i, int j) const { return v_[pack(i, j)]; }
  void set(int i, int j, double x) { v_[pack(i, j)] = x; }
  void add(int i, int j, double x) { v_[pack(i, j)] += x; }

  static SymTensor2 identity();
  Mat7 full() const;
  static SymTensor2 fromFull(const Mat7& m);  // symmetrizes

  double trace() const { return (*this)(0, 0) + (*this)(1, 1) + (*this)(2, 2) +
                                (*this)(3, 3) + (*this)(4, 4) + (*this)(5, 5) +
                                (*this)(6, 6); }

  SymTensor2& operator+=(const SymTensor2& o);
  SymTensor2& operator-=(const SymTensor2& o);
  SymTensor2& operator*=(double s);
  friend SymTensor2 operator+(SymTensor2 a, const SymTensor2& b) { return a += b; }
  friend SymTensor2 operator-(SymTensor2 a, const SymTensor2& b) { return a -= b; }
  friend SymTensor2 operator*(SymTensor2 a, double s) { return a *= s; }
  friend SymTensor2 operator*(double s, SymTensor2 a) { return a *= s; }

  std::span<const double> packed() const { return v_; }
  std::span<double> packed() { return v_; }

 private:
  std::array<double, 28> v_;
};

/// Positive-definite metric with cached inverse and volume density.
struct Metric {
  SymTensor2 g;
  SymTensor2 gInv;
  double sqrtDet = 1.0;

  static Metric identity();
  /// Builds inverse and sqrt(det); throws NonPositiveMetric if not SPD.
  static Metric fromTensor(const SymTensor2& g);

  /// Compound matrix Λ^p(gInv), computed on demand (row-major C(7,p)^2).
  std::vector<double> compoundInv(int p) const;
};

// ---- exterior algebra --------------------------------------------------

Form wedge(const Form& a, const Form& b);
Form interior(std::span<const double> u, const Form& a);  // u: 7-vector
double formInner(const Form& a, const Form& b, const Metric& m);
double tensorInner(const SymTensor2& s, const SymTensor2& t, const Metric& m);
Form hodgeStar(const Form& a, const Metric& m);
Form volumeForm(const Metric& m);

/// The reference G2 structure e^123 + e^145 + e^167 + e^246 + e^275
/// - e^347 - e^356 and its dual 4-form under the identity metric.
const Form& phi0();
const Form& psi0();

}  // namespace g2lab

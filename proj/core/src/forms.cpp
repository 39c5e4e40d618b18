#include "g2lab/forms.hpp"

#include <cmath>

#include "g2lab/errors.hpp"

namespace g2lab {

Form::Form(int degree, std::vector<double> coeffs)
    : degree_(degree), c_(std::move(coeffs)) {
  if (degree_ < 0 || degree_ > kDim)
    throw DegreeOverflow("form degree out of range");
  if (static_cast<int>(c_.size()) != MultiIndexTable::get().count(degree_))
    throw DegreeMismatch("coefficient count does not match degree");
}

double Form::entry(std::span<const int> idx) const {
  auto cn = MultiIndexTable::get().canon(idx);
  if (cn.sign == 0) return 0.0;
  return cn.sign * c_[cn.slot];
}

Form Form::basis(std::span<const int> idx) {
  Form f(static_cast<int>(idx.size()));
  auto cn = MultiIndexTable::get().canon(idx);
  if (cn.sign == 0) throw DegreeMismatch("repeated index in basis form");
  f[cn.slot] = cn.sign;
  return f;
}

Form& Form::operator+=(const Form& o) {
  if (o.degree_ != degree_) throw DegreeMismatch("form degrees differ");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}
Form& Form::operator-=(const Form& o) {
  if (o.degree_ != degree_) throw DegreeMismatch("form degrees differ");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}
Form& Form::operator*=(double s) {
  for (double& x : c_) x *= s;
  return *this;
}

SymTensor2 SymTensor2::identity() {
  SymTensor2 t;
  for (int i = 0; i < 7; ++i) t.set(i, i, 1.0);
  return t;
}

Mat7 SymTensor2::full() const {
  Mat7 m;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) at(m, i, j) = (*this)(i, j);
  return m;
}

SymTensor2 SymTensor2::fromFull(const Mat7& m) {
  SymTensor2 t;
  for (int i = 0; i < 7; ++i)
    for (int j = i; j < 7; ++j) t.set(i, j, 0.5 * (at(m, i, j) + at(m, j, i)));
  return t;
}

SymTensor2& SymTensor2::operator+=(const SymTensor2& o) {
  for (int i = 0; i < 28; ++i) v_[i] += o.v_[i];
  return *this;
}
SymTensor2& SymTensor2::operator-=(const SymTensor2& o) {
  for (int i = 0; i < 28; ++i) v_[i] -= o.v_[i];
  return *this;
}
SymTensor2& SymTensor2::operator*=(double s) {
  for (double& x : v_) x *= s;
  return *this;
}

Metric Metric::identity() {
  Metric m;
  m.g = SymTensor2::identity();
  m.gInv = SymTensor2::identity();
  m.sqrtDet = 1.0;
  return m;
}

Metric Metric::fromTensor(const SymTensor2& g) {
  Metric m;
  m.g = g;
  Mat7 full = g.full();
  Mat7 inv;
  double det;
  if (!spdInverse7(full, inv) || !spdDeterminant7(full, det))
    throw NonPositiveMetric("metric is not positive definite");
  m.gInv = SymTensor2::fromFull(inv);
  m.sqrtDet = std::sqrt(det);
  return m;
}

std::vector<double> Metric::compoundInv(int p) const {
  Mat7 inv = gInv.full();
  std::vector<double> prev, cur;
  for (int q = 1; q <= p; ++q) {
    int n = MultiIndexTable::get().count(q);
    cur.assign(static_cast<size_t>(n) * n, 0.0);
    compound7(inv, q, prev.data(), cur.data());
    prev = cur;
  }
  if (p == 0) return {1.0};
  return cur;
}

Form wedge(const Form& a, const Form& b) {
  int p = a.degree(), q = b.degree();
  if (p + q > kDim) throw DegreeOverflow("wedge degree exceeds 7");
  Form out(p + q);
  for (const auto& e : MultiIndexTable::get().wedgeTable(p, q))
    out[e.out] += e.sign * a[e.a] * b[e.b];
  return out;
}

Form interior(std::span<const double> u, const Form& a) {
  int p = a.degree();
  if (p < 1) throw DegreeUnderflow("interior product of a 0-form");
  const auto& T = MultiIndexTable::get();
  Form out(p - 1);
  for (int s = 0; s < a.size(); ++s) {
    auto I = T.tuple(p, s);
    for (int m = 0; m < p; ++m) {
      auto re = T.remove(p, s, I[m]);
      out[re.out] += re.sign * u[I[m]] * a[s];
    }
  }
  return out;
}

double formInner(const Form& a, const Form& b, const Metric& m) {
  if (a.degree() != b.degree()) throw DegreeMismatch("formInner degrees differ");
  int p = a.degree();
  if (p == 0) return a[0] * b[0];
  std::vector<double> lam = m.compoundInv(p);
  int n = a.size();
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int k = 0; k < n; ++k) row += lam[i * n + k] * b[k];
    sum += a[i] * row;
  }
  return sum;
}

double tensorInner(const SymTensor2& s, const SymTensor2& t, const Metric& m) {
  // (1/2) S_{ij} T_{kl} g^{ik} g^{jl}
  Mat7 S = s.full(), T = t.full(), gi = m.gInv.full();
  double sum = 0.0;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      double sij = at(S, i, j);
      if (sij == 0.0) continue;
      double acc = 0.0;
      for (int k = 0; k < 7; ++k) {
        double gik = at(gi, i, k);
        if (gik == 0.0) continue;
        double inner = 0.0;
        for (int l = 0; l < 7; ++l) inner += at(T, k, l) * at(gi, j, l);
        acc += gik * inner;
      }
      sum += sij * acc;
    }
  return 0.5 * sum;
}

Form hodgeStar(const Form& a, const Metric& m) {
  const auto& T = MultiIndexTable::get();
  int p = a.degree();
  Form out(kDim - p);
  if (p == 0) {
    out[0] = m.sqrtDet * a[0];
    return out;
  }
  std::vector<double> lam = m.compoundInv(p);
  int n = a.size();
  for (int i = 0; i < n; ++i) {
    double raised = 0.0;
    for (int k = 0; k < n; ++k) raised += lam[i * n + k] * a[k];
    out[T.complementSlot(p, i)] += m.sqrtDet * T.complementSign(p, i) * raised;
  }
  return out;
}

Form volumeForm(const Metric& m) {
  if (m.sqrtDet <= 0.0) throw NonPositiveMetric("volume of non-positive metric");
  Form out(kDim);
  out[0] = m.sqrtDet;
  return out;
}

const Form& phi0() {
  static const Form f = [] {
    Form phi(3);
    auto add = [&](int i, int j, int k, double v) {
      std::array<int, 3> idx{i - 1, j - 1, k - 1};
      auto cn = MultiIndexTable::get().canon(idx);
      phi[cn.slot] += cn.sign * v;
    };
    add(1, 2, 3, 1.0);
    add(1, 4, 5, 1.0);
    add(1, 6, 7, 1.0);
    add(2, 4, 6, 1.0);
    add(2, 7, 5, 1.0);
    add(3, 4, 7, -1.0);
    add(3, 5, 6, -1.0);
    return phi;
  }();
  return f;
}

const Form& psi0() {
  static const Form f = hodgeStar(phi0(), Metric::identity());
  return f;
}

}  // namespace g2lab

#include "g2lab/linalg7.hpp"

#include <cmath>

#include "g2lab/multi_index.hpp"

namespace g2lab {

bool cholesky7(const Mat7& a, Mat7& lower) {
  lower.fill(0.0);
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j <= i; ++j) {
      double sum = at(a, i, j);
      for (int k = 0; k < j; ++k) sum -= at(lower, i, k) * at(lower, j, k);
      if (i == j) {
        if (sum <= 0.0 || !std::isfinite(sum)) return false;
        at(lower, i, i) = std::sqrt(sum);
      } else {
        at(lower, i, j) = sum / at(lower, j, j);
      }
    }
  }
  return true;
}

bool spdDeterminant7(const Mat7& a, double& det) {
  Mat7 l;
  if (!cholesky7(a, l)) return false;
  double d = 1.0;
  for (int i = 0; i < 7; ++i) d *= at(l, i, i);
  det = d * d;
  return true;
}

bool spdInverse7(const Mat7& a, Mat7& inv) {
  Mat7 l;
  if (!cholesky7(a, l)) return false;
  // Solve L Linv = I (forward substitution), then inv = Linv^T Linv.
  Mat7 linv{};
  for (int c = 0; c < 7; ++c) {
    for (int i = c; i < 7; ++i) {
      double sum = (i == c) ? 1.0 : 0.0;
      for (int k = c; k < i; ++k) sum -= at(l, i, k) * at(linv, k, c);
      at(linv, i, c) = sum / at(l, i, i);
    }
  }
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j <= i; ++j) {
      double sum = 0.0;
      for (int k = i; k < 7; ++k) sum += at(linv, k, i) * at(linv, k, j);
      at(inv, i, j) = sum;
      at(inv, j, i) = sum;
    }
  return true;
}

std::array<double, 7> symmetricEigenvalues7(const Mat7& a) {
  Mat7 m = a;
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < 7; ++i)
      for (int j = i + 1; j < 7; ++j) off += at(m, i, j) * at(m, i, j);
    if (off < 1e-30) break;
    for (int p = 0; p < 7; ++p)
      for (int q = p + 1; q < 7; ++q) {
        double apq = at(m, p, q);
        if (std::abs(apq) < 1e-300) continue;
        double theta = (at(m, q, q) - at(m, p, p)) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < 7; ++k) {
          double mkp = at(m, k, p), mkq = at(m, k, q);
          at(m, k, p) = c * mkp - s * mkq;
          at(m, k, q) = s * mkp + c * mkq;
        }
        for (int k = 0; k < 7; ++k) {
          double mpk = at(m, p, k), mqk = at(m, q, k);
          at(m, p, k) = c * mpk - s * mqk;
          at(m, q, k) = s * mpk + c * mqk;
        }
      }
  }
  std::array<double, 7> ev;
  for (int i = 0; i < 7; ++i) ev[i] = at(m, i, i);
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j)
      if (ev[j] < ev[i]) std::swap(ev[i], ev[j]);
  return ev;
}

void compound7(const Mat7& a, int p, const double* prev, double* out) {
  const auto& T = MultiIndexTable::get();
  int n = T.count(p);
  if (p == 1) {
    for (int i = 0; i < 49; ++i) out[i] = a[i];
    return;
  }
  int nPrev = T.count(p - 1);
  for (int si = 0; si < n; ++si) {
    auto I = T.tuple(p, si);
    unsigned maskI = T.maskOfSlot(p, si);
    for (int sk = 0; sk < n; ++sk) {
      auto K = T.tuple(p, sk);
      unsigned maskK = T.maskOfSlot(p, sk);
      int kLast = K[p - 1];
      int subK = T.slotOfMask(p - 1, maskK & ~(1u << kLast));
      double det = 0.0;
      double sgn = (p % 2) ? 1.0 : -1.0;  // (-1)^(m+p) at m=1 (1-based)
      for (int m = 0; m < p; ++m) {
        int subI = T.slotOfMask(p - 1, maskI & ~(1u << I[m]));
        det += sgn * at(a, I[m], kLast) * prev[subI * nPrev + subK];
        sgn = -sgn;
      }
      out[si * n + sk] = det;
    }
  }
}

}  // namespace g2lab

#pragma once

#include <array>
#include <span>

namespace g2lab {

using Mat7 = std::array<double, 49>;  // row-major 7x7

inline double& at(Mat7& m, int i, int j) { return m[i * 7 + j]; }
inline double at(const Mat7& m, int i, int j) { return m[i * 7 + j]; }

/// Cholesky factor L (lower) of a symmetric matrix; returns false if the
/// matrix is not positive definite.
bool cholesky7(const Mat7& a, Mat7& lower);

/// Determinant via Cholesky; requires SPD input (asserts via return flag).
bool spdDeterminant7(const Mat7& a, double& det);

/// Inverse of an SPD matrix via Cholesky; returns false if not SPD.
bool spdInverse7(const Mat7& a, Mat7& inv);

/// Eigenvalues of a symmetric 7x7 matrix (ascending), cyclic Jacobi.
std::array<double, 7> symmetricEigenvalues7(const Mat7& a);

/// p-th compound matrix of `a`: out[I*C+K] = det a[rows I, cols K] over the
/// increasing tuples I, K of degree p (C = C(7,p) entries per row).
/// `prev` must hold the (p-1)-th compound; pass nullptr to start at p=1.
void compound7(const Mat7& a, int p, const double* prev, double* out);

}  // namespace g2lab

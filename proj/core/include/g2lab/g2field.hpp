#pragma once

#include <memory>
#include <optional>

#include "g2lab/form_field.hpp"
#include "g2lab/g2frame.hpp"

namespace g2lab {

/// A closed pointwise-positive 3-form field with cached per-point data:
/// metric, inverse, volume density, dual 4-form, and the compound matrices
/// of g^-1 that the pointwise star/inner kernels consume.
class G2Field {
 public:
  /// Builds all caches; throws NonPositiveForm with the offending point.
  /// Closedness is checked when requireClosed (relative to |phi|).
  static G2Field fromPhi(FormField phi3, bool requireClosed = true);

  const Grid& grid() const { return phi_.grid(); }
  const FormField& phi() const { return phi_; }
  const FormField& psi() const { return psi_; }
  const std::vector<double>& density() const { return dens_; }
  /// Row-major 7x7 metric / inverse at a point.
  const double* metricAt(long long p) const { return metric_.data() + 49 * p; }
  const double* metricInvAt(long long p) const {
    return metricInv_.data() + 49 * p;
  }
  /// Compound matrix of g^-1 in degree p at a point (C(7,p)^2 doubles).
  const double* lambdaAt(int degree, long long p) const;

  /// Torsion tau = delta_phi phi (degree 2), computed once on demand.
  const FormField& tau() const;

  /// Pointwise frame view for Form-level kernels (copies the point data).
  G2Frame frameAt(long long p) const;

  double closednessResidual() const { return dPhiResidual_; }

 private:
  FormField phi_, psi_;
  std::vector<double> metric_, metricInv_, dens_;
  std::array<std::vector<double>, 8> lambda_;
  double dPhiResidual_ = 0.0;
  mutable std::shared_ptr<FormField> tau_;
};

/// phi = phi0 + epsilon d(alpha); checks positivity everywhere.
G2Field makeClosedG2(const Grid& g, const FormField& alpha, double epsilon);

/// Flat reference field on a grid (phi0 at every point).
G2Field flatField(const Grid& g);

// ---- pointwise field kernels (variable metric) -----------------------------

/// Hodge star of a field in the varying metric of F.
FormField starField(const FormField& omega, const G2Field& F);

/// Pointwise inner product g_phi(a, b) as a scalar field.
FormField innerField(const FormField& a, const FormField& b, const G2Field& F);

/// Weighted L2 pairing: integral of g(a,b) vol_phi.
double weightedInner(const FormField& a, const FormField& b, const G2Field& F);
double weightedNorm(const FormField& a, const G2Field& F);

/// i-operator applied pointwise with a symmetric-tensor field (packed 28
/// doubles per point) and j-operator producing such a field.
std::vector<double> opJField(const FormField& omega1, const FormField& omega2,
                             const G2Field& F);
FormField opIField(const std::vector<double>& hPacked, const FormField& omega,
                   const G2Field& F);

/// Pointwise type projections of a 3-form field.
struct Decomp3Field {
  FormField p1, p7, p27;
  std::vector<double> f0;  // scalar field
};
Decomp3Field project3Field(const FormField& eta, const G2Field& F);

struct Decomp2Field {
  FormField p7, p14;
};
Decomp2Field project2Field(const FormField& beta, const G2Field& F);

/// Positivity probe: true when phi3 is pointwise positive on its grid.
bool isPositive(const FormField& phi3);

}  // namespace g2lab

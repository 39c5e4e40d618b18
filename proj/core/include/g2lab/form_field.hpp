#pragma once

#include <functional>
#include <string>

#include "g2lab/forms.hpp"
#include "g2lab/grid.hpp"

namespace g2lab {

/// A degree-p form field over a periodic grid: P x C(7,p) doubles,
/// row-major over grid points (x1 fastest), then coefficient slot.
class FormField {
 public:
  FormField() = default;
  FormField(const Grid& g, int degree);

  const Grid& grid() const { return grid_; }
  int degree() const { return degree_; }
  int comps() const { return comps_; }
  long long points() const { return grid_.points(); }

  double* at(long long p) { return data_.data() + p * comps_; }
  const double* at(long long p) const { return data_.data() + p * comps_; }
  std::vector<double>& raw() { return data_; }
  const std::vector<double>& raw() const { return data_; }

  FormField& operator+=(const FormField& o);
  FormField& operator-=(const FormField& o);
  FormField& operator*=(double s);
  friend FormField operator+(FormField a, const FormField& b) { return a += b; }
  friend FormField operator-(FormField a, const FormField& b) { return a -= b; }
  friend FormField operator*(FormField a, double s) { return a *= s; }
  friend FormField operator*(double s, FormField a) { return a *= s; }
  void axpy(double a, const FormField& x);  // this += a*x

  double maxAbs() const;
  /// Flat (componentwise) L2 norm, no metric weight; cheap diagnostics.
  double flatNorm() const;

  /// Constant field from a pointwise form.
  static FormField constant(const Grid& g, const Form& f);

 private:
  Grid grid_;
  int degree_ = 0;
  int comps_ = 1;
  std::vector<double> data_;
};

/// A tangent direction of the moduli space: an exact 3-form with its
/// stored 2-form potential.
struct TangentVector {
  FormField alpha;  // degree 2
  FormField X;      // degree 3 = d(alpha)
};

// ---- spectral calculus ---------------------------------------------------

/// Partial derivative along one axis (Fourier collocation).
FormField derivAxis(const FormField& f, int axis);

/// Exterior derivative; d(d(.)) vanishes to roundoff.
FormField dSpectral(const FormField& omega);

/// Pointwise wedge of two fields on the same grid.
FormField wedgeField(const FormField& a, const FormField& b);

/// Multiply every coefficient by a scalar field.
FormField scaleField(const FormField& a, const std::vector<double>& s);

/// Integral of a scalar field against a volume density (pairwise sum).
double integrate(const FormField& f, const std::vector<double>& volDensity);

/// Integral of a 7-form (its coefficient already carries the density).
double integrateTop(const FormField& top);

/// Multiply each Fourier mode by symbol(k1..k7); symbol must be even in k
/// so real fields stay real. Nyquist wavenumbers are zero.
FormField applyFourierMultiplier(
    const FormField& f, const std::function<double(const std::array<double, 7>&)>& symbol);

/// Flat-metric machinery (identity metric on every fiber): Hodge star,
/// codifferential, Green operator (Fourier division by |k|^2, zero mode
/// annihilated) and the exact / coexact projectors built from it.
FormField flatStar(const FormField& f);
FormField flatCodiff(const FormField& f);
FormField flatGreen(const FormField& f);
FormField flatProjectExact(const FormField& f);
FormField flatProjectCoexact(const FormField& f);

// ---- random fields and I/O ------------------------------------------------

/// Reproducible band-limited random exact 3-form (with its potential).
/// Requires bandLimit <= min over active axes of N_i/2.
TangentVector randomExact3Form(const Grid& g, unsigned long long seed,
                               int bandLimit);

/// Band-limited random scalar field (mean zero), for test functions.
std::vector<double> randomScalarField(const Grid& g, unsigned long long seed,
                                      int bandLimit);

/// Snapshot format "G2F1": u32 degree, 7 x u32 dims, 7 x f64 lengths,
/// then P*C(7,p) f64 payload, all little-endian. Round trips bit-exactly.
void saveField(const std::string& path, const FormField& f);
FormField loadField(const std::string& path);

}  // namespace g2lab

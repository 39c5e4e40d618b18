#pragma once

#include <array>

#include "g2lab/forms.hpp"
#include "g2lab/report.hpp"

namespace g2lab {

/// A positive 3-form together with the derived data the algebra needs.
struct G2Frame {
  Form phi;     // degree 3
  Metric metric;
  Form psi;     // degree 4, = *phi
  Form vol;     // degree 7
};

/// Metric recovery: (e_i ⌟ phi) ∧ (e_j ⌟ phi) ∧ phi = B_ij e^{1..7},
/// B = 6 g sqrt(det g). Throws NonPositiveForm when B is not SPD.
G2Frame frameFromPhi(const Form& phi);

/// Type decomposition of a 2-form: Omega^2 = Omega^2_7 + Omega^2_14.
struct Decomp2 {
  Form p7, p14;
};
Decomp2 project2(const Form& beta, const G2Frame& fr);

/// Type decomposition of a 3-form: eta = 3 f0 phi + *(f1 ∧ phi) + f3.
struct Decomp3 {
  Form p1, p7, p27;
  double f0 = 0.0;
  Form f1;   // degree 1
  Form f3;   // = p27
};
Decomp3 project3(const Form& eta, const G2Frame& fr);

/// i-operator: inserts a symmetric 2-tensor into a p-form slot by slot.
Form opI(const SymTensor2& h, const Form& omega, const G2Frame& fr);

/// j-operator: symmetric 2-tensor built from two p-forms by contracting
/// away all but one index of each.
SymTensor2 opJ(const Form& omega1, const Form& omega2, const G2Frame& fr);

/// Eigenvalue data of the torsion square tau_i^l tau_lj (= -j_tau tau).
struct TauSpectrum {
  std::array<double, 7> eigenvalues;  // ascending, w.r.t. the frame metric
  double normSq = 0.0;                // g(tau, tau)
  double quartic = 0.0;               // tau_i^l tau_lj tau^ir tau_r^j
  double tensorInnerSq = 0.0;         // tensorInner(j_tau tau, j_tau tau)
};
/// Requires tau in Omega^2_14 (checked, NotIn14 otherwise).
TauSpectrum tauSpectrum(const Form& tau, const G2Frame& fr);

/// Bryant's family of 3-forms inducing the same metric as fr.phi;
/// requires f^2 + |eta|^2 = 1 (ConstraintViolated otherwise).
Form isometricFamily(const G2Frame& fr, double f, const Form& eta);

/// Randomized verification of the pointwise identity stack: contraction
/// identities, i/j norms and adjoints, projection norms, exchange lemma,
/// and the i/j inverse relations on the irreducible pieces.
Report identitySuite(const G2Frame& fr, int trials, unsigned long long seed);

/// Random positive frame A*phi0 with ||A - I|| <= spread (default safely
/// inside the positive cone).
G2Frame randomFrame(unsigned long long seed, double spread = 0.2);

}  // namespace g2lab

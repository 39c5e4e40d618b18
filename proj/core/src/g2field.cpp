#include "g2lab/g2field.hpp"

#include <cmath>

#include "g2lab/errors.hpp"

namespace g2lab {

G2Field G2Field::fromPhi(FormField phi3, bool requireClosed) {
  if (phi3.degree() != 3) throw DegreeMismatch("G2Field needs a 3-form field");
  G2Field F;
  const Grid& g = phi3.grid();
  long long P = g.points();
  F.phi_ = std::move(phi3);
  F.psi_ = FormField(g, 4);
  F.metric_.assign(49 * P, 0.0);
  F.metricInv_.assign(49 * P, 0.0);
  F.dens_.assign(P, 0.0);
  const auto& T = MultiIndexTable::get();
  for (int p = 1; p <= 7; ++p) {
    size_t n = T.count(p);
    F.lambda_[p].assign(n * n * P, 0.0);
  }
  F.lambda_[0].assign(P, 1.0);

  for (long long pt = 0; pt < P; ++pt) {
    Form phi(3);
    for (int c = 0; c < 35; ++c) phi[c] = F.phi_.at(pt)[c];
    G2Frame fr;
    try {
      fr = frameFromPhi(phi);
    } catch (const NonPositiveForm& e) {
      throw NonPositiveForm(std::string(e.what()) + " at grid point " +
                                std::to_string(pt),
                            pt);
    }
    Mat7 gm = fr.metric.g.full();
    Mat7 gi = fr.metric.gInv.full();
    for (int i = 0; i < 49; ++i) {
      F.metric_[49 * pt + i] = gm[i];
      F.metricInv_[49 * pt + i] = gi[i];
    }
    F.dens_[pt] = fr.metric.sqrtDet;
    for (int c = 0; c < 35; ++c) F.psi_.at(pt)[c] = fr.psi[c];
    const double* prev = nullptr;
    for (int p = 1; p <= 7; ++p) {
      size_t n = T.count(p);
      double* out = F.lambda_[p].data() + n * n * pt;
      compound7(gi, p, prev, out);
      prev = out;
    }
  }

  FormField dphi = dSpectral(F.phi_);
  F.dPhiResidual_ = dphi.flatNorm() / std::max(1.0, F.phi_.flatNorm());
  if (requireClosed && F.dPhiResidual_ > 1e-10)
    throw NotClosed("phi field is not closed: residual " +
                    std::to_string(F.dPhiResidual_));
  return F;
}

const double* G2Field::lambdaAt(int degree, long long p) const {
  size_t n = MultiIndexTable::get().count(degree);
  return lambda_[degree].data() + n * n * p;
}

G2Frame G2Field::frameAt(long long p) const {
  G2Frame fr;
  fr.phi = Form(3);
  for (int c = 0; c < 35; ++c) fr.phi[c] = phi_.at(p)[c];
  fr.psi = Form(4);
  for (int c = 0; c < 35; ++c) fr.psi[c] = psi_.at(p)[c];
  Mat7 gm, gi;
  for (int i = 0; i < 49; ++i) {
    gm[i] = metric_[49 * p + i];
    gi[i] = metricInv_[49 * p + i];
  }
  fr.metric.g = SymTensor2::fromFull(gm);
  fr.metric.gInv = SymTensor2::fromFull(gi);
  fr.metric.sqrtDet = dens_[p];
  fr.vol = Form(7);
  fr.vol[0] = dens_[p];
  return fr;
}

namespace {
FormField codiffInternal(const FormField& omega, const G2Field& F);
}

const FormField& G2Field::tau() const {
  if (!tau_) tau_ = std::make_shared<FormField>(codiffInternal(phi_, *this));
  return *tau_;
}

G2Field makeClosedG2(const Grid& g, const FormField& alpha, double epsilon) {
  if (!(alpha.grid() == g)) throw GridMismatch("alpha grid mismatch");
  if (alpha.degree() != 2) throw DegreeMismatch("alpha must be a 2-form");
  FormField phi = FormField::constant(g, phi0());
  phi.axpy(epsilon, dSpectral(alpha));
  return G2Field::fromPhi(std::move(phi));
}

G2Field flatField(const Grid& g) {
  return G2Field::fromPhi(FormField::constant(g, phi0()));
}

FormField starField(const FormField& omega, const G2Field& F) {
  if (!(omega.grid() == F.grid())) throw GridMismatch("starField grid");
  const auto& T = MultiIndexTable::get();
  int p = omega.degree();
  FormField out(F.grid(), 7 - p);
  long long P = omega.points();
  if (p == 0) {
    for (long long pt = 0; pt < P; ++pt)
      out.at(pt)[0] = F.density()[pt] * omega.at(pt)[0];
    return out;
  }
  int n = omega.comps();
  for (long long pt = 0; pt < P; ++pt) {
    const double* lam = F.lambdaAt(p, pt);
    const double* src = omega.at(pt);
    double* dst = out.at(pt);
    double s = F.density()[pt];
    for (int i = 0; i < n; ++i) {
      double raised = 0.0;
      const double* row = lam + static_cast<size_t>(i) * n;
      for (int k = 0; k < n; ++k) raised += row[k] * src[k];
      dst[T.complementSlot(p, i)] = s * T.complementSign(p, i) * raised;
    }
  }
  return out;
}

FormField innerField(const FormField& a, const FormField& b,
                     const G2Field& F) {
  if (!(a.grid() == F.grid()) || !(b.grid() == F.grid()))
    throw GridMismatch("innerField grid");
  if (a.degree() != b.degree()) throw DegreeMismatch("innerField degrees");
  int p = a.degree();
  int n = a.comps();
  FormField out(F.grid(), 0);
  long long P = a.points();
  if (p == 0) {
    for (long long pt = 0; pt < P; ++pt)
      out.at(pt)[0] = a.at(pt)[0] * b.at(pt)[0];
    return out;
  }
  for (long long pt = 0; pt < P; ++pt) {
    const double* lam = F.lambdaAt(p, pt);
    const double* pa = a.at(pt);
    const double* pb = b.at(pt);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      double row = 0.0;
      const double* l = lam + static_cast<size_t>(i) * n;
      for (int k = 0; k < n; ++k) row += l[k] * pb[k];
      sum += pa[i] * row;
    }
    out.at(pt)[0] = sum;
  }
  return out;
}

double weightedInner(const FormField& a, const FormField& b,
                     const G2Field& F) {
  return integrate(innerField(a, b, F), F.density());
}

double weightedNorm(const FormField& a, const G2Field& F) {
  return std::sqrt(std::max(0.0, weightedInner(a, a, F)));
}

std::vector<double> opJField(const FormField& omega1, const FormField& omega2,
                             const G2Field& F) {
  int p = omega1.degree();
  if (p != omega2.degree() || p < 1)
    throw DegreeMismatch("opJField needs two p-forms, p >= 1");
  const auto& T = MultiIndexTable::get();
  int nA = T.count(p - 1);
  long long P = omega1.points();
  std::vector<double> out(28 * P, 0.0);
  std::vector<double> v1(7 * nA), v2(7 * nA), w2(7 * nA);
  double fact = 1.0;
  for (int k = 2; k <= p - 1; ++k) fact *= k;
  for (long long pt = 0; pt < P; ++pt) {
    const double* lam = F.lambdaAt(p - 1, pt);
    const double* o1 = omega1.at(pt);
    const double* o2 = omega2.at(pt);
    std::fill(v1.begin(), v1.end(), 0.0);
    std::fill(v2.begin(), v2.end(), 0.0);
    for (int a = 0; a < nA; ++a)
      for (int i = 0; i < 7; ++i) {
        auto ins = T.insert(p - 1, a, i);
        if (ins.out < 0) continue;
        v1[i * nA + a] = ins.sign * o1[ins.out];
        v2[i * nA + a] = ins.sign * o2[ins.out];
      }
    for (int i = 0; i < 7; ++i)
      for (int a = 0; a < nA; ++a) {
        double sum = 0.0;
        const double* l = lam + static_cast<size_t>(a) * nA;
        for (int b = 0; b < nA; ++b) sum += l[b] * v2[i * nA + b];
        w2[i * nA + a] = sum;
      }
    double* o = out.data() + 28 * pt;
    for (int i = 0; i < 7; ++i)
      for (int j = i; j < 7; ++j) {
        double mij = 0.0, mji = 0.0;
        for (int a = 0; a < nA; ++a) {
          mij += v1[i * nA + a] * w2[j * nA + a];
          mji += v1[j * nA + a] * w2[i * nA + a];
        }
        o[SymTensor2::pack(i, j)] = fact * 0.5 * (mij + mji);
      }
  }
  return out;
}

FormField opIField(const std::vector<double>& hPacked, const FormField& omega,
                   const G2Field& F) {
  int p = omega.degree();
  if (p < 1) throw DegreeUnderflow("opIField needs degree >= 1");
  long long P = omega.points();
  if (hPacked.size() != static_cast<size_t>(28 * P))
    throw GridMismatch("packed tensor field size mismatch");
  const auto& T = MultiIndexTable::get();
  FormField out(F.grid(), p);
  // replace-table equivalent, built once per degree
  struct Rep {
    std::vector<std::int32_t> slot;
    std::vector<std::int8_t> sign;
  };
  static std::array<Rep, 8> reps = [] {
    std::array<Rep, 8> all;
    const auto& TT = MultiIndexTable::get();
    for (int deg = 1; deg <= 7; ++deg) {
      auto& r = all[deg];
      int n = TT.count(deg);
      r.slot.assign(static_cast<size_t>(n) * deg * 7, -1);
      r.sign.assign(static_cast<size_t>(n) * deg * 7, 0);
      for (int s = 0; s < n; ++s) {
        auto I = TT.tuple(deg, s);
        for (int m = 0; m < deg; ++m)
          for (int x = 0; x < 7; ++x) {
            std::array<int, 7> idx{};
            for (int k = 0; k < deg; ++k) idx[k] = I[k];
            idx[m] = x;
            auto cn = TT.canon({idx.data(), static_cast<size_t>(deg)});
            size_t e = (static_cast<size_t>(s) * deg + m) * 7 + x;
            if (cn.sign != 0) {
              r.slot[e] = cn.slot;
              r.sign[e] = static_cast<std::int8_t>(cn.sign);
            }
          }
      }
    }
    return all;
  }();
  const Rep& rep = reps[p];
  int n = omega.comps();
  for (long long pt = 0; pt < P; ++pt) {
    const double* gi = F.metricInvAt(pt);
    const double* h = hPacked.data() + 28 * pt;
    const double* src = omega.at(pt);
    double* dst = out.at(pt);
    double hr[49];
    for (int a = 0; a < 7; ++a)
      for (int r = 0; r < 7; ++r) {
        double sum = 0.0;
        for (int c = 0; c < 7; ++c)
          sum += h[SymTensor2::pack(a, c)] * gi[c * 7 + r];
        hr[a * 7 + r] = sum;
      }
    for (int s = 0; s < n; ++s) {
      auto I = T.tuple(p, s);
      double sum = 0.0;
      for (int m = 0; m < p; ++m) {
        size_t base = (static_cast<size_t>(s) * p + m) * 7;
        for (int x = 0; x < 7; ++x) {
          auto sl = rep.slot[base + x];
          if (sl < 0) continue;
          sum += hr[I[m] * 7 + x] * rep.sign[base + x] * src[sl];
        }
      }
      dst[s] = sum;
    }
  }
  return out;
}

Decomp3Field project3Field(const FormField& eta, const G2Field& F) {
  Decomp3Field d;
  FormField ip = innerField(eta, F.phi(), F);
  long long P = eta.points();
  d.f0.assign(P, 0.0);
  std::vector<double> threeF0(P);
  for (long long p = 0; p < P; ++p) {
    d.f0[p] = ip.at(p)[0] / 21.0;
    threeF0[p] = 3.0 * d.f0[p];
  }
  d.p1 = scaleField(F.phi(), threeF0);
  d.p7 = starField(wedgeField(F.phi(), starField(wedgeField(F.phi(), eta), F)),
                   F) *
         -0.25;
  d.p27 = eta - d.p1 - d.p7;
  return d;
}

Decomp2Field project2Field(const FormField& beta, const G2Field& F) {
  Decomp2Field d;
  FormField sw = starField(wedgeField(beta, F.phi()), F);
  d.p7 = (beta + sw) * (1.0 / 3.0);
  d.p14 = beta - d.p7;
  return d;
}

bool isPositive(const FormField& phi3) {
  long long P = phi3.points();
  for (long long pt = 0; pt < P; ++pt) {
    Form phi(3);
    for (int c = 0; c < 35; ++c) phi[c] = phi3.at(pt)[c];
    try {
      frameFromPhi(phi);
    } catch (const NonPositiveForm&) {
      return false;
    }
  }
  return true;
}

namespace {

// delta = (-1)^p * d * with the pointwise star; defined here so tau() can
// use it without a dependency on the hodge unit.
FormField codiffInternal(const FormField& omega, const G2Field& F) {
  int p = omega.degree();
  FormField out = starField(dSpectral(starField(omega, F)), F);
  if (p % 2 != 0) out *= -1.0;
  return out;
}

}  // namespace

}  // namespace g2lab

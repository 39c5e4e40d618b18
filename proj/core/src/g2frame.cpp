#include "g2lab/g2frame.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "g2lab/errors.hpp"
#include "g2lab/rng.hpp"

namespace g2lab {

namespace {

// (slot, pos, newIndex) -> coefficient lookup for the tuple with the index
// at `pos` replaced. Used by the i-operator.
struct ReplaceTable {
  std::vector<std::int32_t> slot;  // -1 when the tuple degenerates
  std::vector<std::int8_t> sign;
};

const ReplaceTable& replaceTable(int p) {
  static std::array<ReplaceTable, kDim + 1> tabs = [] {
    std::array<ReplaceTable, kDim + 1> all;
    const auto& T = MultiIndexTable::get();
    for (int p = 1; p <= kDim; ++p) {
      auto& tab = all[p];
      int n = T.count(p);
      tab.slot.assign(static_cast<size_t>(n) * p * kDim, -1);
      tab.sign.assign(static_cast<size_t>(n) * p * kDim, 0);
      for (int s = 0; s < n; ++s) {
        auto I = T.tuple(p, s);
        for (int m = 0; m < p; ++m) {
          for (int r = 0; r < kDim; ++r) {
            std::array<int, kDim> idx{};
            for (int k = 0; k < p; ++k) idx[k] = I[k];
            idx[m] = r;
            auto cn = T.canon({idx.data(), static_cast<size_t>(p)});
            size_t e = (static_cast<size_t>(s) * p + m) * kDim + r;
            if (cn.sign != 0) {
              tab.slot[e] = cn.slot;
              tab.sign[e] = static_cast<std::int8_t>(cn.sign);
            }
          }
        }
      }
    }
    return all;
  }();
  return tabs[p];
}

double formNorm(const Form& a, const Metric& m) {
  return std::sqrt(std::max(0.0, formInner(a, a, m)));
}

void fill3(const Form& a, double out[7][7][7]) {
  std::memset(out, 0, sizeof(double) * 343);
  const auto& T = MultiIndexTable::get();
  for (int s = 0; s < a.size(); ++s) {
    auto I = T.tuple(3, s);
    int i = I[0], j = I[1], k = I[2];
    double v = a[s];
    out[i][j][k] = v;  out[j][k][i] = v;  out[k][i][j] = v;
    out[i][k][j] = -v; out[j][i][k] = -v; out[k][j][i] = -v;
  }
}

void fill4(const Form& a, double out[7][7][7][7]) {
  std::memset(out, 0, sizeof(double) * 2401);
  const auto& T = MultiIndexTable::get();
  static const int order[24][4] = {
      {0,1,2,3},{0,1,3,2},{0,2,1,3},{0,2,3,1},{0,3,1,2},{0,3,2,1},
      {1,0,2,3},{1,0,3,2},{1,2,0,3},{1,2,3,0},{1,3,0,2},{1,3,2,0},
      {2,0,1,3},{2,0,3,1},{2,1,0,3},{2,1,3,0},{2,3,0,1},{2,3,1,0},
      {3,0,1,2},{3,0,2,1},{3,1,0,2},{3,1,2,0},{3,2,0,1},{3,2,1,0}};
  for (int s = 0; s < a.size(); ++s) {
    auto I = T.tuple(4, s);
    for (const auto& o : order) {
      int tmp[4] = {o[0], o[1], o[2], o[3]};
      int sgn = 1;
      for (int x = 0; x < 4; ++x)
        for (int y = x + 1; y < 4; ++y)
          if (tmp[x] > tmp[y]) { std::swap(tmp[x], tmp[y]); sgn = -sgn; }
      out[I[o[0]]][I[o[1]]][I[o[2]]][I[o[3]]] = sgn * a[s];
    }
  }
}

Form randomForm(int degree, Rng& rng) {
  Form f(degree);
  for (int i = 0; i < f.size(); ++i) f[i] = rng.normal();
  return f;
}

SymTensor2 randomSym(Rng& rng) {
  SymTensor2 h;
  for (int i = 0; i < 7; ++i)
    for (int j = i; j < 7; ++j) h.set(i, j, rng.normal());
  return h;
}

double traceG(const SymTensor2& h, const Metric& m) {
  Mat7 gi = m.gInv.full();
  double tr = 0.0;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) tr += at(gi, i, j) * h(i, j);
  return tr;
}

}  // namespace

G2Frame frameFromPhi(const Form& phi) {
  if (phi.degree() != 3) throw DegreeMismatch("frameFromPhi needs a 3-form");
  std::array<Form, 7> contr;
  for (int i = 0; i < 7; ++i) {
    std::array<double, 7> e{};
    e[i] = 1.0;
    contr[i] = interior(e, phi);
  }
  Mat7 bOver6{};
  for (int i = 0; i < 7; ++i)
    for (int j = i; j < 7; ++j) {
      Form top = wedge(wedge(contr[i], contr[j]), phi);
      double v = top[0] / 6.0;
      at(bOver6, i, j) = v;
      at(bOver6, j, i) = v;
    }
  double det;
  if (!spdDeterminant7(bOver6, det) || det <= 0.0)
    throw NonPositiveForm("3-form is not positive");
  double s = std::pow(det, 1.0 / 9.0);  // det(B/6) = s^9, s = sqrt(det g)
  SymTensor2 g;
  for (int i = 0; i < 7; ++i)
    for (int j = i; j < 7; ++j) g.set(i, j, at(bOver6, i, j) / s);
  G2Frame fr;
  fr.phi = phi;
  fr.metric = Metric::fromTensor(g);
  fr.psi = hodgeStar(phi, fr.metric);
  fr.vol = volumeForm(fr.metric);
  return fr;
}

Decomp2 project2(const Form& beta, const G2Frame& fr) {
  if (beta.degree() != 2) throw DegreeMismatch("project2 needs a 2-form");
  Form starWedge = hodgeStar(wedge(beta, fr.phi), fr.metric);
  Decomp2 d;
  d.p7 = (beta + starWedge) * (1.0 / 3.0);
  d.p14 = (beta * 2.0 - starWedge) * (1.0 / 3.0);
  return d;
}

Decomp3 project3(const Form& eta, const G2Frame& fr) {
  if (eta.degree() != 3) throw DegreeMismatch("project3 needs a 3-form");
  // With the orientation fixed by eps^{1..7} = +1 the 7-part operator
  // *(phi ∧ *(phi ∧ .)) has eigenvalue -4 on Omega^3_7 (and the matching
  // sign flip lands in f1); the 2-form identities keep their printed signs.
  Decomp3 d;
  d.f0 = formInner(eta, fr.phi, fr.metric) / 21.0;
  d.p1 = fr.phi * (3.0 * d.f0);
  d.p7 = hodgeStar(wedge(fr.phi, hodgeStar(wedge(fr.phi, eta), fr.metric)),
                   fr.metric) *
         -0.25;
  d.p27 = eta - d.p1 - d.p7;
  d.f1 = hodgeStar(wedge(eta, fr.phi), fr.metric) * -0.25;
  d.f3 = d.p27;
  return d;
}

Form opI(const SymTensor2& h, const Form& omega, const G2Frame& fr) {
  int p = omega.degree();
  if (p < 1) throw DegreeUnderflow("opI needs degree >= 1");
  Mat7 hr{};  // h with the second index raised
  Mat7 gi = fr.metric.gInv.full();
  for (int a = 0; a < 7; ++a)
    for (int r = 0; r < 7; ++r) {
      double sum = 0.0;
      for (int c = 0; c < 7; ++c) sum += h(a, c) * at(gi, c, r);
      at(hr, a, r) = sum;
    }
  const auto& T = MultiIndexTable::get();
  const auto& rep = replaceTable(p);
  Form out(p);
  for (int s = 0; s < out.size(); ++s) {
    auto I = T.tuple(p, s);
    double sum = 0.0;
    for (int m = 0; m < p; ++m) {
      size_t base = (static_cast<size_t>(s) * p + m) * kDim;
      for (int r = 0; r < kDim; ++r) {
        auto sl = rep.slot[base + r];
        if (sl < 0) continue;
        sum += at(hr, I[m], r) * rep.sign[base + r] * omega[sl];
      }
    }
    out[s] = sum;
  }
  return out;
}

SymTensor2 opJ(const Form& omega1, const Form& omega2, const G2Frame& fr) {
  int p = omega1.degree();
  if (p != omega2.degree() || p < 1)
    throw DegreeMismatch("opJ needs two p-forms, p >= 1");
  const auto& T = MultiIndexTable::get();
  int nA = T.count(p - 1);
  auto lam = fr.metric.compoundInv(p - 1);
  // vK[i*nA + a] = (omega_K)_{i a_2...a_p} over increasing (p-1)-tuples a
  std::vector<double> v1(7 * nA, 0.0), v2(7 * nA, 0.0);
  for (int a = 0; a < nA; ++a)
    for (int i = 0; i < 7; ++i) {
      auto ins = T.insert(p - 1, a, i);
      if (ins.out < 0) continue;
      v1[i * nA + a] = ins.sign * omega1[ins.out];
      v2[i * nA + a] = ins.sign * omega2[ins.out];
    }
  std::vector<double> w2(7 * nA, 0.0);  // a-indices of v2 raised
  for (int i = 0; i < 7; ++i)
    for (int a = 0; a < nA; ++a) {
      double sum = 0.0;
      for (int b = 0; b < nA; ++b) sum += lam[a * nA + b] * v2[i * nA + b];
      w2[i * nA + a] = sum;
    }
  double fact = 1.0;  // (p-1)!
  for (int k = 2; k <= p - 1; ++k) fact *= k;
  SymTensor2 out;
  for (int i = 0; i < 7; ++i)
    for (int j = i; j < 7; ++j) {
      double mij = 0.0, mji = 0.0;
      for (int a = 0; a < nA; ++a) {
        mij += v1[i * nA + a] * w2[j * nA + a];
        mji += v1[j * nA + a] * w2[i * nA + a];
      }
      out.set(i, j, fact * 0.5 * (mij + mji));
    }
  return out;
}

TauSpectrum tauSpectrum(const Form& tau, const G2Frame& fr) {
  if (tau.degree() != 2) throw DegreeMismatch("tauSpectrum needs a 2-form");
  double norm = formNorm(tau, fr.metric);
  Decomp2 dec = project2(tau, fr);
  if (formNorm(dec.p7, fr.metric) > 1e-8 * std::max(1.0, norm))
    throw NotIn14("tau has a nonzero Omega^2_7 component");

  Mat7 A{};
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      std::array<int, 2> idx{i, j};
      at(A, i, j) = tau.entry(idx);
    }
  Mat7 gi = fr.metric.gInv.full();
  Mat7 Agi{}, M{};  // M_{ij} = tau_i^l tau_{lj}
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      double sum = 0.0;
      for (int k = 0; k < 7; ++k) sum += at(A, i, k) * at(gi, k, j);
      at(Agi, i, j) = sum;
    }
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      double sum = 0.0;
      for (int k = 0; k < 7; ++k) sum += at(Agi, i, k) * at(A, k, j);
      at(M, i, j) = sum;
    }

  // Eigenvalues w.r.t. g: eig(L^-1 M L^-T) with g = L L^T.
  Mat7 L;
  cholesky7(fr.metric.g.full(), L);
  Mat7 X{};
  for (int c = 0; c < 7; ++c)
    for (int i = 0; i < 7; ++i) {
      double sum = at(M, i, c);
      for (int k = 0; k < i; ++k) sum -= at(L, i, k) * at(X, k, c);
      at(X, i, c) = sum / at(L, i, i);
    }
  Mat7 N{};
  for (int c = 0; c < 7; ++c)
    for (int i = 0; i < 7; ++i) {
      double sum = at(X, c, i);
      for (int k = 0; k < i; ++k) sum -= at(L, i, k) * at(N, c, k);
      at(N, c, i) = sum / at(L, i, i);
    }

  TauSpectrum out;
  out.eigenvalues = symmetricEigenvalues7(N);
  out.normSq = formInner(tau, tau, fr.metric);
  double quartic = 0.0;  // Tr(g^-1 M g^-1 M)
  Mat7 giM{};
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      double sum = 0.0;
      for (int k = 0; k < 7; ++k) sum += at(gi, i, k) * at(M, k, j);
      at(giM, i, j) = sum;
    }
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) quartic += at(giM, i, j) * at(giM, j, i);
  out.quartic = quartic;
  out.tensorInnerSq = 0.5 * quartic;
  return out;
}

Form isometricFamily(const G2Frame& fr, double f, const Form& eta) {
  if (eta.degree() != 1) throw DegreeMismatch("isometricFamily needs a 1-form");
  double n2 = formInner(eta, eta, fr.metric);
  if (std::abs(f * f + n2 - 1.0) > 1e-10)
    throw ConstraintViolated("f^2 + |eta|^2 must equal 1");
  SymTensor2 ee;
  for (int i = 0; i < 7; ++i)
    for (int j = i; j < 7; ++j) ee.set(i, j, eta[i] * eta[j]);
  Form bar = fr.phi * (f * f - n2);
  bar += hodgeStar(wedge(eta, fr.phi), fr.metric) * (2.0 * f);
  bar += opI(ee, fr.phi, fr) * 2.0;
  return bar;
}

G2Frame randomFrame(unsigned long long seed, double spread) {
  Rng rng(seed);
  for (int attempt = 0; attempt < 8; ++attempt) {
    Mat7 A{};
    for (int i = 0; i < 7; ++i) at(A, i, i) = 1.0;
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) at(A, i, j) += spread * rng.uniform(-0.5, 0.5);
    std::vector<double> l1(49), l2(441), l3(1225);
    compound7(A, 1, nullptr, l1.data());
    compound7(A, 2, l1.data(), l2.data());
    compound7(A, 3, l2.data(), l3.data());
    Form phi(3);
    const Form& p0 = phi0();
    for (int i = 0; i < 35; ++i) {
      double sum = 0.0;
      for (int j = 0; j < 35; ++j) sum += l3[j * 35 + i] * p0[j];
      phi[i] = sum;
    }
    try {
      return frameFromPhi(phi);
    } catch (const NonPositiveForm&) {
      spread *= 0.5;
    }
  }
  return frameFromPhi(phi0());
}

// ---- identity suite ------------------------------------------------------

namespace {

double relDiff(double lhs, double rhs, double scale = 1.0) {
  return std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), scale});
}

double relFormDiff(const Form& lhs, const Form& rhs, const Metric& m,
                   double scale = 1.0) {
  Form d = lhs - rhs;
  double den = std::max({formNorm(lhs, m), formNorm(rhs, m), scale});
  return formNorm(d, m) / den;
}

double relSymDiff(const SymTensor2& lhs, const SymTensor2& rhs,
                  const Metric& m, double scale = 1.0) {
  SymTensor2 d = lhs - rhs;
  double nl = std::sqrt(std::abs(tensorInner(lhs, lhs, m)));
  double nr = std::sqrt(std::abs(tensorInner(rhs, rhs, m)));
  double nd = std::sqrt(std::abs(tensorInner(d, d, m)));
  return nd / std::max({nl, nr, scale});
}

struct Contractions {
  double phi[7][7][7];
  double psi[7][7][7][7];
  double phiR[7][7][7];     // first index raised
  double psiR[7][7][7][7];  // first index raised
  Mat7 g, gi;

  explicit Contractions(const G2Frame& fr) {
    fill3(fr.phi, phi);
    fill4(fr.psi, psi);
    g = fr.metric.g.full();
    gi = fr.metric.gInv.full();
    for (int a = 0; a < 7; ++a)
      for (int j = 0; j < 7; ++j)
        for (int k = 0; k < 7; ++k) {
          double sum = 0.0;
          for (int i = 0; i < 7; ++i) sum += at(gi, a, i) * phi[i][j][k];
          phiR[a][j][k] = sum;
        }
    for (int a = 0; a < 7; ++a)
      for (int j = 0; j < 7; ++j)
        for (int k = 0; k < 7; ++k)
          for (int l = 0; l < 7; ++l) {
            double sum = 0.0;
            for (int i = 0; i < 7; ++i) sum += at(gi, a, i) * psi[i][j][k][l];
            psiR[a][j][k][l] = sum;
          }
  }
};

void contractionChecks(const Contractions& C, Report& rep) {
  // (1) phi_{ijk} phi_{abn} g^{ia} g^{jb} = 6 g_{kn}
  {
    double worst = 0.0, scale = 1.0;
    for (int k = 0; k < 7; ++k)
      for (int n = 0; n < 7; ++n) {
        double lhs = 0.0;
        for (int a = 0; a < 7; ++a)
          for (int j = 0; j < 7; ++j)
            for (int b = 0; b < 7; ++b)
              lhs += C.phiR[a][j][k] * at(C.gi, j, b) * C.phi[a][b][n];
        double rhs = 6.0 * at(C.g, k, n);
        worst = std::max(worst, std::abs(lhs - rhs));
        scale = std::max(scale, std::abs(rhs));
      }
    rep.absorb("contraction_phiphi_2x", worst / scale, 1e-10);
  }
  // (2) psi_{ijkl} psi_{abmn} g^{ia} g^{jb} g^{km} = 24 g_{ln}
  {
    double worst = 0.0, scale = 1.0;
    for (int l = 0; l < 7; ++l)
      for (int n = 0; n < 7; ++n) {
        double lhs = 0.0;
        for (int a = 0; a < 7; ++a)
          for (int j = 0; j < 7; ++j)
            for (int k = 0; k < 7; ++k) {
              double p1 = C.psiR[a][j][k][l];
              if (p1 == 0.0) continue;
              for (int b = 0; b < 7; ++b)
                for (int mm = 0; mm < 7; ++mm)
                  lhs += p1 * at(C.gi, j, b) * at(C.gi, k, mm) *
                         C.psi[a][b][mm][n];
            }
        double rhs = 24.0 * at(C.g, l, n);
        worst = std::max(worst, std::abs(lhs - rhs));
        scale = std::max(scale, std::abs(rhs));
      }
    rep.absorb("contraction_psipsi_3x", worst / scale, 1e-10);
  }
  // (3) phi_{ijk} phi_{abl} g^{ia} = g_{jb} g_{kl} - g_{jl} g_{kb} + psi_{jkbl}
  {
    double worst = 0.0, scale = 1.0;
    for (int j = 0; j < 7; ++j)
      for (int k = 0; k < 7; ++k)
        for (int b = 0; b < 7; ++b)
          for (int l = 0; l < 7; ++l) {
            double lhs = 0.0;
            for (int a = 0; a < 7; ++a) lhs += C.phiR[a][j][k] * C.phi[a][b][l];
            double rhs = at(C.g, j, b) * at(C.g, k, l) -
                         at(C.g, j, l) * at(C.g, k, b) + C.psi[j][k][b][l];
            worst = std::max(worst, std::abs(lhs - rhs));
            scale = std::max(scale, std::abs(rhs));
          }
    rep.absorb("contraction_phiphi_1x", worst / scale, 1e-10);
  }
  // (4) phi_{ijk} psi_{abmn} g^{ia} g^{jb} = 4 phi_{kmn}
  {
    double worst = 0.0, scale = 1.0;
    for (int k = 0; k < 7; ++k)
      for (int mm = 0; mm < 7; ++mm)
        for (int n = 0; n < 7; ++n) {
          double lhs = 0.0;
          for (int a = 0; a < 7; ++a)
            for (int j = 0; j < 7; ++j)
              for (int b = 0; b < 7; ++b)
                lhs += C.phiR[a][j][k] * at(C.gi, j, b) * C.psi[a][b][mm][n];
          double rhs = 4.0 * C.phi[k][mm][n];
          worst = std::max(worst, std::abs(lhs - rhs));
          scale = std::max(scale, std::abs(rhs));
        }
    rep.absorb("contraction_phipsi_2x", worst / scale, 1e-10);
  }
  // (5) phi_{ijk} psi_{abmn} g^{ia} = antisymmetrized g*phi pattern
  {
    double worst = 0.0, scale = 1.0;
    for (int j = 0; j < 7; ++j)
      for (int k = 0; k < 7; ++k)
        for (int b = 0; b < 7; ++b)
          for (int mm = 0; mm < 7; ++mm)
            for (int n = 0; n < 7; ++n) {
              double lhs = 0.0;
              for (int a = 0; a < 7; ++a)
                lhs += C.phiR[a][j][k] * C.psi[a][b][mm][n];
              double rhs = (at(C.g, j, b) * C.phi[k][mm][n] -
                            at(C.g, j, mm) * C.phi[k][b][n] +
                            at(C.g, j, n) * C.phi[k][b][mm]) -
                           (at(C.g, k, b) * C.phi[j][mm][n] -
                            at(C.g, k, mm) * C.phi[j][b][n] +
                            at(C.g, k, n) * C.phi[j][b][mm]);
              worst = std::max(worst, std::abs(lhs - rhs));
              scale = std::max(scale, std::abs(rhs));
            }
    rep.absorb("contraction_phipsi_1x", worst / scale, 1e-10);
  }
  // (6) psi_{ijkl} psi_{abmn} g^{ia} g^{jb} = 2 psi_{klmn}
  //     + 4 (g_{km} g_{ln} - g_{kn} g_{lm})
  {
    double worst = 0.0, scale = 1.0;
    for (int k = 0; k < 7; ++k)
      for (int l = 0; l < 7; ++l)
        for (int mm = 0; mm < 7; ++mm)
          for (int n = 0; n < 7; ++n) {
            double lhs = 0.0;
            for (int a = 0; a < 7; ++a)
              for (int j = 0; j < 7; ++j) {
                double p1 = C.psiR[a][j][k][l];
                if (p1 == 0.0) continue;
                for (int b = 0; b < 7; ++b)
                  lhs += p1 * at(C.gi, j, b) * C.psi[a][b][mm][n];
              }
            double rhs = 2.0 * C.psi[k][l][mm][n] +
                         4.0 * (at(C.g, k, mm) * at(C.g, l, n) -
                                at(C.g, k, n) * at(C.g, l, mm));
            worst = std::max(worst, std::abs(lhs - rhs));
            scale = std::max(scale, std::abs(rhs));
          }
    rep.absorb("contraction_psipsi_2x", worst / scale, 1e-10);
  }
}

// eta1_a^{jk} eta2^{abc} psi_{jkbc}  (the quadratic psi term of lem:norm_j)
double psiQuadTerm(const Contractions& C, const Form& e1, const Form& e2) {
  double f1[7][7][7], f2[7][7][7], r1[7][7][7], r2[7][7][7];
  fill3(e1, f1);
  fill3(e2, f2);
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b)
      for (int c = 0; c < 7; ++c) {
        double s1 = 0.0, s2 = 0.0;
        for (int x = 0; x < 7; ++x) {
          double gax = at(C.gi, a, x);
          if (gax == 0.0) continue;
          for (int y = 0; y < 7; ++y) {
            double gby = at(C.gi, b, y);
            if (gby == 0.0) continue;
            for (int z = 0; z < 7; ++z) {
              double w = gax * gby * at(C.gi, c, z);
              s1 += w * f1[x][y][z];
              s2 += w * f2[x][y][z];
            }
          }
        }
        r1[a][b][c] = s1;  // fully raised
        r2[a][b][c] = s2;
      }
  double sum = 0.0;
  for (int a = 0; a < 7; ++a)
    for (int j = 0; j < 7; ++j)
      for (int k = 0; k < 7; ++k) {
        double e1ajk = 0.0;  // first index lowered again
        for (int x = 0; x < 7; ++x) e1ajk += at(C.g, a, x) * r1[x][j][k];
        if (e1ajk == 0.0) continue;
        double inner = 0.0;
        for (int b = 0; b < 7; ++b)
          for (int c = 0; c < 7; ++c) inner += r2[a][b][c] * C.psi[j][k][b][c];
        sum += e1ajk * inner;
      }
  return sum;
}

// phi_{ajk} eta1^{ijk} phi_{ibc} eta2^{abc}
double phiQuadTerm(const Contractions& C, const Form& e1, const Form& e2) {
  double f1[7][7][7], f2[7][7][7], r1[7][7][7], r2[7][7][7];
  fill3(e1, f1);
  fill3(e2, f2);
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b)
      for (int c = 0; c < 7; ++c) {
        double s1 = 0.0, s2 = 0.0;
        for (int x = 0; x < 7; ++x) {
          double gax = at(C.gi, a, x);
          if (gax == 0.0) continue;
          for (int y = 0; y < 7; ++y) {
            double gby = at(C.gi, b, y);
            if (gby == 0.0) continue;
            for (int z = 0; z < 7; ++z) {
              double w = gax * gby * at(C.gi, c, z);
              s1 += w * f1[x][y][z];
              s2 += w * f2[x][y][z];
            }
          }
        }
        r1[a][b][c] = s1;
        r2[a][b][c] = s2;
      }
  double m1[7][7], m2[7][7];
  for (int a = 0; a < 7; ++a)
    for (int i = 0; i < 7; ++i) {
      double s1 = 0.0, s2 = 0.0;
      for (int j = 0; j < 7; ++j)
        for (int k = 0; k < 7; ++k) {
          s1 += C.phi[a][j][k] * r1[i][j][k];
          s2 += C.phi[a][j][k] * r2[i][j][k];
        }
      m1[a][i] = s1;
      m2[a][i] = s2;
    }
  double sum = 0.0;
  for (int a = 0; a < 7; ++a)
    for (int i = 0; i < 7; ++i) sum += m1[a][i] * m2[i][a];
  return sum;
}

}  // namespace

Report identitySuite(const G2Frame& fr, int trials, unsigned long long seed) {
  Report rep;
  const Metric& m = fr.metric;
  Contractions C(fr);

  contractionChecks(C, rep);

  rep.absorb("i_phi_of_g_is_3phi",
             relFormDiff(opI(fr.metric.g, fr.phi, fr), fr.phi * 3.0, m), 1e-10);
  rep.absorb("j_phi_phi_is_6g",
             relSymDiff(opJ(fr.phi, fr.phi, fr), fr.metric.g * 6.0, m), 1e-10);
  rep.absorb("phi_norm_7", relDiff(formInner(fr.phi, fr.phi, m), 7.0), 1e-10);
  rep.absorb("psi_norm_7", relDiff(formInner(fr.psi, fr.psi, m), 7.0), 1e-10);
  rep.absorb("psi_is_star_phi",
             relFormDiff(fr.psi, hodgeStar(fr.phi, m), m), 1e-10);

  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::forTrial(seed, t);
    SymTensor2 h1 = randomSym(rng), h2 = randomSym(rng);
    Form eta = randomForm(3, rng), eta2 = randomForm(3, rng);
    Form beta = randomForm(2, rng), beta2 = randomForm(2, rng);

    // norm of i: g(i h1, i h2) = 4 g(h1,h2) + tr(h1) tr(h2)
    {
      double lhs = formInner(opI(h1, fr.phi, fr), opI(h2, fr.phi, fr), m);
      double rhs = 4.0 * tensorInner(h1, h2, m) + traceG(h1, m) * traceG(h2, m);
      rep.absorb("norm_i", relDiff(lhs, rhs), 1e-9);
    }

    rep.absorb("adjoint_i_p3",
               relDiff(formInner(opI(h1, eta, fr), eta2, m),
                       formInner(opI(h1, eta2, fr), eta, m)),
               1e-9);
    rep.absorb("adjoint_i_p2",
               relDiff(formInner(opI(h1, beta, fr), beta2, m),
                       formInner(opI(h1, beta2, fr), beta, m)),
               1e-9);

    // trace of j, symmetry of j, i_omega g = p omega
    {
      SymTensor2 j3 = opJ(eta, eta2, fr);
      rep.absorb("trace_j_p3",
                 relDiff(traceG(j3, m), 6.0 * formInner(eta, eta2, m)), 1e-9);
      rep.absorb("sym_j", relSymDiff(j3, opJ(eta2, eta, fr), m), 1e-12);
      SymTensor2 j2 = opJ(beta, beta2, fr);
      rep.absorb("trace_j_p2",
                 relDiff(traceG(j2, m), 2.0 * formInner(beta, beta2, m)), 1e-9);
    }
    rep.absorb("i_g_p3", relFormDiff(opI(m.g, eta, fr), eta * 3.0, m), 1e-10);
    rep.absorb("i_g_p2", relFormDiff(opI(m.g, beta, fr), beta * 2.0, m), 1e-10);

    // exchange lemma for (p,q) in {2,3}^2
    {
      Form b3 = randomForm(2, rng), b4 = randomForm(2, rng);
      struct Case {
        const Form *w1, *w2, *n1, *n2;
        double pf, qf;
        const char* name;
        const char* nameR;
      };
      Case cases[] = {
          {&eta, &eta2, &eta, &eta2, 2.0, 2.0, "exchange_j_p3q3",
           "exchange_j_p3q3_r"},
          {&beta, &beta2, &eta, &eta2, 1.0, 2.0, "exchange_j_p2q3",
           "exchange_j_p2q3_r"},
          {&eta, &eta2, &b3, &b4, 2.0, 1.0, "exchange_j_p3q2",
           "exchange_j_p3q2_r"},
          {&beta, &beta2, &b3, &b4, 1.0, 1.0, "exchange_j_p2q2",
           "exchange_j_p2q2_r"},
      };
      for (const auto& c : cases) {
        SymTensor2 jn = opJ(*c.n1, *c.n2, fr);
        SymTensor2 jw = opJ(*c.w1, *c.w2, fr);
        double lhs = formInner(opI(jn, *c.w1, fr), *c.w2, m);
        double mid = (2.0 / c.pf) * tensorInner(jn, jw, m);
        double rhs = (c.qf / c.pf) * formInner(*c.n1, opI(jw, *c.n2, fr), m);
        rep.absorb(c.name, relDiff(lhs, mid), 1e-9);
        rep.absorb(c.nameR, relDiff(lhs, rhs), 1e-9);
      }
    }

    // projections of 3-forms
    {
      Decomp3 d = project3(eta, fr);
      double etaScale = std::max(1.0, formNorm(eta, m));
      double etaSq = std::max(1.0, formInner(eta, eta, m));
      rep.absorb("proj3_reconstruct", relFormDiff(d.p1 + d.p7 + d.p27, eta, m),
                 1e-10);
      rep.absorb("proj3_f1_consistent",
                 relFormDiff(hodgeStar(wedge(d.f1, fr.phi), m), d.p7, m,
                             etaScale),
                 1e-9);
      rep.absorb("proj3_orth_1_7",
                 std::abs(formInner(d.p1, d.p7, m)) / etaSq, 1e-10);
      rep.absorb("proj3_orth_1_27",
                 std::abs(formInner(d.p1, d.p27, m)) / etaSq, 1e-10);
      rep.absorb("proj3_orth_7_27",
                 std::abs(formInner(d.p7, d.p27, m)) / etaSq, 1e-10);
      rep.absorb("proj3_p7_eigen",
                 relFormDiff(hodgeStar(wedge(fr.phi,
                                             hodgeStar(wedge(fr.phi, d.p7), m)),
                                       m),
                             d.p7 * -4.0, m, etaScale),
                 1e-9);
      rep.absorb("proj3_p27_wedge_phi",
                 formNorm(hodgeStar(wedge(d.p27, fr.phi), m), m) / etaScale,
                 1e-9);
      rep.absorb("proj3_p27_wedge_psi",
                 formNorm(hodgeStar(wedge(d.p27, fr.psi), m), m) / etaScale,
                 1e-9);
      rep.absorb("norm_pi1",
                 relDiff(formInner(d.p1, d.p1, m),
                         formInner(eta, fr.phi, m) * formInner(eta, fr.phi, m) /
                             7.0),
                 1e-9);
      rep.absorb("i_j_combo",
                 relFormDiff(opI(opJ(fr.phi, eta, fr), fr.phi, fr),
                             d.p1 * 18.0 + d.p27 * 4.0, m, etaScale),
                 1e-9);
      SymTensor2 j7 = opJ(fr.phi, d.p7, fr);
      rep.absorb("j_on_pi7_zero",
                 std::sqrt(std::abs(tensorInner(j7, j7, m))) / etaScale, 1e-9);
      SymTensor2 j27 = opJ(fr.phi, d.p27, fr);
      rep.absorb("j_on_pi27_traceless", std::abs(traceG(j27, m)) / etaScale,
                 1e-9);
      rep.absorb("ij_on_27",
                 relFormDiff(opI(opJ(fr.phi, d.p27, fr), fr.phi, fr),
                             d.p27 * 4.0, m, etaScale),
                 1e-9);

      // norms of pi7 via the quadratic psi/phi terms
      double termA = psiQuadTerm(C, eta, eta);
      double termB = phiQuadTerm(C, eta, eta);
      double rhs7 = 0.25 * formInner(eta, eta, m) +
                    3.5 * formInner(d.p1, d.p1, m) - (termA + termB) / 16.0;
      rep.absorb("norm_pi7", relDiff(formInner(d.p7, d.p7, m), rhs7), 1e-9);

      // norm of j
      double jn = tensorInner(opJ(fr.phi, eta, fr), opJ(fr.phi, eta2, fr), m);
      double rhsj = 3.0 * formInner(eta, eta2, m) +
                    0.25 * psiQuadTerm(C, eta, eta2) +
                    0.25 * phiQuadTerm(C, eta, eta2);
      rep.absorb("norm_j", relDiff(jn, rhsj), 1e-9);
    }

    // j(i(h0)) = 4 h0 for traceless h0, and i(h0) lies in Omega^3_27
    {
      SymTensor2 h0 = h1 - m.g * (traceG(h1, m) / 7.0);
      Form ih = opI(h0, fr.phi, fr);
      rep.absorb("ji_on_traceless",
                 relSymDiff(opJ(fr.phi, ih, fr), h0 * 4.0, m), 1e-9);
      Decomp3 d = project3(ih, fr);
      double sc = std::max(1.0, formNorm(ih, m));
      rep.absorb("i_traceless_in_27",
                 (formNorm(d.p1, m) + formNorm(d.p7, m)) / sc, 1e-9);
    }

    // projections of 2-forms
    {
      Decomp2 d = project2(beta, fr);
      double sc = std::max(1.0, formNorm(beta, m));
      rep.absorb("proj2_reconstruct", relFormDiff(d.p7 + d.p14, beta, m),
                 1e-10);
      rep.absorb("proj2_p7_eigen",
                 relFormDiff(hodgeStar(wedge(d.p7, fr.phi), m), d.p7 * 2.0, m,
                             sc),
                 1e-9);
      rep.absorb("proj2_p14_eigen",
                 relFormDiff(hodgeStar(wedge(d.p14, fr.phi), m),
                             d.p14 * (-1.0), m, sc),
                 1e-9);
      rep.absorb("proj2_p14_psi",
                 formNorm(hodgeStar(wedge(d.p14, fr.psi), m), m) / sc, 1e-9);
      rep.absorb("proj2_orth",
                 std::abs(formInner(d.p7, d.p14, m)) / (sc * sc), 1e-10);
      std::array<double, 7> u{};
      for (auto& x : u) x = rng.normal();
      Form uphi = interior(u, fr.phi);
      Decomp2 du = project2(uphi, fr);
      rep.absorb("u_interior_phi_in_7",
                 formNorm(du.p14, m) / std::max(1.0, formNorm(uphi, m)), 1e-9);
    }

    // local expression of j vs the wedge definition (p = 3)
    {
      SymTensor2 jw;
      std::array<Form, 7> contr;
      for (int i = 0; i < 7; ++i) {
        std::array<double, 7> ei{};
        ei[i] = 1.0;
        contr[i] = interior(ei, fr.phi);
      }
      for (int i = 0; i < 7; ++i)
        for (int j = i; j < 7; ++j) {
          Form top = wedge(wedge(contr[i], contr[j]), eta);
          jw.set(i, j, hodgeStar(top, m)[0]);
        }
      rep.absorb("j_wedge_formula", relSymDiff(jw, opJ(fr.phi, eta, fr), m),
                 1e-9);
    }
  }

  return rep;
}

}  // namespace g2lab

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>

#include "g2lab/errors.hpp"
#include "g2lab/forms.hpp"
#include "g2lab/g2frame.hpp"
#include "g2lab/rng.hpp"

using namespace g2lab;

namespace {

Form basis(std::initializer_list<int> oneBased) {
  std::vector<int> idx;
  for (int i : oneBased) idx.push_back(i - 1);
  return Form::basis({idx.data(), idx.size()});
}

double fnorm(const Form& a, const Metric& m) {
  return std::sqrt(std::max(0.0, formInner(a, a, m)));
}

Mat7 randomGL(Rng& rng, double spread) {
  Mat7 A{};
  for (int i = 0; i < 7; ++i) at(A, i, i) = 1.0;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) at(A, i, j) += spread * rng.uniform(-0.5, 0.5);
  return A;
}

Form pullback3(const Form& f, const Mat7& A) {
  std::vector<double> l1(49), l2(441), l3(1225);
  compound7(A, 1, nullptr, l1.data());
  compound7(A, 2, l1.data(), l2.data());
  compound7(A, 3, l2.data(), l3.data());
  Form out(3);
  for (int i = 0; i < 35; ++i) {
    double sum = 0.0;
    for (int j = 0; j < 35; ++j) sum += l3[j * 35 + i] * f[j];
    out[i] = sum;
  }
  return out;
}

}  // namespace

TEST_CASE("frameFromPhi on the flat structure") {
  G2Frame fr = frameFromPhi(phi0());
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      CHECK(fr.metric.g(i, j) == doctest::Approx(i == j ? 1.0 : 0.0));
  CHECK(fr.metric.sqrtDet == doctest::Approx(1.0));
  CHECK(formInner(fr.phi, fr.phi, fr.metric) == doctest::Approx(7.0));
  Form dpsi = fr.psi - psi0();
  for (int i = 0; i < dpsi.size(); ++i) CHECK(std::abs(dpsi[i]) < 1e-12);
}

TEST_CASE("frameFromPhi scaling law") {
  double lam = 1.37;
  Form phiScaled = phi0() * (lam * lam * lam);
  G2Frame fr = frameFromPhi(phiScaled);
  for (int i = 0; i < 7; ++i)
    CHECK(fr.metric.g(i, i) == doctest::Approx(lam * lam).epsilon(1e-12));
  CHECK(fr.metric.sqrtDet == doctest::Approx(std::pow(lam, 7.0)).epsilon(1e-12));
}

TEST_CASE("frameFromPhi GL-equivariance: pullback gives A^T g A") {
  Rng rng(101);
  for (int t = 0; t < 25; ++t) {
    Mat7 A = randomGL(rng, 0.3);
    Form phi = pullback3(phi0(), A);
    G2Frame fr = frameFromPhi(phi);
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) {
        double expect = 0.0;
        for (int k = 0; k < 7; ++k) expect += at(A, k, i) * at(A, k, j);
        CHECK(fr.metric.g(i, j) == doctest::Approx(expect).epsilon(1e-8));
      }
  }
}

TEST_CASE("frameFromPhi rejects non-positive forms") {
  CHECK_THROWS_AS(frameFromPhi(phi0() * -1.0), NonPositiveForm);
  CHECK_THROWS_AS(frameFromPhi(basis({1, 2, 3})), NonPositiveForm);
}

TEST_CASE("project2: u interior phi has no 14-part, projections idempotent") {
  G2Frame fr = randomFrame(7);
  Rng rng(23);
  std::array<double, 7> u{};
  for (auto& x : u) x = rng.normal();
  Form beta = interior(u, fr.phi);
  Decomp2 d = project2(beta, fr);
  CHECK(fnorm(d.p14, fr.metric) < 1e-9 * std::max(1.0, fnorm(beta, fr.metric)));

  Form rand2(2);
  for (int i = 0; i < 21; ++i) rand2[i] = rng.normal();
  Decomp2 dr = project2(rand2, fr);
  Form sum = dr.p7 + dr.p14 - rand2;
  CHECK(fnorm(sum, fr.metric) < 1e-12);
  // idempotent + constructed 14-form has no 7-part
  Decomp2 d14 = project2(dr.p14, fr);
  CHECK(fnorm(d14.p7, fr.metric) < 1e-10);
  Decomp2 d7 = project2(dr.p7, fr);
  CHECK(fnorm(d7.p14, fr.metric) < 1e-10);
}

TEST_CASE("project3 examples") {
  G2Frame fr = randomFrame(31);
  // eta = phi -> (phi, 0, 0)
  Decomp3 d = project3(fr.phi, fr);
  CHECK(fnorm(d.p1 - fr.phi, fr.metric) < 1e-10);
  CHECK(fnorm(d.p7, fr.metric) < 1e-10);
  CHECK(fnorm(d.p27, fr.metric) < 1e-10);

  // eta = *(alpha ^ phi) -> pure 7-part
  Rng rng(5);
  Form alpha(1);
  for (int i = 0; i < 7; ++i) alpha[i] = rng.normal();
  Form eta = hodgeStar(wedge(alpha, fr.phi), fr.metric);
  Decomp3 d7 = project3(eta, fr);
  CHECK(fnorm(d7.p7 - eta, fr.metric) < 1e-9 * fnorm(eta, fr.metric));

  // eta = i(h0) -> pure 27-part
  SymTensor2 h;
  for (int i = 0; i < 7; ++i)
    for (int j = i; j < 7; ++j) h.set(i, j, rng.normal());
  Mat7 gi = fr.metric.gInv.full();
  double tr = 0.0;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) tr += at(gi, i, j) * h(i, j);
  SymTensor2 h0 = h - fr.metric.g * (tr / 7.0);
  Form ih = opI(h0, fr.phi, fr);
  Decomp3 d27 = project3(ih, fr);
  CHECK(fnorm(d27.p1, fr.metric) < 1e-9 * fnorm(ih, fr.metric));
  CHECK(fnorm(d27.p7, fr.metric) < 1e-9 * fnorm(ih, fr.metric));
}

TEST_CASE("opI examples") {
  G2Frame fr = randomFrame(47);
  CHECK(fnorm(opI(fr.metric.g, fr.phi, fr) - fr.phi * 3.0, fr.metric) < 1e-10);
  Rng rng(9);
  for (int p = 1; p <= 4; ++p) {
    Form w(p == 3 ? 3 : p);
    for (int i = 0; i < w.size(); ++i) w[i] = rng.normal();
    Form r = opI(fr.metric.g, w, fr) - w * static_cast<double>(p);
    CHECK(fnorm(r, fr.metric) < 1e-10 * std::max(1.0, fnorm(w, fr.metric)));
  }
  CHECK_THROWS_AS(opI(fr.metric.g, Form(0), fr), DegreeUnderflow);
  // pointwise scaling i_{f w} h = f i_w h is linearity in the form slot
  Form w(3);
  for (int i = 0; i < 35; ++i) w[i] = rng.normal();
  SymTensor2 h;
  for (int i = 0; i < 7; ++i)
    for (int j = i; j < 7; ++j) h.set(i, j, rng.normal());
  Form a = opI(h, w * 2.5, fr);
  Form b = opI(h, w, fr) * 2.5;
  CHECK(fnorm(a - b, fr.metric) < 1e-12);
}

TEST_CASE("opJ examples") {
  G2Frame fr = randomFrame(53);
  SymTensor2 j = opJ(fr.phi, fr.phi, fr);
  SymTensor2 d = j - fr.metric.g * 6.0;
  CHECK(std::sqrt(std::abs(tensorInner(d, d, fr.metric))) < 1e-10);

  // j(phi, *(f1 ^ phi)) = 0
  Rng rng(3);
  Form f1(1);
  for (int i = 0; i < 7; ++i) f1[i] = rng.normal();
  Form eta7 = hodgeStar(wedge(f1, fr.phi), fr.metric);
  SymTensor2 j7 = opJ(fr.phi, eta7, fr);
  CHECK(std::sqrt(std::abs(tensorInner(j7, j7, fr.metric))) < 1e-9);

  CHECK_THROWS_AS(opJ(fr.phi, Form(2), fr), DegreeMismatch);
}

TEST_CASE("identitySuite on the flat frame") {
  G2Frame fr = frameFromPhi(phi0());
  Report rep = identitySuite(fr, 1, 12345);
  INFO(rep.text());
  CHECK(rep.allPass());
  CHECK(rep.worstResidual() <= 1e-10);
}

TEST_CASE("identitySuite on random frames") {
  for (unsigned long long seed : {1ULL, 2ULL, 3ULL}) {
    G2Frame fr = randomFrame(seed);
    Report rep = identitySuite(fr, 4, seed * 977);
    INFO("seed ", seed, "\n", rep.text());
    CHECK(rep.allPass());
    CHECK(rep.worstResidual() <= 1e-9);
  }
}

TEST_CASE("identitySuite negative control: corrupted psi fails") {
  G2Frame fr = frameFromPhi(phi0());
  fr.psi[0] += 0.05;
  Report rep = identitySuite(fr, 1, 7);
  CHECK_FALSE(rep.allPass());
}

TEST_CASE("tauSpectrum on the normal-form element") {
  G2Frame fr = frameFromPhi(phi0());
  // lambda1 e^23 + lambda2 e^45 - (l1+l2) e^67 with (1, 0)
  Form tau = basis({2, 3}) - basis({6, 7});
  TauSpectrum sp = tauSpectrum(tau, fr);
  CHECK(sp.normSq == doctest::Approx(2.0));
  // eigenvalues of tau_i^l tau_lj: {-1,-1,-1,-1,0,0,0}
  CHECK(sp.eigenvalues[0] == doctest::Approx(-1.0));
  CHECK(sp.eigenvalues[1] == doctest::Approx(-1.0));
  CHECK(sp.eigenvalues[2] == doctest::Approx(-1.0));
  CHECK(sp.eigenvalues[3] == doctest::Approx(-1.0));
  CHECK(sp.eigenvalues[4] == doctest::Approx(0.0));
  CHECK(sp.eigenvalues[6] == doctest::Approx(0.0));
  // quartic contraction equals |tau|^4; the tensor inner product is half
  CHECK(sp.quartic == doctest::Approx(sp.normSq * sp.normSq));
  CHECK(sp.tensorInnerSq == doctest::Approx(0.5 * sp.normSq * sp.normSq));
}

TEST_CASE("tauSpectrum bounds on random 14-forms") {
  Rng rng(1234);
  for (int t = 0; t < 200; ++t) {
    G2Frame fr = randomFrame(9000 + t);
    Form beta(2);
    for (int i = 0; i < 21; ++i) beta[i] = rng.normal();
    Form tau = project2(beta, fr).p14;
    TauSpectrum sp = tauSpectrum(tau, fr);
    // negative semidefinite with a zero eigenvalue
    CHECK(sp.eigenvalues[6] <= 1e-9);
    CHECK(sp.eigenvalues[6] >= -1e-9 * std::max(1.0, sp.normSq));
    // lambda_min >= -(2/3)|tau|^2
    CHECK(sp.eigenvalues[0] >= -(2.0 / 3.0) * sp.normSq - 1e-9);
    // quartic identity (|tau|^4 with these conventions)
    CHECK(sp.quartic ==
          doctest::Approx(sp.normSq * sp.normSq).epsilon(1e-9));
  }
}

TEST_CASE("tauSpectrum zero torsion") {
  G2Frame fr = frameFromPhi(phi0());
  TauSpectrum sp = tauSpectrum(Form(2), fr);
  for (double ev : sp.eigenvalues) CHECK(std::abs(ev) < 1e-14);
  CHECK(sp.normSq == 0.0);
}

TEST_CASE("tauSpectrum rejects forms outside Omega^2_14") {
  G2Frame fr = frameFromPhi(phi0());
  std::array<double, 7> u{1, 0, 0, 0, 0, 0, 0};
  Form beta = interior(u, fr.phi);  // pure 7-part
  CHECK_THROWS_AS(tauSpectrum(beta, fr), NotIn14);
}

TEST_CASE("isometricFamily preserves the induced metric") {
  G2Frame fr = randomFrame(77);
  // (f, eta) = (1, 0)
  Form zero1(1);
  Form same = isometricFamily(fr, 1.0, zero1);
  CHECK(fnorm(same - fr.phi, fr.metric) < 1e-12);

  // (f, eta) = (0, unit 1-form)
  Rng rng(8);
  for (int t = 0; t < 10; ++t) {
    Form eta(1);
    for (int i = 0; i < 7; ++i) eta[i] = rng.normal();
    double c = rng.uniform(-1.0, 1.0);
    double norm = std::sqrt(formInner(eta, eta, fr.metric));
    double want = std::sqrt(1.0 - c * c);
    eta *= want / norm;
    Form bar = isometricFamily(fr, c, eta);
    G2Frame frBar = frameFromPhi(bar);
    double worst = 0.0;
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j)
        worst = std::max(worst,
                         std::abs(frBar.metric.g(i, j) - fr.metric.g(i, j)));
    CHECK(worst < 1e-8);
  }

  Form bad(1);
  bad[0] = 0.5;
  CHECK_THROWS_AS(isometricFamily(fr, 1.0, bad), ConstraintViolated);
}

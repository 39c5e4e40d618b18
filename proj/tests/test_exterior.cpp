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

// Brute-force oracle: expand to full antisymmetric arrays and contract.
void expand(const Form& a, std::vector<double>& out) {
  int p = a.degree();
  size_t n = 1;
  for (int i = 0; i < p; ++i) n *= 7;
  out.assign(std::max<size_t>(n, 1), 0.0);
  if (p == 0) {
    out[0] = a[0];
    return;
  }
  std::array<int, 7> idx{};
  for (size_t flat = 0; flat < n; ++flat) {
    size_t rest = flat;
    for (int i = 0; i < p; ++i) {
      idx[i] = static_cast<int>(rest % 7);
      rest /= 7;
    }
    out[flat] = a.entry({idx.data(), static_cast<size_t>(p)});
  }
}

double bruteInner(const Form& a, const Form& b, const Metric& m) {
  int p = a.degree();
  if (p == 0) return a[0] * b[0];
  std::vector<double> fa, fb;
  expand(a, fa);
  expand(b, fb);
  Mat7 gi = m.gInv.full();
  size_t n = fa.size();
  double fact = 1.0;
  for (int i = 2; i <= p; ++i) fact *= i;
  double sum = 0.0;
  std::array<int, 7> ia{}, ib{};
  for (size_t x = 0; x < n; ++x) {
    if (fa[x] == 0.0) continue;
    size_t rx = x;
    for (int i = 0; i < p; ++i) {
      ia[i] = static_cast<int>(rx % 7);
      rx /= 7;
    }
    for (size_t y = 0; y < n; ++y) {
      if (fb[y] == 0.0) continue;
      size_t ry = y;
      double w = 1.0;
      for (int i = 0; i < p; ++i) {
        ib[i] = static_cast<int>(ry % 7);
        ry /= 7;
        w *= at(gi, ia[i], ib[i]);
      }
      sum += fa[x] * fb[y] * w;
    }
  }
  return sum / fact;
}

// Levi-Civita-symbol Hodge star oracle.
Form bruteStar(const Form& a, const Metric& m) {
  int p = a.degree();
  Form out(7 - p);
  std::vector<double> fa;
  expand(a, fa);
  // raise all indices
  Mat7 gi = m.gInv.full();
  std::vector<double> raised(fa.size(), 0.0);
  std::array<int, 7> ia{}, ib{};
  size_t n = fa.size();
  if (p == 0) {
    out[0] = m.sqrtDet * a[0];
    return out;
  }
  for (size_t x = 0; x < n; ++x) {
    size_t rx = x;
    for (int i = 0; i < p; ++i) {
      ia[i] = static_cast<int>(rx % 7);
      rx /= 7;
    }
    double sum = 0.0;
    for (size_t y = 0; y < n; ++y) {
      if (fa[y] == 0.0) continue;
      size_t ry = y;
      double w = 1.0;
      for (int i = 0; i < p; ++i) {
        ib[i] = static_cast<int>(ry % 7);
        ry /= 7;
        w *= at(gi, ia[i], ib[i]);
      }
      sum += fa[y] * w;
    }
    raised[x] = sum;
  }
  double fact = 1.0;
  for (int i = 2; i <= p; ++i) fact *= i;
  const auto& T = MultiIndexTable::get();
  for (int slot = 0; slot < out.size(); ++slot) {
    auto J = T.tuple(7 - p, slot);
    double sum = 0.0;
    // sum over ordered p-tuples I: raised^I eps_{I J}
    for (size_t x = 0; x < n; ++x) {
      if (raised[x] == 0.0) continue;
      size_t rx = x;
      std::array<int, 7> idx{};
      for (int i = 0; i < p; ++i) {
        idx[i] = static_cast<int>(rx % 7);
        rx /= 7;
      }
      for (int i = 0; i < 7 - p; ++i) idx[p + i] = J[i];
      int sgn = permutationSign({idx.data(), 7});
      if (sgn) sum += raised[x] * sgn;
    }
    out[slot] = m.sqrtDet * sum / fact;
  }
  return out;
}

Form randomFormD(int degree, Rng& rng) {
  Form f(degree);
  for (int i = 0; i < f.size(); ++i) f[i] = rng.normal();
  return f;
}

Metric randomMetric(Rng& rng) {
  // SPD: A^T A + small identity
  Mat7 a{};
  for (int i = 0; i < 49; ++i) a[i] = 0.4 * rng.normal();
  SymTensor2 g;
  for (int i = 0; i < 7; ++i)
    for (int j = i; j < 7; ++j) {
      double sum = (i == j) ? 1.0 : 0.0;
      for (int k = 0; k < 7; ++k) sum += at(a, k, i) * at(a, k, j);
      g.set(i, j, sum);
    }
  return Metric::fromTensor(g);
}

Form basis(std::initializer_list<int> oneBased) {
  std::vector<int> idx;
  for (int i : oneBased) idx.push_back(i - 1);
  return Form::basis({idx.data(), idx.size()});
}

}  // namespace

TEST_CASE("wedge basis cases") {
  Form e1 = basis({1});
  Form e2 = basis({2});
  Form e12 = wedge(e1, e2);
  CHECK(e12.entry(std::array<int, 2>{0, 1}) == doctest::Approx(1.0));
  Form e21 = wedge(e2, e1);
  CHECK(e21.entry(std::array<int, 2>{0, 1}) == doctest::Approx(-1.0));

  // phi0 ^ psi0 = 7 e^{1..7}
  Form top = wedge(phi0(), psi0());
  CHECK(top[0] == doctest::Approx(7.0));

  CHECK_THROWS_AS(wedge(psi0(), wedge(phi0(), phi0())), DegreeOverflow);
}

TEST_CASE("wedge graded anticommutativity and associativity") {
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    int p = 1 + static_cast<int>(rng.bits() % 3);
    int q = 1 + static_cast<int>(rng.bits() % 3);
    int r = 1 + static_cast<int>(rng.bits() % (7 - p - q >= 1 ? 7 - p - q : 1));
    if (p + q + r > 7) continue;
    Form a = randomFormD(p, rng), b = randomFormD(q, rng),
         c = randomFormD(r, rng);
    Form ab = wedge(a, b), ba = wedge(b, a);
    double sign = ((p * q) % 2 == 0) ? 1.0 : -1.0;
    Form diff = ab - ba * sign;
    for (int i = 0; i < diff.size(); ++i) CHECK(std::abs(diff[i]) < 1e-13);
    Form left = wedge(wedge(a, b), c);
    Form right = wedge(a, wedge(b, c));
    Form d2 = left - right;
    for (int i = 0; i < d2.size(); ++i) CHECK(std::abs(d2[i]) < 1e-13);
  }
}

TEST_CASE("interior product") {
  std::array<double, 7> e1{1, 0, 0, 0, 0, 0, 0};
  Form e12 = basis({1, 2});
  Form r = interior(e1, e12);
  CHECK(r[1] == doctest::Approx(1.0));  // slot of e^2

  Form ephi = interior(e1, phi0());
  // e1 ⌟ phi0 = e^23 + e^45 + e^67
  Form expect = basis({2, 3}) + basis({4, 5}) + basis({6, 7});
  Form diff = ephi - expect;
  for (int i = 0; i < diff.size(); ++i) CHECK(std::abs(diff[i]) < 1e-15);

  std::array<double, 7> e3{0, 0, 1, 0, 0, 0, 0};
  Form z = interior(e3, e12);
  for (int i = 0; i < z.size(); ++i) CHECK(z[i] == 0.0);

  CHECK_THROWS_AS(interior(e1, Form(0)), DegreeUnderflow);

  // u ⌟ (u ⌟ a) = 0
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    std::array<double, 7> u{};
    for (auto& x : u) x = rng.normal();
    Form a = randomFormD(3, rng);
    Form uu = interior(u, interior(u, a));
    for (int i = 0; i < uu.size(); ++i) CHECK(std::abs(uu[i]) < 1e-13);
  }
}

TEST_CASE("formInner against brute-force oracle") {
  Metric id = Metric::identity();
  CHECK(formInner(phi0(), phi0(), id) == doctest::Approx(7.0));
  Form e12 = basis({1, 2});
  CHECK(formInner(e12, e12, id) == doctest::Approx(1.0));

  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    Metric m = randomMetric(rng);
    for (int p = 1; p <= 4; ++p) {
      Form a = randomFormD(p, rng), b = randomFormD(p, rng);
      double fast = formInner(a, b, m);
      double slow = bruteInner(a, b, m);
      CHECK(fast == doctest::Approx(slow).epsilon(1e-11));
    }
  }
  CHECK_THROWS_AS(formInner(phi0(), psi0(), id), DegreeMismatch);
}

TEST_CASE("tensorInner basics and oracle") {
  Metric id = Metric::identity();
  CHECK(tensorInner(SymTensor2::identity(), SymTensor2::identity(), id) ==
        doctest::Approx(3.5));
  SymTensor2 zero;
  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    Metric m = randomMetric(rng);
    SymTensor2 h1, h2;
    for (int i = 0; i < 7; ++i)
      for (int j = i; j < 7; ++j) {
        h1.set(i, j, rng.normal());
        h2.set(i, j, rng.normal());
      }
    CHECK(tensorInner(h1, zero, m) == doctest::Approx(0.0));
    // brute double contraction
    Mat7 gi = m.gInv.full();
    double sum = 0.0;
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j)
        for (int k = 0; k < 7; ++k)
          for (int l = 0; l < 7; ++l)
            sum += h1(i, j) * h2(k, l) * at(gi, i, k) * at(gi, j, l);
    CHECK(tensorInner(h1, h2, m) == doctest::Approx(0.5 * sum).epsilon(1e-12));
  }
}

TEST_CASE("hodge star basics") {
  Metric id = Metric::identity();
  // *1 = vol
  Form one(0);
  one[0] = 1.0;
  Form volId = hodgeStar(one, id);
  CHECK(volId[0] == doctest::Approx(1.0));

  // *phi0 = psi0 golden coefficients
  Form psi = hodgeStar(phi0(), id);
  Form expect = basis({4, 5, 6, 7}) + basis({2, 3, 6, 7}) + basis({2, 3, 4, 5}) +
                basis({1, 3, 5, 7}) - basis({1, 3, 4, 6}) - basis({1, 2, 5, 6}) -
                basis({1, 2, 4, 7});
  Form diff = psi - expect;
  for (int i = 0; i < diff.size(); ++i) CHECK(std::abs(diff[i]) < 1e-15);

  SymTensor2 d4 = SymTensor2::identity();
  d4.set(0, 0, 4.0);
  Metric m4 = Metric::fromTensor(d4);
  Form vol4 = volumeForm(m4);
  CHECK(vol4[0] == doctest::Approx(2.0));
}

TEST_CASE("hodge star against oracle, star-star, isometry, defining identity") {
  Rng rng(13);
  for (int t = 0; t < 12; ++t) {
    Metric m = randomMetric(rng);
    for (int p = 0; p <= 4; ++p) {
      Form a = randomFormD(p, rng);
      Form sa = hodgeStar(a, m);
      Form oracle = bruteStar(a, m);
      for (int i = 0; i < sa.size(); ++i)
        CHECK(sa[i] == doctest::Approx(oracle[i]).epsilon(1e-11));
      // ** = identity
      Form ssa = hodgeStar(sa, m);
      for (int i = 0; i < a.size(); ++i)
        CHECK(ssa[i] == doctest::Approx(a[i]).epsilon(1e-11));
      // isometry
      Form b = randomFormD(p, rng);
      CHECK(formInner(hodgeStar(a, m), hodgeStar(b, m), m) ==
            doctest::Approx(formInner(a, b, m)).epsilon(1e-11));
      // defining identity b ∧ *a = g(b,a) vol
      if (p >= 1) {
        Form top = wedge(b, sa);
        CHECK(top[0] ==
              doctest::Approx(formInner(b, a, m) * m.sqrtDet).epsilon(1e-11));
      }
    }
  }
}

TEST_CASE("interior is the inner-product adjoint of wedging with the dual") {
  Rng rng(17);
  for (int t = 0; t < 20; ++t) {
    Metric m = randomMetric(rng);
    std::array<double, 7> u{};
    for (auto& x : u) x = rng.normal();
    // u-flat as a 1-form
    Form uflat(1);
    for (int i = 0; i < 7; ++i) {
      double sum = 0.0;
      for (int j = 0; j < 7; ++j) sum += m.g(i, j) * u[j];
      uflat[i] = sum;
    }
    for (int p = 1; p <= 3; ++p) {
      Form a = randomFormD(p, rng);
      Form b = randomFormD(p + 1, rng);
      double lhs = formInner(wedge(uflat, a), b, m);
      double rhs = formInner(a, interior(u, b), m);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
    }
  }
}

TEST_CASE("volumeForm errors") {
  SymTensor2 bad;
  for (int i = 0; i < 7; ++i) bad.set(i, i, -1.0);
  CHECK_THROWS_AS(Metric::fromTensor(bad), NonPositiveMetric);
}

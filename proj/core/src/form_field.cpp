#include "g2lab/form_field.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>

#include "g2lab/errors.hpp"
#include "g2lab/rng.hpp"

namespace g2lab {

FormField::FormField(const Grid& g, int degree)
    : grid_(g),
      degree_(degree),
      comps_(MultiIndexTable::get().count(degree)),
      data_(static_cast<size_t>(g.points()) * comps_, 0.0) {
  if (degree < 0 || degree > kDim) throw DegreeOverflow("field degree");
}

FormField& FormField::operator+=(const FormField& o) {
  if (!(o.grid_ == grid_)) throw GridMismatch("field grids differ");
  if (o.degree_ != degree_) throw DegreeMismatch("field degrees differ");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}
FormField& FormField::operator-=(const FormField& o) {
  if (!(o.grid_ == grid_)) throw GridMismatch("field grids differ");
  if (o.degree_ != degree_) throw DegreeMismatch("field degrees differ");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}
FormField& FormField::operator*=(double s) {
  for (double& x : data_) x *= s;
  return *this;
}
void FormField::axpy(double a, const FormField& x) {
  if (!(x.grid_ == grid_) || x.degree_ != degree_)
    throw GridMismatch("axpy shape mismatch");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] += a * x.data_[i];
}

double FormField::maxAbs() const {
  double m = 0.0;
  for (double x : data_) m = std::max(m, std::abs(x));
  return m;
}

double FormField::flatNorm() const {
  double s = 0.0;
  for (double x : data_) s += x * x;
  return std::sqrt(s);
}

FormField FormField::constant(const Grid& g, const Form& f) {
  FormField out(g, f.degree());
  long long P = g.points();
  for (long long p = 0; p < P; ++p)
    for (int c = 0; c < out.comps(); ++c) out.at(p)[c] = f[c];
  return out;
}

namespace {

template <typename Apply>
void forEachLine(const Grid& g, int axis, Apply&& apply) {
  long long S = g.stride(axis);
  long long P = g.points();
  int n = g.dims[axis];
  for (long long base = 0; base < P; ++base) {
    if ((base / S) % n != 0) continue;
    apply(base, S);
  }
}

}  // namespace

FormField derivAxis(const FormField& f, int axis) {
  const Grid& g = f.grid();
  FormField out(g, f.degree());
  int n = g.dims[axis];
  if (n == 1) return out;
  const AxisOps& ops = AxisOps::get(n, g.lengths[axis]);
  int C = f.comps();
  std::vector<double> in(n);
  forEachLine(g, axis, [&](long long base, long long S) {
    for (int c = 0; c < C; ++c) {
      for (int t = 0; t < n; ++t) in[t] = f.at(base + t * S)[c];
      for (int s = 0; s < n; ++s) {
        const double* row = ops.deriv.data() + static_cast<size_t>(s) * n;
        double sum = 0.0;
        for (int t = 0; t < n; ++t) sum += row[t] * in[t];
        out.at(base + s * S)[c] = sum;
      }
    }
  });
  return out;
}

FormField dSpectral(const FormField& omega) {
  int p = omega.degree();
  if (p >= kDim) throw DegreeOverflow("d of a 7-form");
  const Grid& g = omega.grid();
  const auto& T = MultiIndexTable::get();
  FormField out(g, p + 1);
  long long P = g.points();
  int C = omega.comps();
  for (int axis = 0; axis < 7; ++axis) {
    if (g.dims[axis] == 1) continue;
    FormField df = derivAxis(omega, axis);
    for (long long pt = 0; pt < P; ++pt) {
      const double* src = df.at(pt);
      double* dst = out.at(pt);
      for (int c = 0; c < C; ++c) {
        auto ins = T.insert(p, c, axis);
        if (ins.out < 0) continue;
        dst[ins.out] += ins.sign * src[c];
      }
    }
  }
  return out;
}

FormField wedgeField(const FormField& a, const FormField& b) {
  if (!(a.grid() == b.grid())) throw GridMismatch("wedgeField grids differ");
  int p = a.degree(), q = b.degree();
  if (p + q > kDim) throw DegreeOverflow("wedge degree exceeds 7");
  const auto& tab = MultiIndexTable::get().wedgeTable(p, q);
  FormField out(a.grid(), p + q);
  long long P = a.points();
  for (long long pt = 0; pt < P; ++pt) {
    const double* pa = a.at(pt);
    const double* pb = b.at(pt);
    double* po = out.at(pt);
    for (const auto& e : tab) po[e.out] += e.sign * pa[e.a] * pb[e.b];
  }
  return out;
}

FormField scaleField(const FormField& a, const std::vector<double>& s) {
  if (static_cast<long long>(s.size()) != a.points())
    throw GridMismatch("scalar field size mismatch");
  FormField out = a;
  long long P = a.points();
  int C = a.comps();
  for (long long pt = 0; pt < P; ++pt) {
    double* po = out.at(pt);
    for (int c = 0; c < C; ++c) po[c] *= s[pt];
  }
  return out;
}

double integrate(const FormField& f, const std::vector<double>& volDensity) {
  if (f.degree() != 0) throw DegreeMismatch("integrate needs a scalar field");
  if (static_cast<long long>(volDensity.size()) != f.points())
    throw GridMismatch("density size mismatch");
  long long P = f.points();
  std::vector<double> prod(P);
  for (long long p = 0; p < P; ++p) prod[p] = f.at(p)[0] * volDensity[p];
  return pairwiseSum(prod.data(), P) * f.grid().cellVolume();
}

double integrateTop(const FormField& top) {
  if (top.degree() != kDim) throw DegreeMismatch("integrateTop needs a 7-form");
  return pairwiseSum(top.raw().data(), top.points()) * top.grid().cellVolume();
}

namespace {

void applyAxisComplex(std::vector<std::complex<double>>& w, const Grid& g,
                      int axis, const std::vector<std::complex<double>>& mat) {
  int n = g.dims[axis];
  std::vector<std::complex<double>> in(n);
  forEachLine(g, axis, [&](long long base, long long S) {
    for (int t = 0; t < n; ++t) in[t] = w[base + t * S];
    for (int s = 0; s < n; ++s) {
      std::complex<double> sum{0.0, 0.0};
      const std::complex<double>* row = mat.data() + static_cast<size_t>(s) * n;
      for (int t = 0; t < n; ++t) sum += row[t] * in[t];
      w[base + s * S] = sum;
    }
  });
}

}  // namespace

FormField applyFourierMultiplier(
    const FormField& f,
    const std::function<double(const std::array<double, 7>&)>& symbol) {
  const Grid& g = f.grid();
  long long P = g.points();
  int C = f.comps();
  FormField out(g, f.degree());
  std::vector<double> sym(P);
  for (long long p = 0; p < P; ++p) {
    auto c = g.coord(p);
    std::array<double, 7> k{};
    for (int i = 0; i < 7; ++i)
      k[i] = (g.dims[i] == 1)
                 ? 0.0
                 : AxisOps::get(g.dims[i], g.lengths[i]).waveNumber[c[i]];
    sym[p] = symbol(k);
  }
  std::vector<std::complex<double>> w(P);
  for (int c = 0; c < C; ++c) {
    for (long long p = 0; p < P; ++p) w[p] = f.at(p)[c];
    for (int axis = 0; axis < 7; ++axis)
      if (g.dims[axis] > 1)
        applyAxisComplex(w, g, axis,
                         AxisOps::get(g.dims[axis], g.lengths[axis]).fwd);
    for (long long p = 0; p < P; ++p) w[p] *= sym[p];
    for (int axis = 0; axis < 7; ++axis)
      if (g.dims[axis] > 1)
        applyAxisComplex(w, g, axis,
                         AxisOps::get(g.dims[axis], g.lengths[axis]).inv);
    for (long long p = 0; p < P; ++p) out.at(p)[c] = w[p].real();
  }
  return out;
}

FormField flatStar(const FormField& f) {
  const auto& T = MultiIndexTable::get();
  int p = f.degree();
  FormField out(f.grid(), kDim - p);
  long long P = f.points();
  for (long long pt = 0; pt < P; ++pt) {
    const double* src = f.at(pt);
    double* dst = out.at(pt);
    for (int c = 0; c < f.comps(); ++c)
      dst[T.complementSlot(p, c)] = T.complementSign(p, c) * src[c];
  }
  return out;
}

FormField flatCodiff(const FormField& f) {
  int p = f.degree();
  if (p < 1) throw DegreeUnderflow("codifferential of a 0-form");
  FormField s1 = flatStar(f);
  FormField ds = dSpectral(s1);
  FormField out = flatStar(ds);
  if (p % 2 != 0) out *= -1.0;
  return out;
}

FormField flatGreen(const FormField& f) {
  return applyFourierMultiplier(f, [](const std::array<double, 7>& k) {
    double k2 = 0.0;
    for (double ki : k) k2 += ki * ki;
    return k2 > 0.0 ? 1.0 / k2 : 0.0;
  });
}

FormField flatProjectExact(const FormField& f) {
  return dSpectral(flatGreen(flatCodiff(f)));
}

FormField flatProjectCoexact(const FormField& f) {
  return flatCodiff(flatGreen(dSpectral(f)));
}

namespace {

// Half-space mode set on the active axes: |m_i| <= bandLimit, the first
// nonzero entry positive (one representative per +-k pair), m != 0.
std::vector<std::array<int, 7>> halfSpaceModes(const Grid& g, int bandLimit) {
  std::vector<std::array<int, 7>> modes;
  std::array<int, 7> m{};
  std::function<void(int)> rec = [&](int axis) {
    if (axis == 7) {
      int firstNonzero = 0;
      for (int i = 0; i < 7; ++i) {
        if (m[i] != 0) {
          firstNonzero = m[i];
          break;
        }
      }
      if (firstNonzero > 0) modes.push_back(m);
      return;
    }
    if (g.dims[axis] == 1) {
      m[axis] = 0;
      rec(axis + 1);
      return;
    }
    for (int v = -bandLimit; v <= bandLimit; ++v) {
      m[axis] = v;
      rec(axis + 1);
    }
  };
  rec(0);
  return modes;
}

void addMode(std::vector<double>& comp, const Grid& g,
             const std::array<int, 7>& mv, double a, double b) {
  const double twoPi = 6.283185307179586476925286766559;
  long long P = g.points();
  for (long long p = 0; p < P; ++p) {
    auto x = g.position(p);
    double phase = 0.0;
    for (int i = 0; i < 7; ++i)
      if (mv[i] != 0) phase += twoPi * mv[i] * x[i] / g.lengths[i];
    comp[p] += a * std::cos(phase) + b * std::sin(phase);
  }
}

void checkBandLimit(const Grid& g, int bandLimit) {
  for (int i = 0; i < 7; ++i)
    if (g.dims[i] > 1 && bandLimit > g.dims[i] / 2)
      throw BandLimitTooHigh("bandLimit exceeds N/2 on an active axis");
}

}  // namespace

TangentVector randomExact3Form(const Grid& g, unsigned long long seed,
                               int bandLimit) {
  checkBandLimit(g, bandLimit);
  Rng rng(seed);
  FormField alpha(g, 2);
  long long P = g.points();
  auto modes = halfSpaceModes(g, bandLimit);
  double scale = modes.empty() ? 1.0 : 1.0 / std::sqrt(2.0 * modes.size());
  std::vector<double> comp(P);
  for (int c = 0; c < alpha.comps(); ++c) {
    std::fill(comp.begin(), comp.end(), 0.0);
    for (const auto& mv : modes)
      addMode(comp, g, mv, rng.normal() * scale, rng.normal() * scale);
    for (long long p = 0; p < P; ++p) alpha.at(p)[c] = comp[p];
  }
  TangentVector tv;
  tv.X = dSpectral(alpha);
  tv.alpha = std::move(alpha);
  return tv;
}

std::vector<double> randomScalarField(const Grid& g, unsigned long long seed,
                                      int bandLimit) {
  checkBandLimit(g, bandLimit);
  Rng rng(seed);
  std::vector<double> out(g.points(), 0.0);
  auto modes = halfSpaceModes(g, bandLimit);
  double scale = modes.empty() ? 1.0 : 1.0 / std::sqrt(2.0 * modes.size());
  for (const auto& mv : modes)
    addMode(out, g, mv, rng.normal() * scale, rng.normal() * scale);
  return out;
}

// ---- snapshot I/O ----------------------------------------------------------

namespace {

void putU32(std::FILE* f, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v & 0xFF),
                        static_cast<unsigned char>((v >> 8) & 0xFF),
                        static_cast<unsigned char>((v >> 16) & 0xFF),
                        static_cast<unsigned char>((v >> 24) & 0xFF)};
  if (std::fwrite(b, 1, 4, f) != 4) throw IoError("write failed");
}

std::uint32_t getU32(std::FILE* f) {
  unsigned char b[4];
  if (std::fread(b, 1, 4, f) != 4) throw FormatError("truncated file");
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) |
         (static_cast<std::uint32_t>(b[3]) << 24);
}

void putF64(std::FILE* f, double v) {
  std::uint64_t u;
  std::memcpy(&u, &v, 8);
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((u >> (8 * i)) & 0xFF);
  if (std::fwrite(b, 1, 8, f) != 8) throw IoError("write failed");
}

double getF64(std::FILE* f) {
  unsigned char b[8];
  if (std::fread(b, 1, 8, f) != 8) throw FormatError("truncated file");
  std::uint64_t u = 0;
  for (int i = 0; i < 8; ++i) u |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  double v;
  std::memcpy(&v, &u, 8);
  return v;
}

}  // namespace

void saveField(const std::string& path, const FormField& f) {
  std::FILE* fp = std::fopen(path.c_str(), "wb");
  if (!fp) throw IoError("cannot open " + path + " for writing");
  try {
    if (std::fwrite("G2F1", 1, 4, fp) != 4) throw IoError("write failed");
    putU32(fp, static_cast<std::uint32_t>(f.degree()));
    for (int i = 0; i < 7; ++i)
      putU32(fp, static_cast<std::uint32_t>(f.grid().dims[i]));
    for (int i = 0; i < 7; ++i) putF64(fp, f.grid().lengths[i]);
    for (double v : f.raw()) putF64(fp, v);
  } catch (...) {
    std::fclose(fp);
    throw;
  }
  if (std::fclose(fp) != 0) throw IoError("close failed for " + path);
}

FormField loadField(const std::string& path) {
  std::FILE* fp = std::fopen(path.c_str(), "rb");
  if (!fp) throw IoError("cannot open " + path);
  try {
    char magic[4];
    if (std::fread(magic, 1, 4, fp) != 4 || std::memcmp(magic, "G2F1", 4) != 0)
      throw FormatError("bad magic in " + path);
    std::uint32_t degree = getU32(fp);
    if (degree > 7) throw FormatError("bad degree in " + path);
    Grid g;
    for (int i = 0; i < 7; ++i) {
      g.dims[i] = static_cast<int>(getU32(fp));
      if (g.dims[i] < 1) throw FormatError("bad dims in " + path);
    }
    for (int i = 0; i < 7; ++i) {
      g.lengths[i] = getF64(fp);
      if (!(g.lengths[i] > 0.0)) throw FormatError("bad lengths in " + path);
    }
    FormField f(g, static_cast<int>(degree));
    for (double& v : f.raw()) v = getF64(fp);
    // no trailing bytes allowed
    unsigned char extra;
    if (std::fread(&extra, 1, 1, fp) == 1)
      throw FormatError("trailing bytes in " + path);
    std::fclose(fp);
    return f;
  } catch (...) {
    std::fclose(fp);
    throw;
  }
}

}  // namespace g2lab

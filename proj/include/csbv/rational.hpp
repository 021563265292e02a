#pragma once

#include <gmpxx.h>
#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <stdexcept>

namespace csbv {

// Exact arbitrary-precision rational scalar. All symbolic modules use this;
// floats appear only in the numeric orbit layer.
using Rat = mpq_class;

inline std::string ratStr(const Rat& r) { return r.get_str(); }

inline Rat ratParse(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

inline Rat ratPow(Rat base, long e) {
  Rat r(1);
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

inline Rat ratAbs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// Gaussian rational a + b*i. std::complex is specified only for the builtin
// floating types, so we carry our own minimal value type.
struct GRat {
  Rat re, im;
  GRat() : re(0), im(0) {}
  GRat(int n) : re(n), im(0) {}
  GRat(const Rat& r) : re(r), im(0) {}
  GRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static GRat I() { return GRat(Rat(0), Rat(1)); }

  GRat operator-() const { return GRat(-re, -im); }
  GRat& operator+=(const GRat& o) { re += o.re; im += o.im; return *this; }
  GRat& operator-=(const GRat& o) { re -= o.re; im -= o.im; return *this; }
  GRat& operator*=(const GRat& o) {
    Rat r = re * o.re - im * o.im;
    Rat i = re * o.im + im * o.re;
    re = r; im = i;
    return *this;
  }
  friend GRat operator+(GRat a, const GRat& b) { a += b; return a; }
  friend GRat operator-(GRat a, const GRat& b) { a -= b; return a; }
  friend GRat operator*(GRat a, const GRat& b) { a *= b; return a; }
  friend GRat operator*(const Rat& a, GRat b) { b.re *= a; b.im *= a; return b; }
  GRat operator/(const GRat& o) const {
    Rat n = o.re * o.re + o.im * o.im;
    if (n == 0) throw std::domain_error("division by zero GRat");
    return GRat((re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n);
  }
  friend bool operator==(const GRat& a, const GRat& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const GRat& a, const GRat& b) { return !(a == b); }

  bool isZero() const { return re == 0 && im == 0; }
  GRat conj() const { return GRat(re, -im); }
  // |re| + |im|: exact size measure used in violation reports
  Rat l1() const { return ratAbs(re) + ratAbs(im); }

  std::string str() const {
    if (im == 0) return ratStr(re);
    if (re == 0) return ratStr(im) + "i";
    return ratStr(re) + (im > 0 ? "+" : "") + ratStr(im) + "i";
  }
};

using MatQ = Eigen::Matrix<GRat, Eigen::Dynamic, Eigen::Dynamic>;
using MatR = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using VecR = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

inline MatQ matqZero(int r, int c) { return MatQ::Constant(r, c, GRat(0)); }
inline MatQ matqId(int n) {
  MatQ m = matqZero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = GRat(1);
  return m;
}

inline bool isZeroMat(const MatQ& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).isZero()) return false;
  return true;
}

inline Rat maxAbs(const MatQ& m) {
  Rat best(0);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      Rat v = m(i, j).l1();
      if (v > best) best = v;
    }
  return best;
}

inline MatQ kron(const MatQ& a, const MatQ& b) {
  MatQ r = matqZero(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j).isZero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

inline MatQ comm(const MatQ& a, const MatQ& b) { return a * b - b * a; }
inline MatQ anticomm(const MatQ& a, const MatQ& b) { return a * b + b * a; }

} // namespace csbv

namespace Eigen {

template <> struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0, IsSigned = 1, IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6, AddCost = 150, MulCost = 100
  };
};

template <> struct NumTraits<csbv::GRat> : GenericNumTraits<csbv::GRat> {
  typedef csbv::Rat Real;
  typedef csbv::GRat NonInteger;
  typedef csbv::GRat Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0, IsSigned = 1, IsComplex = 1,
    RequireInitialization = 1,
    ReadCost = 12, AddCost = 300, MulCost = 400
  };
};

} // namespace Eigen

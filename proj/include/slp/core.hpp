#pragma once

// Exact integer linear algebra over Z^2 and Z^3: vectors, small matrices,
// unimodular affine maps. Everything is exact; no floating point.

#include <array>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace slp {

using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(Int a, Int b) {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

// Fixed-capacity lattice vector of dimension 2 or 3.
class Vec {
 public:
  Vec() : dim_(0) {}
  Vec(Int x, Int y) : dim_(2), c_{std::move(x), std::move(y), 0} {}
  Vec(Int x, Int y, Int z) : dim_(3), c_{std::move(x), std::move(y), std::move(z)} {}

  static Vec zero(int dim) { return dim == 2 ? Vec(0, 0) : Vec(0, 0, 0); }
  static Vec unit(int dim, int i) {
    Vec v = zero(dim);
    v.c_[i] = 1;
    return v;
  }

  int dim() const { return dim_; }
  const Int& operator[](int i) const { return c_[i]; }
  Int& operator[](int i) { return c_[i]; }

  bool is_zero() const {
    for (int i = 0; i < dim_; ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  friend Vec operator+(const Vec& a, const Vec& b) {
    Vec r = a;
    for (int i = 0; i < a.dim_; ++i) r.c_[i] += b.c_[i];
    return r;
  }
  friend Vec operator-(const Vec& a, const Vec& b) {
    Vec r = a;
    for (int i = 0; i < a.dim_; ++i) r.c_[i] -= b.c_[i];
    return r;
  }
  friend Vec operator-(const Vec& a) {
    Vec r = a;
    for (int i = 0; i < a.dim_; ++i) r.c_[i] = -r.c_[i];
    return r;
  }
  friend Vec operator*(const Int& k, const Vec& a) {
    Vec r = a;
    for (int i = 0; i < a.dim_; ++i) r.c_[i] *= k;
    return r;
  }

  friend bool operator==(const Vec& a, const Vec& b) {
    if (a.dim_ != b.dim_) return false;
    for (int i = 0; i < a.dim_; ++i)
      if (a.c_[i] != b.c_[i]) return false;
    return true;
  }
  friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }
  // Lexicographic; shorter dimension sorts first.
  friend bool operator<(const Vec& a, const Vec& b) {
    if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
    for (int i = 0; i < a.dim_; ++i) {
      if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    }
    return false;
  }

  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < dim_; ++i) {
      if (i) s += ",";
      s += c_[i].str();
    }
    return s + ")";
  }

 private:
  int dim_;
  std::array<Int, 3> c_;
};

inline Int dot(const Vec& a, const Vec& b) {
  Int s = 0;
  for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec cross(const Vec& a, const Vec& b) {
  return Vec(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
             a[0] * b[1] - a[1] * b[0]);
}

// 2-D cross product (signed area of the parallelogram).
inline Int cross2(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }

// Returns (w, g) with v = g*w, g > 0 and gcd of w's entries 1.
inline std::pair<Vec, Int> primitive(const Vec& v) {
  if (v.is_zero()) throw std::invalid_argument("zero has no primitive direction");
  Int g = 0;
  for (int i = 0; i < v.dim(); ++i) g = gcd_int(g, v[i]);
  Vec w = v;
  for (int i = 0; i < v.dim(); ++i) w[i] /= g;
  return {w, g};
}

inline Vec primitive_dir(const Vec& v) { return primitive(v).first; }

// Square matrix of dimension 2 or 3, row-major.
class Mat {
 public:
  Mat() : n_(0) {}
  explicit Mat(int n) : n_(n) {
    for (auto& row : a_) row = {Int(0), Int(0), Int(0)};
  }

  static Mat identity(int n) {
    Mat m(n);
    for (int i = 0; i < n; ++i) m.a_[i][i] = 1;
    return m;
  }
  static Mat from_columns(const std::vector<Vec>& cols) {
    if (cols.empty()) throw std::invalid_argument("empty column list");
    int n = cols[0].dim();
    if (static_cast<int>(cols.size()) != n)
      throw std::invalid_argument("column count does not match dimension");
    Mat m(n);
    for (int j = 0; j < n; ++j) {
      if (cols[j].dim() != n) throw std::invalid_argument("mixed dimensions");
      for (int i = 0; i < n; ++i) m.a_[i][j] = cols[j][i];
    }
    return m;
  }

  int dim() const { return n_; }
  const Int& at(int i, int j) const { return a_[i][j]; }
  Int& at(int i, int j) { return a_[i][j]; }

  Int det() const {
    if (n_ == 2) return a_[0][0] * a_[1][1] - a_[0][1] * a_[1][0];
    return a_[0][0] * (a_[1][1] * a_[2][2] - a_[1][2] * a_[2][1]) -
           a_[0][1] * (a_[1][0] * a_[2][2] - a_[1][2] * a_[2][0]) +
           a_[0][2] * (a_[1][0] * a_[2][1] - a_[1][1] * a_[2][0]);
  }

  // adj(M) * M = det(M) * I
  Mat adjugate() const {
    Mat r(n_);
    if (n_ == 2) {
      r.a_[0][0] = a_[1][1];
      r.a_[0][1] = -a_[0][1];
      r.a_[1][0] = -a_[1][0];
      r.a_[1][1] = a_[0][0];
      return r;
    }
    auto cof = [&](int i, int j) {
      int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
      int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      if (r0 > r1) std::swap(r0, r1);
      if (c0 > c1) std::swap(c0, c1);
      Int minor = a_[r0][c0] * a_[r1][c1] - a_[r0][c1] * a_[r1][c0];
      return ((i + j) % 2 == 0) ? minor : Int(-minor);
    };
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.a_[j][i] = cof(i, j);
    return r;
  }

  friend Vec operator*(const Mat& m, const Vec& v) {
    if (m.n_ != v.dim()) throw std::invalid_argument("dimension mismatch");
    Vec r = Vec::zero(m.n_);
    for (int i = 0; i < m.n_; ++i) {
      Int s = 0;
      for (int j = 0; j < m.n_; ++j) s += m.a_[i][j] * v[j];
      r[i] = s;
    }
    return r;
  }
  friend Mat operator*(const Mat& x, const Mat& y) {
    if (x.n_ != y.n_) throw std::invalid_argument("dimension mismatch");
    Mat r(x.n_);
    for (int i = 0; i < x.n_; ++i)
      for (int j = 0; j < x.n_; ++j) {
        Int s = 0;
        for (int k = 0; k < x.n_; ++k) s += x.a_[i][k] * y.a_[k][j];
        r.a_[i][j] = s;
      }
    return r;
  }
  friend bool operator==(const Mat& x, const Mat& y) {
    if (x.n_ != y.n_) return false;
    for (int i = 0; i < x.n_; ++i)
      for (int j = 0; j < x.n_; ++j)
        if (x.a_[i][j] != y.a_[i][j]) return false;
    return true;
  }

 private:
  int n_;
  std::array<std::array<Int, 3>, 3> a_;
};

// True iff the vectors form a basis of the integer lattice (|det| = 1).
inline bool is_lattice_basis(const std::vector<Vec>& vs) {
  Mat m = Mat::from_columns(vs);
  return abs_int(m.det()) == 1;
}

// x -> A x + t with |det A| = 1. Closed under composition and inversion.
class AffineMap {
 public:
  AffineMap() = default;
  AffineMap(Mat a, Vec t) : a_(std::move(a)), t_(std::move(t)) {
    if (abs_int(a_.det()) != 1) throw std::invalid_argument("matrix is not unimodular");
    if (a_.dim() != t_.dim()) throw std::invalid_argument("dimension mismatch");
  }

  static AffineMap identity(int dim) { return AffineMap(Mat::identity(dim), Vec::zero(dim)); }
  static AffineMap translation(const Vec& t) { return AffineMap(Mat::identity(t.dim()), t); }

  int dim() const { return a_.dim(); }
  const Mat& matrix() const { return a_; }
  const Vec& shift() const { return t_; }

  Vec apply(const Vec& p) const {
    if (p.dim() != a_.dim()) throw std::invalid_argument("dimension mismatch");
    return a_ * p + t_;
  }

  // Left-to-right composition: this->then(g) applies *this first, then g.
  AffineMap then(const AffineMap& g) const {
    return AffineMap(g.a_ * a_, g.a_ * t_ + g.t_);
  }

  AffineMap inverse() const {
    Int d = a_.det();  // +1 or -1
    Mat adj = a_.adjugate();
    Mat inv(a_.dim());
    for (int i = 0; i < a_.dim(); ++i)
      for (int j = 0; j < a_.dim(); ++j) inv.at(i, j) = adj.at(i, j) * d;
    return AffineMap(inv, -(inv * t_));
  }

  friend bool operator==(const AffineMap& f, const AffineMap& g) {
    return f.a_ == g.a_ && f.t_ == g.t_;
  }

 private:
  Mat a_;
  Vec t_;
};

}  // namespace slp

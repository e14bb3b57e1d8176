#pragma once

#include <cstdint>
#include <stdexcept>
#include <tuple>
#include <vector>

// Exact integer 2D linear algebra: vectors, 2x2 matrices and full-rank
// sublattices of Z^2 kept in Hermite form. Everything downstream relies on
// these being exact, so there is no floating point anywhere in this layer.

namespace isotile {

using i64 = std::int64_t;

inline i64 floor_div(i64 a, i64 b) {
  // b > 0
  i64 q = a / b;
  i64 r = a % b;
  return (r != 0 && r < 0) ? q - 1 : q;
}

inline i64 gcd_i64(i64 a, i64 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

struct Vec2 {
  i64 x = 0;
  i64 y = 0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  Vec2 operator-() const { return {-x, -y}; }
  friend Vec2 operator*(i64 k, Vec2 v) { return {k * v.x, k * v.y}; }
  friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(Vec2 a, Vec2 b) { return !(a == b); }
  friend bool operator<(Vec2 a, Vec2 b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
};

struct Mat2 {
  // [[a, b], [c, d]] acting on column vectors.
  i64 a = 1, b = 0, c = 0, d = 1;

  Vec2 operator*(Vec2 v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
  }
  i64 det() const { return a * d - b * c; }
  bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }

  friend bool operator==(const Mat2& m, const Mat2& o) {
    return m.a == o.a && m.b == o.b && m.c == o.c && m.d == o.d;
  }
  friend bool operator<(const Mat2& m, const Mat2& o) {
    return std::tie(m.a, m.b, m.c, m.d) < std::tie(o.a, o.b, o.c, o.d);
  }
};

inline Mat2 mat_identity() { return Mat2{}; }

// Inverse of a unimodular matrix (det = +-1).
inline Mat2 mat_inverse_unimodular(const Mat2& m) {
  i64 dt = m.det();
  if (dt != 1 && dt != -1)
    throw std::logic_error("mat_inverse_unimodular: determinant is not +-1");
  return {m.d * dt, -m.b * dt, -m.c * dt, m.a * dt};
}

// Full-rank sublattice of Z^2 with Hermite basis b1 = (a, y0), b2 = (0, c),
// where a > 0, c > 0 and 0 <= y0 < c. index() = a*c = |Z^2 : L|.
class Lattice2 {
 public:
  Lattice2() : a_(1), y0_(0), c_(1) {}
  Lattice2(i64 a, i64 y0, i64 c) : a_(a), y0_(y0), c_(c) {
    if (a_ <= 0 || c_ <= 0 || y0_ < 0 || y0_ >= c_)
      throw std::logic_error("Lattice2: basis not in Hermite form");
  }

  static Lattice2 from_vectors(const std::vector<Vec2>& vecs) {
    // Euclid on x-components to obtain one vector with x = gcd of all x's,
    // pushing everything with x = 0 into a residual y-gcd.
    bool have_w = false;
    Vec2 w{0, 0};
    i64 ygcd = 0;
    for (Vec2 v : vecs) {
      if (v.x == 0 && v.y == 0) continue;
      if (v.x == 0) {
        ygcd = gcd_i64(ygcd, v.y);
        continue;
      }
      if (!have_w) {
        w = v;
        have_w = true;
        continue;
      }
      Vec2 p = w, q = v;
      while (q.x != 0) {
        i64 k = p.x / q.x;  // truncating quotient; |p.x - k*q.x| < |q.x|
        p = p - k * q;
        std::swap(p, q);
      }
      w = p;
      ygcd = gcd_i64(ygcd, q.y);
    }
    if (!have_w || ygcd == 0)
      throw std::logic_error("Lattice2::from_vectors: vectors do not span a rank-2 lattice");
    if (w.x < 0) w = -w;
    i64 c = ygcd;
    i64 y0 = ((w.y % c) + c) % c;
    return Lattice2(w.x, y0, c);
  }

  i64 a() const { return a_; }
  i64 y0() const { return y0_; }
  i64 c() const { return c_; }
  Vec2 basis1() const { return {a_, y0_}; }
  Vec2 basis2() const { return {0, c_}; }
  i64 index() const { return a_ * c_; }

  bool contains(Vec2 v) const {
    if (v.x % a_ != 0) return false;
    i64 k1 = v.x / a_;
    return (v.y - k1 * y0_) % c_ == 0;
  }

  // Canonical residue representative with x in [0, a) and y in [0, c).
  Vec2 reduce(Vec2 v) const {
    i64 k1 = floor_div(v.x, a_);
    i64 rx = v.x - k1 * a_;
    i64 ry = v.y - k1 * y0_;
    ry -= floor_div(ry, c_) * c_;
    return {rx, ry};
  }

  // The lattice m*L.
  Lattice2 transformed(const Mat2& m) const {
    return from_vectors({m * basis1(), m * basis2()});
  }

  // L with every coordinate divided by s (requires s | every basis entry).
  Lattice2 scaled_down(i64 s) const {
    if (a_ % s != 0 || y0_ % s != 0 || c_ % s != 0)
      throw std::logic_error("Lattice2::scaled_down: basis not divisible");
    return Lattice2(a_ / s, y0_ / s, c_ / s);
  }

  Lattice2 intersect(const Lattice2& other) const {
    // Solve for k in Z^2 with k1*b1 + k2*b2 in `other`. The solution set
    // contains d*Z^2 for d = other.index(), so scanning k over [0,d)^2
    // together with (d,0),(0,d) yields a generating set.
    i64 d = other.index();
    std::vector<Vec2> gens;
    gens.push_back(d * basis1());
    gens.push_back(d * basis2());
    for (i64 k1 = 0; k1 < d; ++k1) {
      for (i64 k2 = 0; k2 < d; ++k2) {
        if (k1 == 0 && k2 == 0) continue;
        Vec2 v = k1 * basis1() + k2 * basis2();
        if (other.contains(v)) gens.push_back(v);
      }
    }
    return from_vectors(gens);
  }

  friend bool operator==(const Lattice2& p, const Lattice2& q) {
    return p.a_ == q.a_ && p.y0_ == q.y0_ && p.c_ == q.c_;
  }

 private:
  i64 a_, y0_, c_;
};

}  // namespace isotile

#pragma once

#include <vector>

#include "isotile/lattice.hpp"

// Exact lattice isometries p -> m*p + t with m in the finite point group of
// the lattice (expressed in the lattice basis) and t in scaled coordinates.

namespace isotile {

struct Isometry {
  Mat2 m;
  Vec2 t;

  Vec2 apply(Vec2 p) const { return m * p + t; }
  // this after o
  Isometry compose(const Isometry& o) const { return {m * o.m, m * o.t + t}; }
  Isometry inverse() const {
    Mat2 mi = mat_inverse_unimodular(m);
    return {mi, -(mi * t)};
  }
  bool improper() const { return m.det() < 0; }

  friend bool operator==(const Isometry& g, const Isometry& h) {
    return g.m == h.m && g.t == h.t;
  }
  friend bool operator<(const Isometry& g, const Isometry& h) {
    if (!(g.m == h.m)) return g.m < h.m;
    return g.t < h.t;
  }
};

inline Isometry identity_isometry() { return {mat_identity(), {0, 0}}; }

// Base rotation of the lattice point group, in the lattice basis:
// square 90deg:  u -> v, v -> -u;   triangular 60deg: u -> v, v -> v - u.
inline Mat2 base_rotation(LatticeKind k) {
  if (k == LatticeKind::Square) return {0, -1, 1, 0};
  return {0, -1, 1, 1};
}

// Mirror across the u-axis: square (a,b)->(a,-b); triangular u->u, v->u-v.
inline Mat2 base_mirror(LatticeKind k) {
  if (k == LatticeKind::Square) return {1, 0, 0, -1};
  return {1, 1, 0, -1};
}

// Full point group of the lattice (8 elements for Square, 12 for
// Triangular), as the closure of {rotation, mirror}; deterministic order.
inline const std::vector<Mat2>& point_group(LatticeKind k) {
  static const std::vector<Mat2> square = [] {
    std::vector<Mat2> out;
    Mat2 r = base_rotation(LatticeKind::Square), f = base_mirror(LatticeKind::Square);
    Mat2 m = mat_identity();
    for (int i = 0; i < 4; ++i, m = r * m) {
      out.push_back(m);
      out.push_back(f * m);
    }
    std::sort(out.begin(), out.end());
    return out;
  }();
  static const std::vector<Mat2> tri = [] {
    std::vector<Mat2> out;
    Mat2 r = base_rotation(LatticeKind::Triangular), f = base_mirror(LatticeKind::Triangular);
    Mat2 m = mat_identity();
    for (int i = 0; i < 6; ++i, m = r * m) {
      out.push_back(m);
      out.push_back(f * m);
    }
    std::sort(out.begin(), out.end());
    return out;
  }();
  return k == LatticeKind::Square ? square : tri;
}

// Multiplicative order of a point-group element (1, 2, 3, 4 or 6).
inline int rotation_order(const Mat2& m) {
  Mat2 p = m;
  for (int k = 1; k <= 6; ++k) {
    if (p.is_identity()) return k;
    p = p * m;
  }
  throw std::logic_error("rotation_order: element order exceeds 6");
}

// Rotation about a fixed point: p -> m*(p - center) + center.
inline Isometry rotation_about(const Mat2& m, Vec2 center) {
  return {m, center - m * center};
}

// Image cell under a cell-preserving isometry, via the centroid. Throws if
// the image is not a cell (the isometry does not respect the lattice).
inline Cell apply_to_cell(const Isometry& g, const Cell& c) {
  return cell_from_centroid(c.lattice, g.apply(cell_centroid(c)));
}

}  // namespace isotile

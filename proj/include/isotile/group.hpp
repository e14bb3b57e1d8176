#pragma once

#include <map>
#include <optional>
#include <string>

#include "isotile/isometry.hpp"

// Concrete wallpaper groups built from the placement parameters: generators,
// translation sublattice Lambda (closed from generator products and reduced
// to Hermite form), the finite coset decomposition G/Lambda, and the orbit
// labelling of cells. All of it exact.

namespace isotile {

enum class GroupKind { P3, P31M, P3M1, P4, P4G, P4M, P6, P6M };

inline const char* to_string(GroupKind k) {
  switch (k) {
    case GroupKind::P3: return "p3";
    case GroupKind::P31M: return "p31m";
    case GroupKind::P3M1: return "p3m1";
    case GroupKind::P4: return "p4";
    case GroupKind::P4G: return "p4g";
    case GroupKind::P4M: return "p4m";
    case GroupKind::P6: return "p6";
    case GroupKind::P6M: return "p6m";
  }
  return "?";
}

inline std::optional<GroupKind> parse_group_kind(const std::string& s) {
  for (GroupKind k : {GroupKind::P3, GroupKind::P31M, GroupKind::P3M1,
                      GroupKind::P4, GroupKind::P4G, GroupKind::P4M,
                      GroupKind::P6, GroupKind::P6M})
    if (s == to_string(k)) return k;
  return std::nullopt;
}

inline LatticeKind lattice_of(GroupKind k) {
  return (k == GroupKind::P4 || k == GroupKind::P4G || k == GroupKind::P4M)
             ? LatticeKind::Square
             : LatticeKind::Triangular;
}

struct GroupParams {
  i64 x = 0;
  i64 y = 0;
  friend bool operator==(GroupParams p, GroupParams q) { return p.x == q.x && p.y == q.y; }
  friend bool operator<(GroupParams p, GroupParams q) {
    return p.x != q.x ? p.x < q.x : p.y < q.y;
  }
};

// Normalizes interchangeable (x,y) to x >= y and validates; throws
// std::invalid_argument with a diagnostic otherwise.
inline GroupParams validate_params(GroupKind kind, GroupParams p) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument(std::string(to_string(kind)) + " params (" +
                                std::to_string(p.x) + "," + std::to_string(p.y) +
                                "): " + why);
  };
  if (p.x < 0 || p.y < 0) fail("x and y must be nonnegative");
  switch (kind) {
    case GroupKind::P4:
      if (p.x == 0 && p.y == 0) fail("x and y must not both be zero");
      if (p.x < p.y) std::swap(p.x, p.y);
      if ((p.x - p.y) % 2 != 0) fail("x and y must have the same parity");
      break;
    case GroupKind::P3:
    case GroupKind::P6:
      if (p.x == 0 && p.y == 0) fail("x and y must not both be zero");
      if (p.x < p.y) std::swap(p.x, p.y);
      break;
    case GroupKind::P4G:
    case GroupKind::P31M:
      if (p.x < 1) fail("x must be at least 1");
      if (p.y != 0) fail("y is unused and must be 0");
      break;
    default:
      fail("group admits no parameterized construction");
  }
  return p;
}

// Fundamental-domain area in cell units (unit square / unit triangle = 1).
inline i64 fundamental_area(GroupKind kind, GroupParams p) {
  p = validate_params(kind, p);
  switch (kind) {
    case GroupKind::P4: return (p.x * p.x + p.y * p.y) / 2;
    case GroupKind::P4G: return p.x * p.x;
    case GroupKind::P3: return 2 * (p.x * p.x + p.y * p.y + p.x * p.y);
    case GroupKind::P31M: return 3 * p.x * p.x;
    case GroupKind::P6: return p.x * p.x + p.y * p.y + p.x * p.y;
    default: throw std::invalid_argument("fundamental_area: group has no size formula");
  }
}

struct SizeEntry {
  i64 n = 0;
  std::vector<GroupParams> params;
  bool marked_only = false;
};

// All achievable n <= max_n, each with every (normalized, x >= y) parameter
// pair realizing it. P4M/P6M: empty. P3M1: perfect squares, marked-only.
inline std::vector<SizeEntry> admissible_sizes(GroupKind kind, i64 max_n) {
  if (max_n < 1) throw std::invalid_argument("admissible_sizes: max_n must be >= 1");
  std::map<i64, std::vector<GroupParams>> found;
  auto consider = [&](GroupParams p) {
    i64 n = fundamental_area(kind, p);
    if (n <= max_n) found[n].push_back(p);
  };
  switch (kind) {
    case GroupKind::P4M:
    case GroupKind::P6M:
      return {};
    case GroupKind::P3M1: {
      std::vector<SizeEntry> out;
      for (i64 k = 1; k * k <= max_n; ++k)
        out.push_back({k * k, {GroupParams{k, 0}}, true});
      return out;
    }
    case GroupKind::P4:
      for (i64 x = 1; x * x <= 2 * max_n; ++x)
        for (i64 y = x % 2; y <= x; y += 2) consider({x, y});
      break;
    case GroupKind::P4G:
      for (i64 x = 1; x * x <= max_n; ++x) consider({x, 0});
      break;
    case GroupKind::P3:
      for (i64 x = 1; 2 * x * x <= max_n; ++x)
        for (i64 y = 0; y <= x; ++y) consider({x, y});
      break;
    case GroupKind::P31M:
      for (i64 x = 1; 3 * x * x <= max_n; ++x) consider({x, 0});
      break;
    case GroupKind::P6:
      for (i64 x = 1; x * x <= max_n; ++x)
        for (i64 y = 0; y <= x; ++y) consider({x, y});
      break;
  }
  std::vector<SizeEntry> out;
  for (auto& [n, ps] : found) {
    std::sort(ps.begin(), ps.end());
    out.push_back({n, ps, false});
  }
  return out;
}

struct OrbitLabel {
  Cell canonical;  // lexicographically least Lambda-reduced image
  int id = -1;     // dense index in [0, n)
  friend bool operator==(const OrbitLabel& p, const OrbitLabel& q) {
    return p.canonical == q.canonical;
  }
};

class WallpaperGroup {
 public:
  GroupKind kind;
  GroupParams params;
  LatticeKind lattice;
  i64 scale;
  i64 n;  // fundamental-domain area in cells
  std::vector<Isometry> generators;
  Lattice2 lambda;        // translation sublattice, scaled coordinates
  Lattice2 lambda_cells;  // lambda / scale, acting on cell anchors
  std::vector<Isometry> cosets;  // one representative per G/Lambda, [0] = id
  Vec2 black;  // scaled; always the origin
  Vec2 white;  // scaled; second placed center (derived one for P4G/P31M)

  int orient_count() const { return lattice == LatticeKind::Square ? 1 : 2; }

  Cell reduce_cell(const Cell& c) const {
    Vec2 r = lambda_cells.reduce({c.a, c.b});
    return {c.lattice, r.x, r.y, c.orient};
  }

  int orbit_id(const Cell& c) const { return label_table_[residue_index(c)]; }

  OrbitLabel orbit_label(const Cell& c) const {
    int id = orbit_id(c);
    return {label_canonical_[id], id};
  }

  // Region constraint for the reflection-bearing groups: every cell of a
  // tile must stay inside the closed region bounded by the reflection axes
  // nearest the origin. Other groups are unconstrained.
  bool in_region(const Cell& c) const {
    if (kind == GroupKind::P4G) {
      i64 bound = 2 * params.x;  // scaled
      for (Vec2 v : cell_vertices(c))
        if (v.x < -bound || v.x > bound || v.y < -bound || v.y > bound) return false;
      return true;
    }
    if (kind == GroupKind::P31M) {
      i64 bound = 6 * params.x;  // scaled
      for (Vec2 v : cell_vertices(c))
        if (v.x > bound || v.y > bound || v.x + v.y < -bound) return false;
      return true;
    }
    return true;
  }

  // Does G contain the concrete isometry g?
  bool contains(const Isometry& g) const {
    for (const Isometry& rep : cosets)
      if (rep.m == g.m && lambda.contains(g.t - rep.t)) return true;
    return false;
  }

  // Largest k such that the rotation of order k about p belongs to G
  // (0 if p is not a rotation center of G).
  int max_center_order_at(Vec2 p) const {
    int best = 0;
    for (const Isometry& rep : cosets) {
      if (rep.improper() || rep.m.is_identity()) continue;
      Vec2 need = p - rep.m * p;  // (I - m) * p
      if (lambda.contains(need - rep.t)) best = std::max(best, rotation_order(rep.m));
    }
    return best;
  }

  enum class CenterClass { BlackOrbit, WhiteOrbit, Other };

  CenterClass center_class(Vec2 p) const {
    auto in_orbit = [&](Vec2 q) {
      for (const Isometry& rep : cosets)
        if (lambda.contains(p - rep.apply(q))) return true;
      return false;
    };
    if (in_orbit(black)) return CenterClass::BlackOrbit;
    if (in_orbit(white)) return CenterClass::WhiteOrbit;
    return CenterClass::Other;
  }

  // True iff the segment (v1, v2) lies on a mirror axis of G.
  bool segment_on_mirror(Vec2 v1, Vec2 v2) const {
    for (const Isometry& rep : cosets) {
      if (!rep.improper()) continue;
      Vec2 dir = v2 - v1;
      if (!(rep.m * dir == dir)) continue;
      if (lambda.contains(v1 - rep.m * v1 - rep.t)) return true;
    }
    return false;
  }

  std::size_t cells_per_lambda_cell() const {
    return std::size_t(lambda_cells.index()) * orient_count();
  }

  // Dense index of a cell's residue modulo Lambda, in [0, cells_per_lambda_cell()).
  std::size_t residue_index(const Cell& c) const {
    Vec2 r = lambda_cells.reduce({c.a, c.b});
    std::size_t anchor = std::size_t(r.x) * lambda_cells.c() + std::size_t(r.y);
    if (lattice == LatticeKind::Square) return anchor;
    return anchor * 2 + (c.orient == Orient::Up ? 0 : 1);
  }

 private:
  std::vector<int> label_table_;         // residue cell -> orbit id
  std::vector<Cell> label_canonical_;    // orbit id -> canonical cell

  friend WallpaperGroup build_group(GroupKind, GroupParams);
};

namespace detail {

// Pure translations appearing among products of up to `len` generator
// factors (generators and their inverses).
inline std::vector<Vec2> translation_closure(const std::vector<Isometry>& gens, int len) {
  std::vector<Isometry> factors;
  for (const Isometry& g : gens) {
    factors.push_back(g);
    factors.push_back(g.inverse());
  }
  std::vector<Isometry> words{identity_isometry()};
  std::vector<Vec2> found;
  for (int step = 0; step < len; ++step) {
    std::vector<Isometry> next;
    for (const Isometry& w : words)
      for (const Isometry& f : factors) {
        Isometry p = f.compose(w);
        next.push_back(p);
        if (p.m.is_identity() && !(p.t == Vec2{0, 0})) found.push_back(p.t);
      }
    words = std::move(next);
  }
  return found;
}

}  // namespace detail

inline WallpaperGroup build_group(GroupKind kind, GroupParams raw_params) {
  GroupParams params = validate_params(kind, raw_params);
  if (kind == GroupKind::P3M1 || kind == GroupKind::P4M || kind == GroupKind::P6M)
    throw std::invalid_argument(std::string("build_group: ") + to_string(kind) +
                                " has no parameterized group construction");

  WallpaperGroup g;
  g.kind = kind;
  g.params = params;
  g.lattice = lattice_of(kind);
  g.scale = scale_of(g.lattice);
  g.n = fundamental_area(kind, params);
  g.black = {0, 0};

  Mat2 r90 = base_rotation(LatticeKind::Square);
  Mat2 r60 = base_rotation(LatticeKind::Triangular);
  Mat2 r120 = r60 * r60;
  i64 x = params.x, y = params.y;

  switch (kind) {
    case GroupKind::P4:
      g.white = {2 * x, 2 * y};
      g.generators = {rotation_about(r90, g.black), rotation_about(r90, g.white)};
      break;
    case GroupKind::P4G:
      // 4-fold at the origin plus the mirror in the axis through x*u
      // (the lattice line a = x). The second 4-fold class sits at 2x*u.
      g.white = {4 * x, 0};
      g.generators = {rotation_about(r90, g.black),
                      Isometry{{-1, 0, 0, 1}, {4 * x, 0}}};
      break;
    case GroupKind::P3:
      g.white = {6 * x, 6 * y};
      g.generators = {rotation_about(r120, g.black), rotation_about(r120, g.white)};
      break;
    case GroupKind::P31M: {
      // 3-fold at the origin plus the mirror in the axis through x(u+v) and
      // x(-2u+v): the lattice line b = x, direction u.
      g.white = {6 * x, 6 * x};
      Mat2 mu = base_mirror(LatticeKind::Triangular);
      Vec2 c = {0, 6 * x};
      g.generators = {rotation_about(r120, g.black), Isometry{mu, c - mu * c}};
      break;
    }
    case GroupKind::P6:
      g.white = {6 * x, 6 * y};
      g.generators = {rotation_about(r60, g.black), rotation_about(r120, g.white)};
      break;
    default:
      throw std::invalid_argument("build_group: unsupported kind");
  }

  // Lambda from generator products, then the coset closure modulo Lambda.
  // If the quotient closure ever exposes a translation outside the current
  // Lambda, fold it in and redo the closure.
  std::vector<Vec2> tvecs = detail::translation_closure(g.generators, 4);
  for (int attempt = 0;; ++attempt) {
    if (attempt > 8) throw std::logic_error("build_group: translation lattice did not stabilize");
    g.lambda = Lattice2::from_vectors(tvecs);

    std::map<std::pair<Mat2, Vec2>, int> seen;
    std::vector<Isometry> reps;
    std::vector<Isometry> queue{identity_isometry()};
    seen[{queue[0].m, queue[0].t}] = 0;
    reps.push_back(queue[0]);
    bool widened = false;
    for (std::size_t qi = 0; qi < queue.size() && !widened; ++qi) {
      Isometry cur = queue[qi];
      for (const Isometry& gen : g.generators) {
        for (const Isometry& f : {gen, gen.inverse()}) {
          Isometry p = f.compose(cur);
          p.t = g.lambda.reduce(p.t);
          if (p.m.is_identity() && !(p.t == Vec2{0, 0})) {
            tvecs.push_back(p.t);
            widened = true;
            break;
          }
          if (!seen.count({p.m, p.t})) {
            seen[{p.m, p.t}] = (int)reps.size();
            reps.push_back(p);
            queue.push_back(p);
          }
        }
        if (widened) break;
      }
      if (reps.size() > 64) throw std::logic_error("build_group: coset closure diverged");
    }
    if (!widened) {
      g.cosets = reps;
      break;
    }
  }

  g.lambda_cells = g.lambda.scaled_down(g.scale);

  if (g.cells_per_lambda_cell() != g.cosets.size() * std::size_t(g.n))
    throw std::logic_error("build_group: area accounting failed (|G/Lambda| * n != cells per Lambda-cell)");

  // Orbit table over one Lambda-cell of residues. Exactly n orbits must
  // appear; anything else means a cell is stabilized by a nontrivial coset.
  std::size_t total = g.cells_per_lambda_cell();
  g.label_table_.assign(total, -1);
  int next_id = 0;
  for (i64 ra = 0; ra < g.lambda_cells.a(); ++ra) {
    for (i64 rb = 0; rb < g.lambda_cells.c(); ++rb) {
      for (int oi = 0; oi < g.orient_count(); ++oi) {
        Cell c{g.lattice, ra, rb,
               g.lattice == LatticeKind::Square ? Orient::None
                                                : (oi == 0 ? Orient::Up : Orient::Down)};
        if (g.label_table_[g.residue_index(c)] >= 0) continue;
        std::vector<Cell> orbit;
        for (const Isometry& rep : g.cosets) orbit.push_back(g.reduce_cell(apply_to_cell(rep, c)));
        std::sort(orbit.begin(), orbit.end());
        orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
        for (const Cell& oc : orbit) {
          int& slot = g.label_table_[g.residue_index(oc)];
          if (slot >= 0) throw std::logic_error("build_group: inconsistent orbit labelling");
          slot = next_id;
        }
        g.label_canonical_.push_back(orbit.front());
        ++next_id;
      }
    }
  }
  if (next_id != g.n)
    throw std::logic_error("build_group: orbit count " + std::to_string(next_id) +
                           " != fundamental area " + std::to_string(g.n) + " for " +
                           to_string(kind));
  return g;
}

}  // namespace isotile

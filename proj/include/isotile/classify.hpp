#pragma once

#include <set>

#include "isotile/enumerate.hpp"

// Symmetry classification of the generated tilings. The tiling is reduced to
// a finite object (cells modulo a point-group-invariant sublattice of
// Lambda), every candidate isometry (m, t) with m in the full lattice point
// group and t ranging over scaled residues is tested exactly for mapping
// tile copies onto tile copies, and the full group gets its wallpaper name
// from the standard recognition keys.

namespace isotile {

enum class WallpaperType {
  p1, p2, pm, pg, cm, pmm, pmg, pgg, cmm, p4, p4m, p4g, p3, p3m1, p31m, p6, p6m
};

inline const char* to_string(WallpaperType t) {
  switch (t) {
    case WallpaperType::p1: return "p1";
    case WallpaperType::p2: return "p2";
    case WallpaperType::pm: return "pm";
    case WallpaperType::pg: return "pg";
    case WallpaperType::cm: return "cm";
    case WallpaperType::pmm: return "pmm";
    case WallpaperType::pmg: return "pmg";
    case WallpaperType::pgg: return "pgg";
    case WallpaperType::cmm: return "cmm";
    case WallpaperType::p4: return "p4";
    case WallpaperType::p4m: return "p4m";
    case WallpaperType::p4g: return "p4g";
    case WallpaperType::p3: return "p3";
    case WallpaperType::p3m1: return "p3m1";
    case WallpaperType::p31m: return "p31m";
    case WallpaperType::p6: return "p6";
    case WallpaperType::p6m: return "p6m";
  }
  return "?";
}

struct TorusTiling {
  const WallpaperGroup* group = nullptr;
  MarkedTile tile;
  std::vector<int> cell_to_copy;  // residue index (mod Lambda) -> coset id
};

// Assigns every residue cell to the G-image of the tile covering it; a cell
// left uncovered or covered twice means the tile is not a fundamental
// domain, which signals an enumerator bug.
inline TorusTiling generate_torus_tiling(const MarkedTile& t, const WallpaperGroup& G) {
  TorusTiling tt;
  tt.group = &G;
  tt.tile = t;
  tt.cell_to_copy.assign(G.cells_per_lambda_cell(), -1);
  for (std::size_t i = 0; i < G.cosets.size(); ++i) {
    for (const Cell& c : t.cells) {
      Cell img = apply_to_cell(G.cosets[i], c);
      int& slot = tt.cell_to_copy[G.residue_index(img)];
      if (slot != -1)
        throw std::logic_error("generate_torus_tiling: cell covered twice; tile is not a fundamental domain");
      slot = (int)i;
    }
  }
  for (int v : tt.cell_to_copy)
    if (v == -1)
      throw std::logic_error("generate_torus_tiling: cell uncovered; tile is not a fundamental domain");
  return tt;
}

struct SymmetryReport {
  WallpaperType full_kind = WallpaperType::p1;
  i64 index = 1;               // |G' : G|
  bool is_fundamental = true;  // index == 1
  std::vector<Center> new_centers;  // rotation centers of G' absent from G
  bool has_reflection = false;
  // cross-check data, not part of the serialized report:
  bool stabilizer_nontrivial = false;  // some g != id in G' maps T onto itself
};

namespace detail {

inline Mat2 mat_sub_from_identity(const Mat2& m) {
  return {1 - m.a, -m.b, -m.c, 1 - m.d};
}

inline Mat2 mat_adjugate(const Mat2& m) { return {m.d, -m.b, -m.c, m.a}; }

// Is u in the (rank <= 1) lattice spanned by w1, w2?
inline bool in_rank1_span(Vec2 u, Vec2 w1, Vec2 w2) {
  if (w1 == Vec2{0, 0} && w2 == Vec2{0, 0}) return u == Vec2{0, 0};
  Vec2 d = (w1 == Vec2{0, 0}) ? w2 : w1;
  i64 g = gcd_i64(d.x, d.y);
  d = {d.x / g, d.y / g};
  auto scalar_of = [&](Vec2 v) -> std::optional<i64> {
    if (v.x * d.y != v.y * d.x) return std::nullopt;
    i64 s = (d.x != 0) ? v.x / d.x : v.y / d.y;
    if (!(s * d == v)) return std::nullopt;
    return s;
  };
  auto s1 = scalar_of(w1), s2 = scalar_of(w2);
  if (!s1 || !s2) throw std::logic_error("in_rank1_span: spanning vectors not collinear");
  i64 step = gcd_i64(*s1, *s2);
  auto su = scalar_of(u);
  if (!su) return false;
  return step != 0 && *su % step == 0;
}

// The largest sublattice of Lambda invariant under the full lattice point
// group. Computed in cell coordinates; depends only on the group.
inline Lattice2 point_group_invariant_sublattice(const WallpaperGroup& G) {
  Lattice2 cur = G.lambda_cells;
  for (const Mat2& m : point_group(G.lattice))
    cur = cur.intersect(G.lambda_cells.transformed(m));
  return cur;  // cell coordinates
}

// Finite model of the tiling modulo lambda_star = intersection of m*Lambda
// over the full point group (so every candidate point-group part descends).
struct SymmetryScan {
  const WallpaperGroup* G;
  Lattice2 lam_star;        // scaled
  Lattice2 lam_star_cells;  // lambda_star / scale
  i64 ratio = 1;            // |Lambda : Lambda*|
  std::vector<Vec2> lam_reps;  // Lambda mod Lambda*, scaled
  std::vector<std::vector<Cell>> copies;
  std::vector<int> res_copy;
  std::vector<Cell> res_cell;

  std::size_t slot(const Cell& c) const {
    Vec2 r = lam_star_cells.reduce({c.a, c.b});
    std::size_t anchor = std::size_t(r.x) * lam_star_cells.c() + std::size_t(r.y);
    if (c.lattice == LatticeKind::Square) return anchor;
    return anchor * 2 + (c.orient == Orient::Up ? 0 : 1);
  }

  SymmetryScan(const TorusTiling& tt, const Lattice2* star_cells_hint) : G(tt.group) {
    lam_star_cells = star_cells_hint ? *star_cells_hint : point_group_invariant_sublattice(*G);
    lam_star = Lattice2(lam_star_cells.a() * G->scale, lam_star_cells.y0() * G->scale,
                        lam_star_cells.c() * G->scale);
    ratio = lam_star.index() / G->lambda.index();

    std::set<Vec2> reps;
    for (i64 k1 = 0; k1 <= ratio && (i64)reps.size() < ratio; ++k1)
      for (i64 k2 = 0; k2 <= ratio && (i64)reps.size() < ratio; ++k2)
        reps.insert(lam_star.reduce(k1 * G->lambda.basis1() + k2 * G->lambda.basis2()));
    if ((i64)reps.size() != ratio)
      throw std::logic_error("SymmetryScan: failed to enumerate Lambda / Lambda*");
    lam_reps.assign(reps.begin(), reps.end());

    std::size_t total = std::size_t(lam_star_cells.index()) * G->orient_count();
    res_copy.assign(total, -1);
    res_cell.resize(total);
    for (const Isometry& rep : G->cosets) {
      for (Vec2 lam : lam_reps) {
        std::vector<Cell> copy;
        for (const Cell& c : tt.tile.cells) {
          Cell img = apply_to_cell(rep, c);
          img.a += lam.x / G->scale;
          img.b += lam.y / G->scale;
          copy.push_back(img);
        }
        int id = (int)copies.size();
        for (const Cell& c : copy) {
          std::size_t s = slot(c);
          if (res_copy[s] != -1)
            throw std::logic_error("SymmetryScan: copies fail to partition the torus");
          res_copy[s] = id;
          res_cell[s] = c;
        }
        copies.push_back(std::move(copy));
      }
    }
    for (int v : res_copy)
      if (v == -1) throw std::logic_error("SymmetryScan: torus not fully covered");
  }

  // True iff (m, t) maps every tile copy onto a Lambda*-translate of a copy.
  // fixes_copy0: the image of copy 0 is copy 0 itself (up to Lambda*).
  bool test(const Mat2& m, Vec2 t, bool* fixes_copy0 = nullptr) const {
    Isometry g{m, t};
    for (std::size_t ci = 0; ci < copies.size(); ++ci) {
      const std::vector<Cell>& copy = copies[ci];
      Cell q0 = apply_to_cell(g, copy[0]);
      std::size_t s0 = slot(q0);
      int target = res_copy[s0];
      Cell base = res_cell[s0];
      i64 da = q0.a - base.a, db = q0.b - base.b;
      if (!lam_star_cells.contains({da, db})) return false;
      for (std::size_t k = 1; k < copy.size(); ++k) {
        Cell q = apply_to_cell(g, copy[k]);
        std::size_t sk = slot(q);
        if (res_copy[sk] != target) return false;
        const Cell& bk = res_cell[sk];
        if (q.a - bk.a != da || q.b - bk.b != db) return false;
      }
      if (ci == 0 && fixes_copy0) *fixes_copy0 = (target == 0);
    }
    return true;
  }
};

struct CenterMap {
  std::map<std::pair<i64, i64>, int> order_at;  // reduced point -> max order

  void add(Vec2 p, int order) {
    auto key = std::make_pair(p.x, p.y);
    auto it = order_at.find(key);
    if (it == order_at.end())
      order_at[key] = order;
    else
      it->second = std::max(it->second, order);
  }
};

// All rotation centers of the classes in `elems`, reduced mod Lambda*.
inline CenterMap collect_centers(const std::vector<Isometry>& elems, const Lattice2& lam_star) {
  CenterMap cm;
  for (const Isometry& g : elems) {
    if (g.improper() || g.m.is_identity()) continue;
    int order = rotation_order(g.m);
    Mat2 M = mat_sub_from_identity(g.m);
    i64 dt = M.det();
    Mat2 adj = mat_adjugate(M);
    i64 span = dt < 0 ? -dt : dt;
    for (i64 a = 0; a < span; ++a) {
      for (i64 b = 0; b < span; ++b) {
        Vec2 rhs = g.t + a * lam_star.basis1() + b * lam_star.basis2();
        Vec2 num = adj * rhs;
        if (num.x % dt != 0 || num.y % dt != 0) continue;
        cm.add(lam_star.reduce({num.x / dt, num.y / dt}), order);
      }
    }
  }
  return cm;
}

}  // namespace detail

// Exhaustive exact computation of the tiling's full symmetry group G' on the
// torus quotient, with the wallpaper type named from the recognition keys:
// highest rotation order, presence of mirrors, and whether rotation centers
// sit on mirror axes.
inline SymmetryReport full_symmetry_group(const TorusTiling& tt,
                                          const Lattice2* star_cells_hint = nullptr) {
  const WallpaperGroup& G = *tt.group;
  detail::SymmetryScan scan(tt, star_cells_hint);
  const Lattice2& lamS = scan.lam_star;

  std::vector<Isometry> sym;  // one entry per (m, t mod Lambda*) symmetry
  bool stab = false;
  for (const Mat2& m : point_group(G.lattice)) {
    for (i64 i = 0; i < scan.lam_star_cells.a(); ++i) {
      for (i64 j = 0; j < scan.lam_star_cells.c(); ++j) {
        Vec2 t{G.scale * i, G.scale * j};
        bool fixes0 = false;
        if (!scan.test(m, t, &fixes0)) continue;
        sym.push_back({m, t});
        if (fixes0 && !m.is_identity()) stab = true;
      }
    }
  }

  i64 nsym = (i64)sym.size();
  if (nsym % scan.ratio != 0)
    throw std::logic_error("full_symmetry_group: symmetry count not Lambda-periodic");
  i64 cosets_full = nsym / scan.ratio;
  i64 cosets_g = (i64)G.cosets.size();
  if (cosets_full % cosets_g != 0)
    throw std::logic_error("full_symmetry_group: G is not a subgroup of G'");

  SymmetryReport rep;
  rep.index = cosets_full / cosets_g;
  rep.is_fundamental = (rep.index == 1);
  rep.stabilizer_nontrivial = stab;

  // Recognition keys.
  int max_rot = 1;
  bool improper = false;
  std::vector<Isometry> mirrors;
  int glide_only = 0;
  for (const Isometry& g : sym) {
    if (g.improper()) {
      improper = true;
      Mat2 ipm{1 + g.m.a, g.m.b, g.m.c, 1 + g.m.d};
      Vec2 w1 = ipm * lamS.basis1(), w2 = ipm * lamS.basis2();
      if (detail::in_rank1_span(-(ipm * g.t), w1, w2))
        mirrors.push_back(g);
      else
        ++glide_only;
    } else {
      max_rot = std::max(max_rot, rotation_order(g.m));
    }
  }
  rep.has_reflection = !mirrors.empty();

  detail::CenterMap full_centers = detail::collect_centers(sym, lamS);

  auto center_on_mirror = [&](Vec2 p) {
    for (const Isometry& g : mirrors)
      if (lamS.contains(p - g.m * p - g.t)) return true;
    return false;
  };
  auto all_centers_of_order_on_mirrors = [&](int order) {
    for (auto& [key, ord] : full_centers.order_at) {
      if (ord != order) continue;
      if (!center_on_mirror({key.first, key.second})) return false;
    }
    return true;
  };
  auto any_center_of_order_on_mirror = [&](int order) {
    for (auto& [key, ord] : full_centers.order_at)
      if (ord == order && center_on_mirror({key.first, key.second})) return true;
    return false;
  };

  auto mirror_direction_count = [&]() {
    std::set<std::pair<i64, i64>> dirs;
    for (const Isometry& g : mirrors) {
      Mat2 ipm{1 + g.m.a, g.m.b, g.m.c, 1 + g.m.d};
      Vec2 d{ipm.a, ipm.c};
      if (d == Vec2{0, 0}) d = {ipm.b, ipm.d};
      i64 gg = gcd_i64(d.x, d.y);
      d = {d.x / gg, d.y / gg};
      if (d.x < 0 || (d.x == 0 && d.y < 0)) d = -d;
      dirs.insert({d.x, d.y});
    }
    return (int)dirs.size();
  };

  if (max_rot == 6) {
    if (!improper) rep.full_kind = WallpaperType::p6;
    else if (rep.has_reflection) rep.full_kind = WallpaperType::p6m;
    else throw std::logic_error("full_symmetry_group: 6-fold group with glides but no mirrors");
  } else if (max_rot == 4) {
    if (!improper) rep.full_kind = WallpaperType::p4;
    else if (!rep.has_reflection)
      throw std::logic_error("full_symmetry_group: 4-fold group with glides but no mirrors");
    else
      rep.full_kind = any_center_of_order_on_mirror(4) ? WallpaperType::p4m : WallpaperType::p4g;
  } else if (max_rot == 3) {
    if (!improper) rep.full_kind = WallpaperType::p3;
    else if (!rep.has_reflection)
      throw std::logic_error("full_symmetry_group: 3-fold group with glides but no mirrors");
    else
      rep.full_kind = all_centers_of_order_on_mirrors(3) ? WallpaperType::p3m1 : WallpaperType::p31m;
  } else if (max_rot == 2) {
    if (!improper) rep.full_kind = WallpaperType::p2;
    else if (!rep.has_reflection) rep.full_kind = WallpaperType::pgg;
    else if (mirror_direction_count() >= 2)
      rep.full_kind = all_centers_of_order_on_mirrors(2) ? WallpaperType::pmm : WallpaperType::cmm;
    else rep.full_kind = WallpaperType::pmg;
  } else {
    if (!improper) rep.full_kind = WallpaperType::p1;
    else if (!rep.has_reflection) rep.full_kind = WallpaperType::pg;
    else rep.full_kind = glide_only > 0 ? WallpaperType::cm : WallpaperType::pm;
  }

  // Centers of G itself, modulo Lambda*, for the new-center diff.
  std::vector<Isometry> g_elems;
  for (const Isometry& rep_g : G.cosets)
    for (Vec2 lam : scan.lam_reps) g_elems.push_back({rep_g.m, lamS.reduce(rep_g.t + lam)});
  detail::CenterMap g_centers = detail::collect_centers(g_elems, lamS);

  for (auto& [key, ord] : full_centers.order_at) {
    auto it = g_centers.order_at.find(key);
    int prev = (it == g_centers.order_at.end()) ? 0 : it->second;
    if (ord > prev)
      rep.new_centers.push_back({{key.first, key.second}, ord, Center::Paint::Derived});
  }
  std::sort(rep.new_centers.begin(), rep.new_centers.end());
  return rep;
}

struct CountRow {
  GroupKind kind;
  i64 n = 0;
  i64 N = 0;       // inequivalent marked tiles
  i64 S = 0;       // those whose full symmetry group equals G
  i64 Nprime = 0;  // congruence classes of the N tiles, centers ignored
  i64 Sprime = 0;  // congruence classes of the S tiles
};

struct EnumerationRun {
  GroupKind kind;
  i64 n = 0;
  std::vector<GroupParams> params;       // parameter pairs realizing n (in run order)
  std::vector<WallpaperGroup> groups;    // built groups, parallel to params
  std::vector<MarkedTile> tiles;         // merged across params, sorted by signature
  std::vector<int> group_of_tile;        // index into groups (-1 for special kinds)
};

// Enumerates over every parameter pair realizing n and merges duplicates at
// signature level (first run wins). P4M/P6M yield nothing; P3M1 yields the
// marked-only triangle for square n.
inline EnumerationRun enumerate_all(GroupKind kind, i64 n, int workers = 1,
                                    std::optional<GroupParams> params_override = std::nullopt) {
  EnumerationRun run;
  run.kind = kind;
  run.n = n;
  if (kind == GroupKind::P4M || kind == GroupKind::P6M || kind == GroupKind::P3M1) {
    for (MarkedTile& t : special_case_tiles(kind, n)) {
      run.tiles.push_back(std::move(t));
      run.group_of_tile.push_back(-1);
    }
    return run;
  }

  if (params_override) {
    GroupParams p = validate_params(kind, *params_override);
    if (fundamental_area(kind, p) != n)
      throw std::invalid_argument("params override does not realize the requested n");
    run.params = {p};
  } else {
    for (const SizeEntry& e : admissible_sizes(kind, n))
      if (e.n == n) run.params = e.params;
    if (run.params.empty())
      throw std::invalid_argument("n = " + std::to_string(n) + " is not admissible for " +
                                  to_string(kind));
  }

  std::map<TileSignature, std::pair<MarkedTile, int>> merged;
  for (std::size_t pi = 0; pi < run.params.size(); ++pi) {
    run.groups.push_back(build_group(kind, run.params[pi]));
    for (MarkedTile& t : enumerate_tiles(run.groups.back(), workers)) {
      TileSignature sig = signature(t);
      if (!merged.count(sig)) merged.emplace(std::move(sig), std::make_pair(std::move(t), (int)pi));
    }
  }
  for (auto& [sig, entry] : merged) {
    run.tiles.push_back(std::move(entry.first));
    run.group_of_tile.push_back(entry.second);
  }
  return run;
}

struct ClassifiedRun {
  EnumerationRun enumeration;
  std::vector<SymmetryReport> reports;  // parallel to tiles
  CountRow row;
};

inline SymmetryReport marked_only_report() {
  // The unmarked triangle tiling has full group p6m whose fundamental domain
  // is one sixth of the tile, so the tile counts only when marked.
  SymmetryReport rep;
  rep.full_kind = WallpaperType::p6m;
  rep.index = 6;
  rep.is_fundamental = false;
  rep.has_reflection = true;
  rep.stabilizer_nontrivial = true;
  return rep;
}

inline ClassifiedRun classify_all(GroupKind kind, i64 n, int workers = 1,
                                  std::optional<GroupParams> params_override = std::nullopt) {
  ClassifiedRun out;
  out.enumeration = enumerate_all(kind, n, workers, params_override);
  const auto& tiles = out.enumeration.tiles;
  out.reports.resize(tiles.size());

  if (kind == GroupKind::P4M || kind == GroupKind::P6M || kind == GroupKind::P3M1) {
    for (std::size_t i = 0; i < tiles.size(); ++i) out.reports[i] = marked_only_report();
  } else {
    std::vector<Lattice2> star_cells;
    for (const WallpaperGroup& G : out.enumeration.groups)
      star_cells.push_back(detail::point_group_invariant_sublattice(G));
    auto classify_one = [&](std::size_t i) {
      int gi = out.enumeration.group_of_tile[i];
      const WallpaperGroup& G = out.enumeration.groups[gi];
      out.reports[i] = full_symmetry_group(generate_torus_tiling(tiles[i], G), &star_cells[gi]);
    };
    if (workers <= 1 || tiles.size() < 2) {
      for (std::size_t i = 0; i < tiles.size(); ++i) classify_one(i);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
          for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tiles.size()) break;
            classify_one(i);
          }
        });
      for (auto& th : pool) th.join();
    }
  }

  out.row.kind = kind;
  out.row.n = n;
  out.row.N = (i64)tiles.size();
  LatticeKind lat = lattice_of(kind);
  std::set<TileSignature> shapes, fund_shapes;
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    TileSignature sh = shape_signature(tiles[i].cells, lat);
    shapes.insert(sh);
    if (out.reports[i].is_fundamental) {
      out.row.S++;
      fund_shapes.insert(std::move(sh));
    }
  }
  out.row.Nprime = (i64)shapes.size();
  out.row.Sprime = (i64)fund_shapes.size();
  return out;
}

inline CountRow count_row(GroupKind kind, i64 n, int workers = 1) {
  return classify_all(kind, n, workers).row;
}

struct TheoremCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

// Machine checks of the structural claims behind the tables: the p4g square
// tile is the unique non-fundamental p4g output and classifies p4m; every
// p31m tiling keeps the group that generated it; p4m/p6m stay empty; p3m1
// yields only the marked triangle.
inline std::vector<TheoremCheck> assert_theorems(const ClassifiedRun& run) {
  std::vector<TheoremCheck> checks;
  GroupKind kind = run.enumeration.kind;
  const auto& tiles = run.enumeration.tiles;

  if (kind == GroupKind::P4M || kind == GroupKind::P6M) {
    TheoremCheck c{std::string(to_string(kind)) + "_emptiness", tiles.empty(), ""};
    if (!c.passed) c.detail = "expected no tiles, found " + std::to_string(tiles.size());
    checks.push_back(c);
    return checks;
  }
  if (kind == GroupKind::P3M1) {
    i64 k = 0;
    while (k * k < run.enumeration.n) ++k;
    bool square_n = (k * k == run.enumeration.n);
    TheoremCheck c{"p3m1_marked_triangle_only", true, ""};
    if (square_n && (tiles.size() != 1 || !tiles[0].marked_only)) {
      c.passed = false;
      c.detail = "expected exactly one marked-only triangle tile";
    }
    if (!square_n && !tiles.empty()) {
      c.passed = false;
      c.detail = "expected no tiles for non-square n";
    }
    if (run.row.S != 0) {
      c.passed = false;
      c.detail = "marked-only tiles must not count toward S";
    }
    checks.push_back(c);
    return checks;
  }

  if (kind == GroupKind::P4G) {
    i64 x = run.enumeration.params[0].x;
    std::vector<Cell> square_cells;
    for (i64 a = 0; a < x; ++a)
      for (i64 b = 0; b < x; ++b) square_cells.push_back(Cell::square(a, b));
    TileSignature square_shape = shape_signature(square_cells, LatticeKind::Square);

    TheoremCheck c{"p4g_square_tile_exception", true, ""};
    int nonfund = 0;
    for (std::size_t i = 0; i < tiles.size(); ++i) {
      bool is_square = shape_signature(tiles[i].cells, LatticeKind::Square) == square_shape;
      const SymmetryReport& r = run.reports[i];
      if (is_square) {
        ++nonfund;
        if (r.is_fundamental || r.full_kind != WallpaperType::p4m) {
          c.passed = false;
          c.detail = "square tile at index " + std::to_string(i) +
                     " should classify p4m and be non-fundamental";
        }
      } else if (!r.is_fundamental || r.full_kind != WallpaperType::p4g) {
        c.passed = false;
        c.detail = "non-square tile at index " + std::to_string(i) +
                   " should keep full group p4g (got " + to_string(r.full_kind) +
                   ", index " + std::to_string(r.index) + ")";
      }
    }
    if (nonfund != 1) {
      c.passed = false;
      c.detail = "expected exactly one square tile, found " + std::to_string(nonfund);
    }
    checks.push_back(c);
  }

  if (kind == GroupKind::P31M) {
    TheoremCheck c{"p31m_always_fundamental", true, ""};
    for (std::size_t i = 0; i < tiles.size(); ++i) {
      const SymmetryReport& r = run.reports[i];
      if (!r.is_fundamental || r.full_kind != WallpaperType::p31m) {
        c.passed = false;
        c.detail = "tile at index " + std::to_string(i) + " classified " +
                   to_string(r.full_kind) + " with index " + std::to_string(r.index);
        break;
      }
    }
    checks.push_back(c);
  }
  return checks;
}

}  // namespace isotile

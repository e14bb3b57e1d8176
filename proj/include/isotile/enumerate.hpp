#pragma once

#include <atomic>
#include <random>
#include <thread>

#include "isotile/group.hpp"

// Backtracking construction of all n-cell fundamental domains of a built
// group: grow edge-connected sets of pairwise orbit-inequivalent cells from
// the ring around the origin, close a tile when it reaches n cells with the
// white center on its boundary (size alone for the region-constrained
// groups), then dedup completed tiles by congruence + matching rotation
// centers.
//
// Candidates consumed at a node stay excluded from its entire remaining
// subtree, so every admissible cell set is visited exactly once; the
// resulting tile set equals the one reached by re-deriving B'(T) from
// scratch at every step, without the duplicate work.

namespace isotile {

struct Center {
  Vec2 at;   // scaled coordinates
  int order = 0;
  enum class Paint { Primary, Secondary, Derived };
  Paint paint = Paint::Derived;

  friend bool operator==(const Center& p, const Center& q) {
    return p.at == q.at && p.order == q.order;
  }
  friend bool operator<(const Center& p, const Center& q) {
    if (!(p.at == q.at)) return p.at < q.at;
    return p.order < q.order;
  }
};

struct MarkedTile {
  std::vector<Cell> cells;     // sorted by (orient, a, b)
  std::vector<Center> centers; // sorted
  std::vector<std::pair<Vec2, Vec2>> mirror_edges;  // boundary edges on axes
  GroupKind group_kind = GroupKind::P4;
  GroupParams params;
  bool marked_only = false;

  friend bool operator<(const MarkedTile& s, const MarkedTile& t) {
    if (s.cells != t.cells) return s.cells < t.cells;
    return s.centers < t.centers;
  }
};

struct PartialTile {
  std::vector<Cell> cells;
  std::uint64_t used_labels = 0;  // bitmask over orbit ids
  std::vector<Cell> frontier;
};

using TileSignature = std::vector<i64>;

namespace detail {

inline void append_cells_canonical(TileSignature& sig, std::vector<Cell>& cells,
                                   std::vector<Center>* centers, i64 scale) {
  i64 mina = cells[0].a, minb = cells[0].b;
  for (const Cell& c : cells) {
    mina = std::min(mina, c.a);
    minb = std::min(minb, c.b);
  }
  for (Cell& c : cells) {
    c.a -= mina;
    c.b -= minb;
  }
  std::sort(cells.begin(), cells.end());
  for (const Cell& c : cells) {
    sig.push_back(i64(c.orient));
    sig.push_back(c.a);
    sig.push_back(c.b);
  }
  if (centers) {
    for (Center& ct : *centers) {
      ct.at.x -= scale * mina;
      ct.at.y -= scale * minb;
    }
    std::sort(centers->begin(), centers->end());
    sig.push_back(i64(centers->size()));
    for (const Center& ct : *centers) {
      sig.push_back(ct.at.x);
      sig.push_back(ct.at.y);
      sig.push_back(ct.order);
    }
  }
}

inline TileSignature canonical_signature(const std::vector<Cell>& cells,
                                         const std::vector<Center>* centers,
                                         LatticeKind lattice) {
  TileSignature best;
  i64 scale = scale_of(lattice);
  for (const Mat2& m : point_group(lattice)) {
    Isometry g{m, {0, 0}};
    std::vector<Cell> tc;
    tc.reserve(cells.size());
    for (const Cell& c : cells) tc.push_back(apply_to_cell(g, c));
    TileSignature sig;
    if (centers) {
      std::vector<Center> cc = *centers;
      for (Center& ct : cc) ct.at = m * ct.at;
      append_cells_canonical(sig, tc, &cc, scale);
    } else {
      append_cells_canonical(sig, tc, nullptr, scale);
    }
    if (best.empty() || sig < best) best = std::move(sig);
  }
  return best;
}

}  // namespace detail

// Canonical over the full lattice point group (mirrors included) and
// translations; equal iff the tiles are congruent with matching centers.
inline TileSignature signature(const MarkedTile& t) {
  return detail::canonical_signature(t.cells, &t.centers, lattice_of(t.group_kind));
}

// Shape only, centers ignored; used for the N'/S' congruence counts.
inline TileSignature shape_signature(const std::vector<Cell>& cells, LatticeKind lattice) {
  return detail::canonical_signature(cells, nullptr, lattice);
}

// Records every rotation center of G on the boundary of the cell union
// (candidates are vertices and edge midpoints of boundary edges, which is
// where centers of these groups can lie), plus boundary edges on mirrors.
inline MarkedTile attach_centers(std::vector<Cell> cells, const WallpaperGroup& G) {
  MarkedTile t;
  std::sort(cells.begin(), cells.end());
  t.cells = std::move(cells);
  t.group_kind = G.kind;
  t.params = G.params;

  auto bedges = boundary_edges(t.cells);
  std::map<i64, Vec2> points;
  for (auto& [p, q] : bedges) {
    points.emplace(point_key(p), p);
    points.emplace(point_key(q), q);
    Vec2 mid{(p.x + q.x) / 2, (p.y + q.y) / 2};
    points.emplace(point_key(mid), mid);
  }
  for (auto& [k, p] : points) {
    int order = G.max_center_order_at(p);
    if (order < 2) continue;
    Center c{p, order, Center::Paint::Derived};
    switch (G.center_class(p)) {
      case WallpaperGroup::CenterClass::BlackOrbit: c.paint = Center::Paint::Primary; break;
      case WallpaperGroup::CenterClass::WhiteOrbit: c.paint = Center::Paint::Secondary; break;
      default: c.paint = Center::Paint::Derived; break;
    }
    t.centers.push_back(c);
  }
  std::sort(t.centers.begin(), t.centers.end());

  if (G.kind == GroupKind::P4G || G.kind == GroupKind::P31M) {
    for (auto& [p, q] : bedges)
      if (G.segment_on_mirror(p, q)) t.mirror_edges.push_back({p, q});
    std::sort(t.mirror_edges.begin(), t.mirror_edges.end(),
              [](const auto& e, const auto& f) {
                return std::tie(e.first, e.second) < std::tie(f.first, f.second);
              });
  }
  return t;
}

// B'(T): cells edge-adjacent to T, orbit-inequivalent to every cell of T,
// inside the group's region. For empty T: the ring of cells around the
// origin (region-filtered).
inline std::vector<Cell> boundary_candidates(const PartialTile& T, const WallpaperGroup& G) {
  std::vector<Cell> out;
  if (T.cells.empty()) {
    for (const Cell& c : cells_touching_point({0, 0}, G.lattice))
      if (G.in_region(c)) out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
  }
  std::unordered_set<i64> in;
  for (const Cell& c : T.cells) in.insert(cell_key(c));
  std::unordered_set<i64> emitted;
  for (const Cell& c : T.cells) {
    for (const Cell& d : edge_neighbors(c)) {
      i64 k = cell_key(d);
      if (in.count(k) || emitted.count(k)) continue;
      emitted.insert(k);
      if (!G.in_region(d)) continue;
      if (T.used_labels >> G.orbit_id(d) & 1) continue;
      out.push_back(d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// E(T): n cells, and the white center on the boundary. The white condition
// reads "is a vertex of some cell" (the ring around an order >= 3 center is
// never fully inside a one-cell-per-orbit set, so the point cannot be
// interior). P4G/P31M place no white circle; the size and region constraints
// alone complete the tile.
inline bool is_complete(const PartialTile& T, const WallpaperGroup& G) {
  if ((i64)T.cells.size() != G.n) return false;
  if (G.kind == GroupKind::P4G || G.kind == GroupKind::P31M) return true;
  for (const Cell& c : T.cells)
    for (Vec2 v : cell_vertices(c))
      if (v == G.white) return true;
  return false;
}

namespace detail {

struct SearchState {
  std::vector<Cell> tile;
  std::uint64_t used = 0;
  std::vector<Cell> untried;
  std::unordered_set<i64> blocked;
};

class Enumerator {
 public:
  Enumerator(const WallpaperGroup& G, unsigned order_seed)
      : G_(G), order_seed_(order_seed) {}

  // Runs a full search from the initial state (or a resumed snapshot).
  void run(const SearchState& st, std::map<TileSignature, MarkedTile>& out) {
    out_ = &out;
    collect_ = nullptr;
    tile_ = st.tile;
    used_ = st.used;
    untried_ = st.untried;
    blocked_ = st.blocked;
    step(0);
  }

  // Runs only to depth `depth`, emitting resumable states.
  void collect(const SearchState& st, int depth, std::vector<SearchState>& states,
               std::map<TileSignature, MarkedTile>& out) {
    out_ = &out;
    collect_ = &states;
    collect_depth_ = depth;
    tile_ = st.tile;
    used_ = st.used;
    untried_ = st.untried;
    blocked_ = st.blocked;
    step(0);
  }

  // One start state per root cell around the origin; within the k-th state
  // all earlier roots are blocked, so a tile is reached from exactly one
  // root (its least ring cell) and exactly once overall.
  static std::vector<SearchState> initial_states(const WallpaperGroup& G) {
    std::vector<Cell> roots = boundary_candidates(PartialTile{}, G);
    std::vector<SearchState> out;
    std::unordered_set<i64> blocked;
    for (const Cell& r : roots) {
      blocked.insert(cell_key(r));
      SearchState st;
      st.untried = {r};
      st.blocked = blocked;
      out.push_back(std::move(st));
    }
    return out;
  }

 private:
  void record() {
    std::vector<Cell> cells = tile_;
    std::sort(cells.begin(), cells.end());
    if (!is_simply_connected(cells))
      throw std::logic_error("enumerate_tiles: completed tile is not a topological disk");
    MarkedTile t = attach_centers(std::move(cells), G_);
    TileSignature sig = signature(t);
    auto it = out_->find(sig);
    if (it == out_->end())
      out_->emplace(std::move(sig), std::move(t));
    else if (t < it->second)
      it->second = std::move(t);  // keep the least representative
  }

  void step(std::size_t from) {
    std::size_t limit = untried_.size();
    for (std::size_t i = from; i < limit; ++i) {
      Cell e = untried_[i];
      int lbl = G_.orbit_id(e);
      if (used_ >> lbl & 1) continue;  // clashed after e was queued
      tile_.push_back(e);
      used_ |= std::uint64_t(1) << lbl;
      if ((i64)tile_.size() == G_.n) {
        PartialTile T{tile_, used_, {}};
        if (is_complete(T, G_)) record();
      } else {
        std::size_t base = untried_.size();
        std::vector<Cell> fresh;
        for (const Cell& f : edge_neighbors(e)) {
          if (blocked_.count(cell_key(f))) continue;
          if (!G_.in_region(f)) continue;
          if (used_ >> G_.orbit_id(f) & 1) continue;
          fresh.push_back(f);
        }
        std::sort(fresh.begin(), fresh.end());
        if (order_seed_ != 0) {
          std::mt19937 rng(order_seed_ + 0x9e3779b9u * (unsigned)tile_.size());
          std::shuffle(fresh.begin(), fresh.end(), rng);
        }
        for (const Cell& f : fresh) {
          untried_.push_back(f);
          blocked_.insert(cell_key(f));
        }
        if (collect_ && (int)tile_.size() == collect_depth_) {
          SearchState st;
          st.tile = tile_;
          st.used = used_;
          st.untried.assign(untried_.begin() + i + 1, untried_.end());
          st.blocked = blocked_;
          collect_->push_back(std::move(st));
        } else {
          step(i + 1);
        }
        while (untried_.size() > base) {
          blocked_.erase(cell_key(untried_.back()));
          untried_.pop_back();
        }
      }
      tile_.pop_back();
      used_ &= ~(std::uint64_t(1) << lbl);
    }
  }

  const WallpaperGroup& G_;
  unsigned order_seed_;
  std::map<TileSignature, MarkedTile>* out_ = nullptr;
  std::vector<SearchState>* collect_ = nullptr;
  int collect_depth_ = 0;
  std::vector<Cell> tile_;
  std::uint64_t used_ = 0;
  std::vector<Cell> untried_;
  std::unordered_set<i64> blocked_;
};

}  // namespace detail

// The complete duplicate-free tile set for the group, sorted by signature.
// `workers` > 1 splits the search at a fixed depth and merges
// deterministically; the result is identical for any worker count.
// `order_seed` perturbs candidate order (for order-independence tests only).
inline std::vector<MarkedTile> enumerate_tiles(const WallpaperGroup& G, int workers = 1,
                                               unsigned order_seed = 0) {
  if (G.n > 62) throw std::invalid_argument("enumerate_tiles: n too large for label mask");
  std::map<TileSignature, MarkedTile> merged;
  std::vector<detail::SearchState> roots = detail::Enumerator::initial_states(G);

  if (workers <= 1) {
    detail::Enumerator e(G, order_seed);
    for (const auto& st : roots) e.run(st, merged);
  } else {
    int depth = (int)std::min<i64>(2, G.n);
    std::vector<detail::SearchState> states;
    detail::Enumerator seed_pass(G, order_seed);
    for (const auto& st : roots) seed_pass.collect(st, depth, states, merged);

    std::vector<std::map<TileSignature, MarkedTile>> partial(workers);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        detail::Enumerator e(G, order_seed);
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= states.size()) break;
          e.run(states[i], partial[w]);
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& part : partial) {
      for (auto& [sig, tile] : part) {
        auto it = merged.find(sig);
        if (it == merged.end())
          merged.emplace(sig, tile);
        else if (tile < it->second)
          it->second = tile;
      }
    }
  }

  std::vector<MarkedTile> out;
  out.reserve(merged.size());
  for (auto& [sig, tile] : merged) out.push_back(std::move(tile));
  return out;
}

// P4M/P6M admit no tiles at any n. P3M1 admits, for n = k*k only, the single
// equilateral-triangle k^2-iamond bounded by reflection axes; it is a
// fundamental domain only when marked with an asymmetric motif.
inline std::vector<MarkedTile> special_case_tiles(GroupKind kind, i64 n) {
  if (kind == GroupKind::P4M || kind == GroupKind::P6M) return {};
  if (kind != GroupKind::P3M1)
    throw std::invalid_argument("special_case_tiles: only p3m1/p4m/p6m are special-cased");
  i64 k = 0;
  while (k * k < n) ++k;
  if (k * k != n) return {};
  MarkedTile t;
  t.group_kind = GroupKind::P3M1;
  t.params = {k, 0};
  t.marked_only = true;
  for (i64 a = 0; a < k; ++a)
    for (i64 b = 0; a + b < k; ++b) {
      t.cells.push_back(Cell::up(a, b));
      if (a + b < k - 1) t.cells.push_back(Cell::down(a, b));
    }
  std::sort(t.cells.begin(), t.cells.end());
  t.centers = {{{0, 0}, 3, Center::Paint::Primary},
               {{6 * k, 0}, 3, Center::Paint::Secondary},
               {{0, 6 * k}, 3, Center::Paint::Derived}};
  std::sort(t.centers.begin(), t.centers.end());
  return {t};
}

}  // namespace isotile

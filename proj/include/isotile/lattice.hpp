#pragma once

#include <algorithm>
#include <map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "isotile/geom.hpp"

// Cells of the square and triangular lattices, with all point coordinates in
// a scaled integer basis: coordinates in the (u,v) lattice basis multiplied
// by 2 (square) or 6 (triangular). This makes vertices, edge midpoints and
// cell centroids integral, so every point test downstream is exact.
//
//   square cell (a,b):  the unit square with corners (a,b)..(a+1,b+1)
//   Up(a,b):            triangle (a,b),(a+1,b),(a,b+1)
//   Down(a,b):          triangle (a+1,b),(a,b+1),(a+1,b+1)

namespace isotile {

enum class LatticeKind { Square, Triangular };

inline i64 scale_of(LatticeKind k) { return k == LatticeKind::Square ? 2 : 6; }

enum class Orient : std::uint8_t { None = 0, Up = 1, Down = 2 };

struct Cell {
  LatticeKind lattice = LatticeKind::Square;
  i64 a = 0;
  i64 b = 0;
  Orient orient = Orient::None;

  static Cell square(i64 a, i64 b) { return {LatticeKind::Square, a, b, Orient::None}; }
  static Cell up(i64 a, i64 b) { return {LatticeKind::Triangular, a, b, Orient::Up}; }
  static Cell down(i64 a, i64 b) { return {LatticeKind::Triangular, a, b, Orient::Down}; }

  friend bool operator==(const Cell& p, const Cell& q) {
    return p.lattice == q.lattice && p.a == q.a && p.b == q.b && p.orient == q.orient;
  }
  friend bool operator!=(const Cell& p, const Cell& q) { return !(p == q); }
  // Canonical cell ordering: (orient, a, b).
  friend bool operator<(const Cell& p, const Cell& q) {
    if (p.orient != q.orient) return p.orient < q.orient;
    if (p.a != q.a) return p.a < q.a;
    return p.b < q.b;
  }
};

// Dense packing for hash sets; coordinates stay far below 2^20 in practice.
inline i64 cell_key(const Cell& c) {
  return ((c.a + (i64(1) << 20)) << 43) | ((c.b + (i64(1) << 20)) << 22) |
         i64(c.orient);
}

inline i64 point_key(Vec2 p) {
  return ((p.x + (i64(1) << 30)) << 32) ^ (p.y + (i64(1) << 30));
}

// Corner points in counterclockwise order, scaled coordinates.
inline std::vector<Vec2> cell_vertices(const Cell& c) {
  if (c.lattice == LatticeKind::Square) {
    i64 x = 2 * c.a, y = 2 * c.b;
    return {{x, y}, {x + 2, y}, {x + 2, y + 2}, {x, y + 2}};
  }
  i64 x = 6 * c.a, y = 6 * c.b;
  if (c.orient == Orient::Up) return {{x, y}, {x + 6, y}, {x, y + 6}};
  return {{x + 6, y}, {x + 6, y + 6}, {x, y + 6}};
}

// Scaled centroid. Squares: both coordinates odd. Up: == (2,2) mod 6,
// Down: == (4,4) mod 6.
inline Vec2 cell_centroid(const Cell& c) {
  if (c.lattice == LatticeKind::Square) return {2 * c.a + 1, 2 * c.b + 1};
  if (c.orient == Orient::Up) return {6 * c.a + 2, 6 * c.b + 2};
  return {6 * c.a + 4, 6 * c.b + 4};
}

// Recover a cell from its scaled centroid; throws if the point is not a
// centroid of the given lattice.
inline Cell cell_from_centroid(LatticeKind kind, Vec2 q) {
  if (kind == LatticeKind::Square) {
    if (((q.x % 2) + 2) % 2 != 1 || ((q.y % 2) + 2) % 2 != 1)
      throw std::logic_error("cell_from_centroid: not a square-cell centroid");
    return Cell::square((q.x - 1) / 2, (q.y - 1) / 2);
  }
  i64 mx = ((q.x % 6) + 6) % 6, my = ((q.y % 6) + 6) % 6;
  if (mx == 2 && my == 2) return Cell::up((q.x - 2) / 6, (q.y - 2) / 6);
  if (mx == 4 && my == 4) return Cell::down((q.x - 4) / 6, (q.y - 4) / 6);
  throw std::logic_error("cell_from_centroid: not a triangle centroid");
}

inline std::vector<Cell> edge_neighbors(const Cell& c) {
  if (c.lattice == LatticeKind::Square) {
    return {Cell::square(c.a + 1, c.b), Cell::square(c.a - 1, c.b),
            Cell::square(c.a, c.b + 1), Cell::square(c.a, c.b - 1)};
  }
  if (c.orient == Orient::Up) {
    return {Cell::down(c.a, c.b), Cell::down(c.a - 1, c.b), Cell::down(c.a, c.b - 1)};
  }
  return {Cell::up(c.a, c.b), Cell::up(c.a + 1, c.b), Cell::up(c.a, c.b + 1)};
}

// All cells having p as a vertex: 4 squares or 6 triangles.
inline std::vector<Cell> cells_touching_point(Vec2 p, LatticeKind kind) {
  i64 s = scale_of(kind);
  if (p.x % s != 0 || p.y % s != 0)
    throw std::invalid_argument("cells_touching_point: point is not a lattice vertex");
  i64 A = p.x / s, B = p.y / s;
  if (kind == LatticeKind::Square) {
    return {Cell::square(A - 1, B - 1), Cell::square(A - 1, B),
            Cell::square(A, B - 1), Cell::square(A, B)};
  }
  return {Cell::up(A, B),          Cell::up(A - 1, B),
          Cell::up(A, B - 1),      Cell::down(A - 1, B - 1),
          Cell::down(A - 1, B),    Cell::down(A, B - 1)};
}

// Undirected boundary edges (each as a sorted vertex pair): edges used by
// exactly one cell of the set.
inline std::vector<std::pair<Vec2, Vec2>> boundary_edges(const std::vector<Cell>& cells) {
  std::map<std::pair<i64, i64>, std::pair<std::pair<Vec2, Vec2>, int>> edges;
  for (const Cell& c : cells) {
    auto vs = cell_vertices(c);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      Vec2 p = vs[i], q = vs[(i + 1) % vs.size()];
      if (q < p) std::swap(p, q);
      auto key = std::make_pair(point_key(p), point_key(q));
      auto it = edges.find(key);
      if (it == edges.end())
        edges.emplace(key, std::make_pair(std::make_pair(p, q), 1));
      else
        it->second.second++;
    }
  }
  std::vector<std::pair<Vec2, Vec2>> out;
  for (auto& [k, v] : edges)
    if (v.second == 1) out.push_back(v.first);
  return out;
}

inline bool is_edge_connected(const std::vector<Cell>& cells) {
  if (cells.empty()) return false;
  std::unordered_set<i64> in;
  for (const Cell& c : cells) in.insert(cell_key(c));
  std::unordered_set<i64> seen{cell_key(cells[0])};
  std::vector<Cell> stack{cells[0]};
  while (!stack.empty()) {
    Cell c = stack.back();
    stack.pop_back();
    for (const Cell& d : edge_neighbors(c)) {
      i64 k = cell_key(d);
      if (in.count(k) && !seen.count(k)) {
        seen.insert(k);
        stack.push_back(d);
      }
    }
  }
  return seen.size() == cells.size();
}

// Disk test: Euler characteristic V - E + F = 1 on the cell complex plus a
// single boundary cycle with every boundary vertex of degree 2 (a vertex
// where the union pinches has degree 4, which Euler alone cannot see).
inline bool is_simply_connected(const std::vector<Cell>& cells) {
  if (cells.empty()) throw std::invalid_argument("is_simply_connected: empty cell set");
  if (!is_edge_connected(cells))
    throw std::invalid_argument("is_simply_connected: cell set is not edge-connected");

  std::unordered_set<i64> verts;
  std::map<std::pair<i64, i64>, int> edge_count;
  for (const Cell& c : cells) {
    auto vs = cell_vertices(c);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      verts.insert(point_key(vs[i]));
      Vec2 p = vs[i], q = vs[(i + 1) % vs.size()];
      if (q < p) std::swap(p, q);
      edge_count[{point_key(p), point_key(q)}]++;
    }
  }
  i64 V = (i64)verts.size();
  i64 E = (i64)edge_count.size();
  i64 F = (i64)cells.size();
  if (V - E + F != 1) return false;

  auto bedges = boundary_edges(cells);
  std::map<i64, std::vector<int>> incident;  // point_key -> boundary edge idx
  for (int i = 0; i < (int)bedges.size(); ++i) {
    incident[point_key(bedges[i].first)].push_back(i);
    incident[point_key(bedges[i].second)].push_back(i);
  }
  for (auto& [p, es] : incident)
    if (es.size() != 2) return false;

  // Walk the cycle from edge 0; it must cover every boundary edge.
  std::vector<char> used(bedges.size(), 0);
  Vec2 at = bedges[0].second;
  used[0] = 1;
  std::size_t covered = 1;
  while (true) {
    auto& es = incident[point_key(at)];
    int next = -1;
    for (int e : es)
      if (!used[e]) next = e;
    if (next < 0) break;
    used[next] = 1;
    ++covered;
    at = (bedges[next].first == at) ? bedges[next].second : bedges[next].first;
  }
  return covered == bedges.size();
}

// Boundary cycle of a disk-shaped cell set as an ordered CCW vertex loop.
inline std::vector<Vec2> boundary_loop(const std::vector<Cell>& cells) {
  auto bedges = boundary_edges(cells);
  if (bedges.empty()) throw std::logic_error("boundary_loop: no boundary edges");
  std::map<i64, std::vector<std::pair<Vec2, int>>> adj;
  for (int i = 0; i < (int)bedges.size(); ++i) {
    adj[point_key(bedges[i].first)].push_back({bedges[i].second, i});
    adj[point_key(bedges[i].second)].push_back({bedges[i].first, i});
  }
  Vec2 start = bedges[0].first;
  for (auto& e : bedges) {
    if (e.first < start) start = e.first;
    if (e.second < start) start = e.second;
  }
  std::vector<Vec2> loop{start};
  std::vector<char> used(bedges.size(), 0);
  Vec2 at = start;
  while (true) {
    auto& outs = adj[point_key(at)];
    std::pair<Vec2, int> pick{{0, 0}, -1};
    for (auto& [to, idx] : outs) {
      if (used[idx]) continue;
      if (pick.second < 0 || to < pick.first) pick = {to, idx};
    }
    if (pick.second < 0) break;
    used[pick.second] = 1;
    at = pick.first;
    if (at == start) break;
    loop.push_back(at);
  }
  // Orient counterclockwise in lattice coordinates (the map to Cartesian
  // preserves orientation for both lattices).
  i64 area2 = 0;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    Vec2 p = loop[i], q = loop[(i + 1) % loop.size()];
    area2 += p.x * q.y - q.x * p.y;
  }
  if (area2 < 0) std::reverse(loop.begin() + 1, loop.end());
  return loop;
}

}  // namespace isotile

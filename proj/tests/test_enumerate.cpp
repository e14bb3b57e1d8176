#include <catch2/catch.hpp>

#include <set>

#include "isotile/classify.hpp"
#include "oracle.hpp"

using namespace isotile;

namespace {

std::map<std::pair<GroupKind, i64>, i64> expected_counts = {
    {{GroupKind::P4, 1}, 1},  {{GroupKind::P4, 2}, 1},  {{GroupKind::P4, 4}, 3},
    {{GroupKind::P4, 5}, 12}, {{GroupKind::P4G, 1}, 1}, {{GroupKind::P4G, 4}, 3},
    {{GroupKind::P4G, 9}, 26}, {{GroupKind::P3, 2}, 1}, {{GroupKind::P3, 6}, 4},
    {{GroupKind::P6, 1}, 1},  {{GroupKind::P6, 3}, 1},  {{GroupKind::P6, 4}, 3},
    {{GroupKind::P6, 7}, 20}, {{GroupKind::P31M, 3}, 1}};

WallpaperGroup group_for(GroupKind kind, i64 n) {
  for (const SizeEntry& e : admissible_sizes(kind, n))
    if (e.n == n) return build_group(kind, e.params[0]);
  throw std::runtime_error("no params");
}

}  // namespace

TEST_CASE("boundary_candidates of the empty tile is the origin ring") {
  WallpaperGroup p4 = build_group(GroupKind::P4, {1, 3});
  auto ring = boundary_candidates(PartialTile{}, p4);
  CHECK(ring.size() == 4);

  WallpaperGroup p3 = build_group(GroupKind::P3, {2, 1});
  CHECK(boundary_candidates(PartialTile{}, p3).size() == 6);
}

TEST_CASE("boundary_candidates is empty once every orbit is used") {
  WallpaperGroup G = build_group(GroupKind::P4, {1, 1});  // n = 1
  PartialTile T;
  T.cells = {Cell::square(0, 0)};
  T.used_labels = std::uint64_t(1) << G.orbit_id(Cell::square(0, 0));
  CHECK(boundary_candidates(T, G).empty());
}

TEST_CASE("boundary_candidates filters used orbits and keeps adjacency") {
  WallpaperGroup G = build_group(GroupKind::P4, {2, 0});  // n = 2
  PartialTile T;
  T.cells = {Cell::square(0, 0)};
  T.used_labels = std::uint64_t(1) << G.orbit_id(Cell::square(0, 0));
  auto cands = boundary_candidates(T, G);
  for (const Cell& c : cands) {
    CHECK(G.orbit_id(c) != G.orbit_id(Cell::square(0, 0)));
    auto nb = edge_neighbors(c);
    CHECK(std::find(nb.begin(), nb.end(), Cell::square(0, 0)) != nb.end());
  }
  CHECK(cands.size() == 2);  // (1,0) and (0,1)
}

TEST_CASE("is_complete for the unit square of p4 (1,1)") {
  WallpaperGroup G = build_group(GroupKind::P4, {1, 1});
  PartialTile T;
  T.cells = {Cell::square(0, 0)};
  CHECK(is_complete(T, G));
  T.cells = {Cell::square(-1, 0)};  // white (1,1) not on its boundary
  CHECK_FALSE(is_complete(T, G));
}

TEST_CASE("is_complete gates on size") {
  WallpaperGroup G = build_group(GroupKind::P4, {1, 3});
  PartialTile T;
  T.cells = {Cell::square(0, 0), Cell::square(1, 0)};
  CHECK_FALSE(is_complete(T, G));
}

TEST_CASE("is_complete for the p3 (1,0) rhombus on the black-white edge") {
  WallpaperGroup G = build_group(GroupKind::P3, {1, 0});
  // the two triangles sharing the edge from the origin to u
  PartialTile T;
  T.cells = {Cell::up(0, 0), Cell::down(0, -1)};
  CHECK(is_complete(T, G));
}

TEST_CASE("enumerate_tiles reproduces the small counts") {
  for (auto& [key, want] : expected_counts) {
    auto [kind, n] = key;
    EnumerationRun run = enumerate_all(kind, n);
    INFO(to_string(kind) << " n=" << n);
    CHECK((i64)run.tiles.size() == want);
  }
}

TEST_CASE("every output tile has n cells in n distinct orbits, disk-shaped") {
  for (auto [kind, n] : std::vector<std::pair<GroupKind, i64>>{
           {GroupKind::P4, 5}, {GroupKind::P4G, 9}, {GroupKind::P3, 6}, {GroupKind::P6, 7},
           {GroupKind::P31M, 3}}) {
    WallpaperGroup G = group_for(kind, n);
    for (const MarkedTile& t : enumerate_tiles(G)) {
      CHECK((i64)t.cells.size() == G.n);
      std::set<int> labels;
      for (const Cell& c : t.cells) labels.insert(G.orbit_id(c));
      CHECK((i64)labels.size() == G.n);
      CHECK(is_simply_connected(t.cells));
    }
  }
}

TEST_CASE("oracle equivalence on small sizes") {
  for (auto [kind, n] : std::vector<std::pair<GroupKind, i64>>{
           {GroupKind::P4, 4}, {GroupKind::P4, 5}, {GroupKind::P3, 6}, {GroupKind::P6, 4},
           {GroupKind::P4G, 4}, {GroupKind::P31M, 3}}) {
    WallpaperGroup G = group_for(kind, n);
    auto got = oracle::signature_set(enumerate_tiles(G));
    auto want = oracle::signature_set(oracle::reference_tiles(G));
    INFO(to_string(kind) << " n=" << n);
    CHECK(got == want);
  }
}

TEST_CASE("candidate order does not change the tile set") {
  for (unsigned seed : {1u, 2u, 3u}) {
    WallpaperGroup G = build_group(GroupKind::P4, {3, 1});
    CHECK(oracle::signature_set(enumerate_tiles(G, 1, seed)) ==
          oracle::signature_set(enumerate_tiles(G)));
    WallpaperGroup H = build_group(GroupKind::P3, {1, 1});
    CHECK(oracle::signature_set(enumerate_tiles(H, 1, seed)) ==
          oracle::signature_set(enumerate_tiles(H)));
  }
}

TEST_CASE("worker count does not change the output at all") {
  for (auto [kind, n] : std::vector<std::pair<GroupKind, i64>>{
           {GroupKind::P4, 1}, {GroupKind::P4, 8}, {GroupKind::P3, 6}, {GroupKind::P4G, 9}}) {
    WallpaperGroup G = group_for(kind, n);
    auto one = enumerate_tiles(G, 1);
    auto four = enumerate_tiles(G, 4);
    REQUIRE(one.size() == four.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
      CHECK(one[i].cells == four[i].cells);
      CHECK(one[i].centers == four[i].centers);
    }
  }
}

TEST_CASE("attach_centers on the p4 (1,1) unit square") {
  WallpaperGroup G = build_group(GroupKind::P4, {1, 1});
  MarkedTile t = attach_centers({Cell::square(0, 0)}, G);
  REQUIRE(t.centers.size() == 4);
  std::map<std::pair<i64, i64>, int> got;
  for (const Center& c : t.centers) got[{c.at.x, c.at.y}] = c.order;
  CHECK(got == std::map<std::pair<i64, i64>, int>{
                   {{0, 0}, 4}, {{2, 2}, 4}, {{2, 0}, 2}, {{0, 2}, 2}});
}

TEST_CASE("attach_centers on the p6 (1,0) unit triangle") {
  WallpaperGroup G = build_group(GroupKind::P6, {1, 0});
  MarkedTile t = attach_centers({Cell::up(0, 0)}, G);
  std::map<std::pair<i64, i64>, int> got;
  for (const Center& c : t.centers) got[{c.at.x, c.at.y}] = c.order;
  CHECK(got == std::map<std::pair<i64, i64>, int>{
                   {{0, 0}, 6}, {{6, 0}, 3}, {{0, 6}, 3}, {{3, 3}, 2}});
}

TEST_CASE("the p3 (1,0) rhombus carries four 3-fold corners") {
  WallpaperGroup G = build_group(GroupKind::P3, {1, 0});
  auto tiles = enumerate_tiles(G);
  REQUIRE(tiles.size() == 1);
  REQUIRE(tiles[0].centers.size() == 4);
  for (const Center& c : tiles[0].centers) CHECK(c.order == 3);
}

TEST_CASE("signature treats mirror images with mirrored centers as equal") {
  WallpaperGroup G = build_group(GroupKind::P4, {3, 1});
  auto tiles = enumerate_tiles(G);
  Mat2 mirror = base_mirror(LatticeKind::Square);
  for (const MarkedTile& t : tiles) {
    MarkedTile m = t;
    Isometry g{mirror, {0, 0}};
    for (Cell& c : m.cells) c = apply_to_cell(g, c);
    std::sort(m.cells.begin(), m.cells.end());
    for (Center& c : m.centers) c.at = mirror * c.at;
    std::sort(m.centers.begin(), m.centers.end());
    CHECK(signature(m) == signature(t));
  }
}

TEST_CASE("congruent tiles with different center placements stay distinct") {
  // p4 n=5 has N=12 but only N'=8 shapes: some shape classes repeat with
  // different markings, and those must not collapse under signature.
  EnumerationRun run = enumerate_all(GroupKind::P4, 5);
  std::set<TileSignature> sigs, shapes;
  for (const MarkedTile& t : run.tiles) {
    sigs.insert(signature(t));
    shapes.insert(shape_signature(t.cells, LatticeKind::Square));
  }
  CHECK(sigs.size() == 12);
  CHECK(shapes.size() == 8);
}

TEST_CASE("no two outputs share a signature") {
  for (auto [kind, n] : std::vector<std::pair<GroupKind, i64>>{
           {GroupKind::P4, 8}, {GroupKind::P3, 8}, {GroupKind::P6, 7}}) {
    WallpaperGroup G = group_for(kind, n);
    auto tiles = enumerate_tiles(G);
    std::set<TileSignature> sigs;
    for (const MarkedTile& t : tiles) sigs.insert(signature(t));
    CHECK(sigs.size() == tiles.size());
  }
}

TEST_CASE("special cases: p4m and p6m are empty, p3m1 has the marked triangle") {
  for (i64 n = 1; n <= 16; ++n) {
    CHECK(special_case_tiles(GroupKind::P4M, n).empty());
    CHECK(special_case_tiles(GroupKind::P6M, n).empty());
  }
  auto one = special_case_tiles(GroupKind::P3M1, 4);
  REQUIRE(one.size() == 1);
  CHECK(one[0].marked_only);
  CHECK(one[0].cells.size() == 4);
  CHECK(is_simply_connected(one[0].cells));
  REQUIRE(one[0].centers.size() == 3);
  for (const Center& c : one[0].centers) CHECK(c.order == 3);
  CHECK(special_case_tiles(GroupKind::P3M1, 5).empty());
  CHECK(special_case_tiles(GroupKind::P3M1, 9).size() == 1);
}

TEST_CASE("p4g tiles stay inside the region bounded by the mirror axes") {
  WallpaperGroup G = build_group(GroupKind::P4G, {3, 0});
  for (const MarkedTile& t : enumerate_tiles(G))
    for (const Cell& c : t.cells) CHECK(G.in_region(c));
}

TEST_CASE("tiles carry the black center on their boundary") {
  WallpaperGroup G = build_group(GroupKind::P6, {2, 1});
  for (const MarkedTile& t : enumerate_tiles(G)) {
    bool found = false;
    for (const Center& c : t.centers)
      if (c.at == Vec2{0, 0} || G.center_class(c.at) == WallpaperGroup::CenterClass::BlackOrbit)
        found = true;
    CHECK(found);
  }
}

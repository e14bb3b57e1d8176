#include <catch2/catch.hpp>

#include "isotile/io.hpp"

using namespace isotile;

namespace {

int count_occurrences(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size()))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("unit square renders as one closed path with four markers") {
  WallpaperGroup G = build_group(GroupKind::P4, {1, 1});
  MarkedTile t = attach_centers({Cell::square(0, 0)}, G);
  RenderStyle style;
  std::string svg = render_tile_svg(t, style);
  CHECK(count_occurrences(svg, "<path") == 1);
  CHECK(count_occurrences(svg, "Z\"") == 1);
  CHECK(count_occurrences(svg, "<circle") == 4);
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("the p3 rhombus renders with four order-3 markers") {
  WallpaperGroup G = build_group(GroupKind::P3, {1, 0});
  auto tiles = enumerate_tiles(G);
  REQUIRE(tiles.size() == 1);
  std::string svg = render_tile_svg(tiles[0], RenderStyle{});
  CHECK(count_occurrences(svg, "<circle") == 4);
  // rhombus outline: 4 corners
  CHECK(count_occurrences(svg, "L") >= 3);
}

TEST_CASE("rendering is byte-identical across calls") {
  WallpaperGroup G = build_group(GroupKind::P6, {2, 1});
  auto tiles = enumerate_tiles(G);
  RenderStyle style;
  CHECK(render_tile_svg(tiles[3], style) == render_tile_svg(tiles[3], style));
  TorusTiling tt = generate_torus_tiling(tiles[3], G);
  SymmetryReport rep = full_symmetry_group(tt);
  CHECK(render_tiling_svg(tt, style, &rep) == render_tiling_svg(tt, style, &rep));
}

TEST_CASE("tiling patch draws one polygon per copy per Lambda-cell") {
  WallpaperGroup G = build_group(GroupKind::P4, {1, 1});
  auto tiles = enumerate_tiles(G);
  TorusTiling tt = generate_torus_tiling(tiles[0], G);
  RenderStyle style;
  style.patch_radius = 2;
  style.show_centers = false;
  std::string svg = render_tiling_svg(tt, style);
  CHECK(count_occurrences(svg, "<path") == 2 * 2 * 4);  // radius^2 x |cosets|
}

TEST_CASE("style invariants are enforced") {
  WallpaperGroup G = build_group(GroupKind::P4, {1, 1});
  MarkedTile t = attach_centers({Cell::square(0, 0)}, G);
  RenderStyle bad;
  bad.cell_px = 2;
  CHECK_THROWS_AS(render_tile_svg(t, bad), std::invalid_argument);
  RenderStyle bad2;
  bad2.patch_radius = 0;
  CHECK_THROWS_AS(render_tiling_svg(generate_torus_tiling(t, G), bad2), std::invalid_argument);
}

TEST_CASE("emit_tables csv layout and ordering") {
  std::vector<CountRow> rows = {{GroupKind::P4, 5, 12, 9, 8, 7},
                                {GroupKind::P4, 1, 1, 0, 1, 0},
                                {GroupKind::P3, 2, 1, 0, 1, 0}};
  std::string csv = emit_tables(rows, "csv");
  CHECK(csv ==
        "group,n,N,S,Nprime,Sprime\n"
        "p3,2,1,0,1,0\n"
        "p4,1,1,0,1,0\n"
        "p4,5,12,9,8,7\n");
}

TEST_CASE("tables round-trip through csv and json") {
  std::vector<CountRow> rows = {{GroupKind::P3, 2, 1, 0, 1, 0},
                                {GroupKind::P4, 5, 12, 9, 8, 7},
                                {GroupKind::P6, 7, 20, 19, 16, 16}};
  for (const std::string& fmt : {std::string("csv"), std::string("json")}) {
    auto parsed = parse_tables(emit_tables(rows, fmt), fmt);
    REQUIRE(parsed.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(parsed[i].kind == rows[i].kind);
      CHECK(parsed[i].n == rows[i].n);
      CHECK(parsed[i].N == rows[i].N);
      CHECK(parsed[i].S == rows[i].S);
      CHECK(parsed[i].Nprime == rows[i].Nprime);
      CHECK(parsed[i].Sprime == rows[i].Sprime);
    }
  }
}

TEST_CASE("emit_tables rejects empty input and bad formats") {
  CHECK_THROWS_AS(emit_tables({}, "csv"), std::invalid_argument);
  CHECK_THROWS_AS(emit_tables({{GroupKind::P4, 1, 1, 0, 1, 0}}, "xml"), std::invalid_argument);
}

TEST_CASE("tile json carries the exchange-format fields in order") {
  WallpaperGroup G = build_group(GroupKind::P4, {1, 3});
  auto tiles = enumerate_tiles(G);
  ojson j = tile_to_json(tiles[0]);
  CHECK(j["group"] == "p4");
  CHECK(j["params"] == ojson({3, 1}));
  CHECK(j["n"] == 5);
  CHECK(j["scale"] == 2);
  CHECK(j["cells"].size() == 5);
  std::string dumped = j.dump();
  CHECK(dumped.find("\"group\"") < dumped.find("\"params\""));
  CHECK(dumped.find("\"params\"") < dumped.find("\"n\""));
  CHECK(dumped.find("\"cells\"") < dumped.find("\"centers\""));

  WallpaperGroup T = build_group(GroupKind::P3, {1, 0});
  ojson jt = tile_to_json(enumerate_tiles(T)[0]);
  CHECK(jt["scale"] == 6);
  for (const auto& cell : jt["cells"]) {
    REQUIRE(cell.size() == 3);
    std::string o = cell[2];
    CHECK((o == "U" || o == "D"));
  }
}

TEST_CASE("mirror edges show up for the region-constrained groups") {
  WallpaperGroup G = build_group(GroupKind::P4G, {1, 0});
  auto tiles = enumerate_tiles(G);
  REQUIRE(tiles.size() == 1);
  CHECK(!tiles[0].mirror_edges.empty());
  std::string svg = render_tile_svg(tiles[0], RenderStyle{});
  CHECK(svg.find("<line") != std::string::npos);
}

#pragma once

#include <cmath>
#include <cstdio>
#include <sstream>

#include "isotile/classify.hpp"

// Deterministic SVG rendering of tiles and tiling patches, and table
// emission. Cartesian conversion happens only here: square basis (1,0),(0,1);
// triangular basis (1,0),(1/2, sqrt(3)/2).

namespace isotile {

struct RenderStyle {
  int cell_px = 28;
  std::vector<std::string> palette = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2",
                                      "#59a14f", "#edc948", "#b07aa1", "#9c755f"};
  bool show_centers = true;
  bool show_axes = true;
  int patch_radius = 2;
};

inline void validate_style(const RenderStyle& s) {
  if (s.cell_px < 4) throw std::invalid_argument("RenderStyle: cell_px must be >= 4");
  if (s.patch_radius < 1) throw std::invalid_argument("RenderStyle: patch_radius must be >= 1");
  if (s.palette.empty()) throw std::invalid_argument("RenderStyle: palette must be nonempty");
}

namespace detail {

struct Canvas {
  LatticeKind lattice;
  double px;
  double minx = 1e300, miny = 1e300, maxx = -1e300, maxy = -1e300;
  double margin;

  Canvas(LatticeKind k, int cell_px) : lattice(k), px(cell_px), margin(cell_px * 0.6) {}

  std::pair<double, double> cart(Vec2 p) const {
    if (lattice == LatticeKind::Square) return {p.x / 2.0, p.y / 2.0};
    return {(p.x + p.y * 0.5) / 6.0, (p.y * 0.8660254037844386) / 6.0};
  }
  void note(Vec2 p) {
    auto [x, y] = cart(p);
    minx = std::min(minx, x);
    miny = std::min(miny, y);
    maxx = std::max(maxx, x);
    maxy = std::max(maxy, y);
  }
  std::pair<double, double> place(Vec2 p) const {
    auto [x, y] = cart(p);
    return {margin + (x - minx) * px, margin + (maxy - y) * px};
  }
  double width() const { return (maxx - minx) * px + 2 * margin; }
  double height() const { return (maxy - miny) * px + 2 * margin; }
};

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  // avoid the "-0.00" artifact
  if (std::string(buf) == "-0.00") return "0.00";
  return buf;
}

inline std::string path_of(const std::vector<Vec2>& loop, const Canvas& cv) {
  std::string d;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    auto [x, y] = cv.place(loop[i]);
    d += (i == 0 ? "M" : "L");
    d += fmt(x) + " " + fmt(y) + " ";
  }
  d += "Z";
  return d;
}

inline void marker(std::ostringstream& svg, const Canvas& cv, Vec2 at, int order,
                   Center::Paint paint) {
  auto [x, y] = cv.place(at);
  double r = cv.px * (0.06 + 0.02 * order);
  std::string body;
  switch (paint) {
    case Center::Paint::Primary:
      body = "fill=\"#000000\"";
      break;
    case Center::Paint::Secondary:
      body = "fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"" + fmt(cv.px * 0.05) + "\"";
      break;
    case Center::Paint::Derived:
      r = cv.px * (0.04 + 0.015 * order);
      body = "fill=\"#7f7f7f\"";
      break;
  }
  svg << "  <circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"" << fmt(r)
      << "\" " << body << "/>\n";
}

inline std::string svg_open(const Canvas& cv) {
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(cv.width())
    << "\" height=\"" << fmt(cv.height()) << "\" viewBox=\"0 0 " << fmt(cv.width()) << " "
    << fmt(cv.height()) << "\">\n";
  return s.str();
}

}  // namespace detail

// One closed outline of the cell union plus center markers; byte-identical
// across runs for fixed input and style.
inline std::string render_tile_svg(const MarkedTile& t, const RenderStyle& style) {
  validate_style(style);
  LatticeKind lat = lattice_of(t.group_kind);
  detail::Canvas cv(lat, style.cell_px);
  std::vector<Vec2> loop = boundary_loop(t.cells);
  for (Vec2 p : loop) cv.note(p);
  if (style.show_centers)
    for (const Center& c : t.centers) cv.note(c.at);

  std::ostringstream svg;
  svg << detail::svg_open(cv);
  svg << "  <path d=\"" << detail::path_of(loop, cv)
      << "\" fill=\"#dce6f1\" stroke=\"#1f1f1f\" stroke-width=\""
      << detail::fmt(style.cell_px * 0.08) << "\" stroke-linejoin=\"round\"/>\n";
  if (style.show_axes) {
    for (auto& [p, q] : t.mirror_edges) {
      auto [x1, y1] = cv.place(p);
      auto [x2, y2] = cv.place(q);
      svg << "  <line x1=\"" << detail::fmt(x1) << "\" y1=\"" << detail::fmt(y1)
          << "\" x2=\"" << detail::fmt(x2) << "\" y2=\"" << detail::fmt(y2)
          << "\" stroke=\"#c23b22\" stroke-width=\"" << detail::fmt(style.cell_px * 0.12)
          << "\" stroke-linecap=\"round\"/>\n";
    }
  }
  if (style.show_centers)
    for (const Center& c : t.centers) detail::marker(svg, cv, c.at, c.order, c.paint);
  svg << "</svg>\n";
  return svg.str();
}

// A patch of patch_radius^2 Lambda-cells of tile copies, each copy outlined
// and filled by coset id; optional overlay of the report's new centers.
inline std::string render_tiling_svg(const TorusTiling& tt, const RenderStyle& style,
                                     const SymmetryReport* overlay = nullptr) {
  validate_style(style);
  const WallpaperGroup& G = *tt.group;
  detail::Canvas cv(G.lattice, style.cell_px);

  struct CopyDraw {
    std::vector<Vec2> loop;
    std::vector<Center> centers;
    int coset;
  };
  std::vector<CopyDraw> draws;
  for (i64 i = 0; i < style.patch_radius; ++i) {
    for (i64 j = 0; j < style.patch_radius; ++j) {
      Vec2 off = i * G.lambda.basis1() + j * G.lambda.basis2();
      for (std::size_t ci = 0; ci < G.cosets.size(); ++ci) {
        const Isometry& rep = G.cosets[ci];
        std::vector<Cell> cells;
        for (const Cell& c : tt.tile.cells) {
          Cell img = apply_to_cell(rep, c);
          img.a += off.x / G.scale;
          img.b += off.y / G.scale;
          cells.push_back(img);
        }
        std::sort(cells.begin(), cells.end());
        CopyDraw cd;
        cd.loop = boundary_loop(cells);
        cd.coset = (int)ci;
        for (const Center& c : tt.tile.centers)
          cd.centers.push_back({rep.apply(c.at) + off, c.order, c.paint});
        for (Vec2 p : cd.loop) cv.note(p);
        draws.push_back(std::move(cd));
      }
    }
  }

  std::ostringstream svg;
  svg << detail::svg_open(cv);
  for (const CopyDraw& cd : draws) {
    svg << "  <path d=\"" << detail::path_of(cd.loop, cv) << "\" fill=\""
        << style.palette[cd.coset % style.palette.size()]
        << "\" fill-opacity=\"0.55\" stroke=\"#1f1f1f\" stroke-width=\""
        << detail::fmt(style.cell_px * 0.06) << "\" stroke-linejoin=\"round\"/>\n";
  }
  if (style.show_centers)
    for (const CopyDraw& cd : draws)
      for (const Center& c : cd.centers) detail::marker(svg, cv, c.at, c.order, c.paint);
  if (overlay && style.show_centers) {
    for (i64 i = 0; i < style.patch_radius; ++i)
      for (i64 j = 0; j < style.patch_radius; ++j) {
        Vec2 off = i * G.lambda.basis1() + j * G.lambda.basis2();
        for (const Center& c : overlay->new_centers) {
          auto [x, y] = cv.place(c.at + off);
          double r = style.cell_px * 0.07;
          svg << "  <circle cx=\"" << detail::fmt(x) << "\" cy=\"" << detail::fmt(y)
              << "\" r=\"" << detail::fmt(r) << "\" fill=\"none\" stroke=\"#c23b22\""
              << " stroke-width=\"" << detail::fmt(style.cell_px * 0.04) << "\"/>\n";
        }
      }
  }
  svg << "</svg>\n";
  return svg.str();
}

inline int group_sort_key(GroupKind k) { return (int)k; }

// CSV ("group,n,N,S,Nprime,Sprime") or JSON; rows ordered by group then n.
inline std::string emit_tables(std::vector<CountRow> rows, const std::string& format) {
  if (rows.empty()) throw std::invalid_argument("emit_tables: no rows");
  std::sort(rows.begin(), rows.end(), [](const CountRow& a, const CountRow& b) {
    if (a.kind != b.kind) return group_sort_key(a.kind) < group_sort_key(b.kind);
    return a.n < b.n;
  });
  if (format == "csv") {
    std::string out = "group,n,N,S,Nprime,Sprime\n";
    for (const CountRow& r : rows) {
      out += std::string(to_string(r.kind)) + "," + std::to_string(r.n) + "," +
             std::to_string(r.N) + "," + std::to_string(r.S) + "," +
             std::to_string(r.Nprime) + "," + std::to_string(r.Sprime) + "\n";
    }
    return out;
  }
  if (format == "json") {
    std::string out = "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const CountRow& r = rows[i];
      out += std::string("  {\"group\":\"") + to_string(r.kind) +
             "\",\"n\":" + std::to_string(r.n) + ",\"N\":" + std::to_string(r.N) +
             ",\"S\":" + std::to_string(r.S) + ",\"Nprime\":" + std::to_string(r.Nprime) +
             ",\"Sprime\":" + std::to_string(r.Sprime) + "}";
      out += (i + 1 < rows.size()) ? ",\n" : "\n";
    }
    out += "]\n";
    return out;
  }
  throw std::invalid_argument("emit_tables: format must be csv or json");
}

}  // namespace isotile

#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "isotile/io.hpp"

// Pipeline driver behind the command-line tool: enumerate -> classify ->
// count/render, with reproducible file outputs. Kept header-side so tests can
// drive the exact code path the binary uses.

namespace isotile {

struct RunConfig {
  enum class Command { Sizes, Enumerate, Classify, Table, Render };
  Command command = Command::Sizes;
  GroupKind group = GroupKind::P4;
  std::optional<i64> n;
  i64 max_n = 0;
  std::optional<GroupParams> params_override;
  std::string out_dir;  // empty: $ISOTILE_OUT, else "out"
  std::string format = "csv";
  bool svg = false;
  RenderStyle style;
  int workers = 1;
};

namespace detail {

inline std::filesystem::path resolve_out_dir(const RunConfig& cfg) {
  if (!cfg.out_dir.empty()) return cfg.out_dir;
  if (const char* env = std::getenv("ISOTILE_OUT"); env && *env) return env;
  return "out";
}

inline void write_file(const std::filesystem::path& p, const std::string& bytes) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file " + p.string());
  f << bytes;
}

inline std::string index_name(std::size_t i) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "%03zu", i + 1);
  return buf;
}

inline const char* emptiness_note(GroupKind kind) {
  switch (kind) {
    case GroupKind::P4M:
      return "p4m admits no isohedral tilings with a polyomino fundamental domain "
             "(the tile edges would have to lie on reflection axes); tile set is empty.";
    case GroupKind::P6M:
      return "p6m admits no isohedral tilings with a polyiamond fundamental domain "
             "(the tile edges would have to lie on reflection axes); tile set is empty.";
    case GroupKind::P3M1:
      return "p3m1 admits only the triangle-shaped k^2-iamond bounded by reflection "
             "axes, and only as a marked tile (the unmarked tiling has full group p6m).";
    default:
      return "";
  }
}

inline i64 require_n(const RunConfig& cfg) {
  if (!cfg.n) throw std::invalid_argument("this command requires --n");
  return *cfg.n;
}

}  // namespace detail

inline int run(const RunConfig& cfg, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  try {
    if (cfg.workers < 1) throw std::invalid_argument("--workers must be >= 1");
    std::filesystem::path dir = detail::resolve_out_dir(cfg);

    switch (cfg.command) {
      case RunConfig::Command::Sizes: {
        if (cfg.max_n < 1) throw std::invalid_argument("sizes requires --max-n >= 1");
        for (const SizeEntry& e : admissible_sizes(cfg.group, cfg.max_n))
          for (const GroupParams& p : e.params)
            out << e.n << " (" << p.x << "," << p.y << ")"
                << (e.marked_only ? " [marked-only]" : "") << "\n";
        return 0;
      }

      case RunConfig::Command::Enumerate: {
        i64 n = detail::require_n(cfg);
        EnumerationRun run = enumerate_all(cfg.group, n, cfg.workers, cfg.params_override);
        std::filesystem::create_directories(dir);
        ojson arr = ojson::array();
        for (const MarkedTile& t : run.tiles) arr.push_back(tile_to_json(t));
        std::string name = std::string("tiles_") + to_string(cfg.group) + "_" +
                           std::to_string(n) + ".json";
        detail::write_file(dir / name, arr.dump(2) + "\n");
        if (const char* note = detail::emptiness_note(cfg.group); *note) out << note << "\n";
        out << "wrote " << run.tiles.size() << " tiles to " << (dir / name).string() << "\n";
        if (cfg.svg) {
          for (std::size_t i = 0; i < run.tiles.size(); ++i) {
            std::string sname = std::string("tile_") + to_string(cfg.group) + "_" +
                                std::to_string(n) + "_" + detail::index_name(i) + ".svg";
            detail::write_file(dir / sname, render_tile_svg(run.tiles[i], cfg.style));
          }
        }
        return 0;
      }

      case RunConfig::Command::Classify: {
        i64 n = detail::require_n(cfg);
        ClassifiedRun run = classify_all(cfg.group, n, cfg.workers, cfg.params_override);
        std::filesystem::create_directories(dir);
        ojson arr = ojson::array();
        for (std::size_t i = 0; i < run.enumeration.tiles.size(); ++i) {
          ojson e;
          e["tile"] = tile_to_json(run.enumeration.tiles[i]);
          e["report"] = report_to_json(run.reports[i]);
          arr.push_back(std::move(e));
        }
        std::string name = std::string("classify_") + to_string(cfg.group) + "_" +
                           std::to_string(n) + ".json";
        detail::write_file(dir / name, arr.dump(2) + "\n");
        out << "classified " << run.enumeration.tiles.size() << " tiles; N=" << run.row.N
            << " S=" << run.row.S << " N'=" << run.row.Nprime << " S'=" << run.row.Sprime
            << "\n";
        for (const TheoremCheck& c : assert_theorems(run)) {
          if (!c.passed) {
            err << "structural check failed: " << c.name << ": " << c.detail << "\n";
            return 2;
          }
          out << "check " << c.name << ": ok\n";
        }
        return 0;
      }

      case RunConfig::Command::Table: {
        if (cfg.max_n < 1) throw std::invalid_argument("table requires --max-n >= 1");
        std::vector<CountRow> rows;
        if (cfg.group == GroupKind::P4M || cfg.group == GroupKind::P6M) {
          for (i64 n = 1; n <= cfg.max_n; ++n)
            rows.push_back({cfg.group, n, 0, 0, 0, 0});
        } else {
          for (const SizeEntry& e : admissible_sizes(cfg.group, cfg.max_n))
            rows.push_back(count_row(cfg.group, e.n, cfg.workers));
        }
        std::string text = emit_tables(rows, cfg.format);
        std::filesystem::create_directories(dir);
        std::string name = std::string("table_") + to_string(cfg.group) + "." + cfg.format;
        detail::write_file(dir / name, text);
        out << text;
        return 0;
      }

      case RunConfig::Command::Render: {
        i64 n = detail::require_n(cfg);
        ClassifiedRun run = classify_all(cfg.group, n, cfg.workers, cfg.params_override);
        std::filesystem::create_directories(dir);
        for (std::size_t i = 0; i < run.enumeration.tiles.size(); ++i) {
          const MarkedTile& t = run.enumeration.tiles[i];
          std::string base = std::string(to_string(cfg.group)) + "_" + std::to_string(n) +
                             "_" + detail::index_name(i);
          detail::write_file(dir / ("tile_" + base + ".svg"), render_tile_svg(t, cfg.style));
          int gi = run.enumeration.group_of_tile[i];
          if (gi >= 0) {
            TorusTiling tt = generate_torus_tiling(t, run.enumeration.groups[gi]);
            detail::write_file(dir / ("tiling_" + base + ".svg"),
                               render_tiling_svg(tt, cfg.style, &run.reports[i]));
          }
        }
        if (const char* note = detail::emptiness_note(cfg.group); *note) out << note << "\n";
        out << "rendered " << run.enumeration.tiles.size() << " tiles to " << dir.string()
            << "\n";
        return 0;
      }
    }
    return 0;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace isotile

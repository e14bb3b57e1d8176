// isotile: enumerate polyomino / polyiamond fundamental domains of isohedral
// tilings with 3-, 4- or 6-fold rotational symmetry, classify the resulting
// tilings, emit counting tables and render SVG.

#include <CLI11.hpp>

#include "isotile/cli.hpp"

namespace {

isotile::GroupKind parse_group_or_die(const std::string& s) {
  auto k = isotile::parse_group_kind(s);
  if (!k)
    throw CLI::ValidationError("--group", "unknown group '" + s +
                                              "' (expected one of p3, p31m, p3m1, p4, "
                                              "p4g, p4m, p6, p6m)");
  return *k;
}

isotile::GroupParams parse_params_or_die(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError("--params", "expected x,y");
  try {
    return {std::stoll(s.substr(0, comma)), std::stoll(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--params", "expected integers x,y");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"isohedral tiling fundamental-domain enumerator"};
  app.require_subcommand(1);

  std::string group_str, params_str, out_dir, format = "csv";
  long long n = 0, max_n = 0;
  int workers = 1, cell_px = 28, patch_radius = 2;
  bool svg = false, no_centers = false, no_axes = false;

  auto add_common = [&](CLI::App* cmd, bool needs_n, bool needs_max) {
    cmd->add_option("--group", group_str, "group kind (p3, p31m, p3m1, p4, p4g, p4m, p6, p6m)")
        ->required();
    if (needs_n) cmd->add_option("--n", n, "tile size in cells");
    if (needs_max) cmd->add_option("--max-n", max_n, "largest tile size");
    cmd->add_option("--params", params_str, "pin one parameter pair x,y");
    cmd->add_option("--out", out_dir, "output directory (default $ISOTILE_OUT or ./out)");
    cmd->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
    return cmd;
  };

  CLI::App* sizes = add_common(app.add_subcommand("sizes", "list admissible n with parameters"),
                               false, true);
  CLI::App* enumerate =
      add_common(app.add_subcommand("enumerate", "write the tile set as JSON"), true, false);
  enumerate->add_flag("--svg", svg, "also render each tile to SVG");
  CLI::App* classify = add_common(
      app.add_subcommand("classify", "write per-tile symmetry reports as JSON"), true, false);
  CLI::App* table =
      add_common(app.add_subcommand("table", "write counting rows (N, S, N', S')"), false, true);
  table->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  CLI::App* render =
      add_common(app.add_subcommand("render", "render tiles and tilings to SVG"), true, false);
  render->add_option("--patch-radius", patch_radius, "Lambda-cells per patch side")
      ->check(CLI::PositiveNumber);
  render->add_option("--cell-px", cell_px, "pixels per lattice unit");
  render->add_flag("--no-centers", no_centers, "omit rotation-center markers");
  render->add_flag("--no-axes", no_axes, "omit mirror-axis overlays");

  CLI11_PARSE(app, argc, argv);

  isotile::RunConfig cfg;
  try {
    cfg.group = parse_group_or_die(group_str);
    if (!params_str.empty()) cfg.params_override = parse_params_or_die(params_str);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  }
  if (n > 0) cfg.n = n;
  cfg.max_n = max_n;
  cfg.out_dir = out_dir;
  cfg.format = format;
  cfg.svg = svg;
  cfg.workers = workers;
  cfg.style.cell_px = cell_px;
  cfg.style.patch_radius = patch_radius;
  cfg.style.show_centers = !no_centers;
  cfg.style.show_axes = !no_axes;

  if (sizes->parsed()) cfg.command = isotile::RunConfig::Command::Sizes;
  if (enumerate->parsed()) cfg.command = isotile::RunConfig::Command::Enumerate;
  if (classify->parsed()) cfg.command = isotile::RunConfig::Command::Classify;
  if (table->parsed()) cfg.command = isotile::RunConfig::Command::Table;
  if (render->parsed()) cfg.command = isotile::RunConfig::Command::Render;

  return isotile::run(cfg);
}

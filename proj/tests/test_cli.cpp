#include <catch2/catch.hpp>
#include <fstream>
#include <sstream>

#include "isotile/cli.hpp"

using namespace isotile;

namespace {

std::filesystem::path fresh_dir(const std::string& tag) {
  auto p = std::filesystem::temp_directory_path() / ("isotile_test_" + tag);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int run_quiet(const RunConfig& cfg, std::string* out_text = nullptr) {
  std::ostringstream out, err;
  int rc = run(cfg, out, err);
  if (out_text) *out_text = out.str();
  return rc;
}

}  // namespace

TEST_CASE("sizes lists admissible n with parameters") {
  RunConfig cfg;
  cfg.command = RunConfig::Command::Sizes;
  cfg.group = GroupKind::P3;
  cfg.max_n = 98;
  std::string text;
  REQUIRE(run_quiet(cfg, &text) == 0);
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (!l.empty()) lines.push_back(l);
  REQUIRE(lines.size() >= 2);
  CHECK(lines[lines.size() - 2] == "98 (5,3)");
  CHECK(lines.back() == "98 (7,0)");
}

TEST_CASE("sizes marks the p3m1 entries as marked-only") {
  RunConfig cfg;
  cfg.command = RunConfig::Command::Sizes;
  cfg.group = GroupKind::P3M1;
  cfg.max_n = 9;
  std::string text;
  REQUIRE(run_quiet(cfg, &text) == 0);
  CHECK(text.find("1 (1,0) [marked-only]") != std::string::npos);
  CHECK(text.find("9 (3,0) [marked-only]") != std::string::npos);
}

TEST_CASE("enumerate p4m writes an empty tile file and succeeds") {
  auto dir = fresh_dir("p4m");
  RunConfig cfg;
  cfg.command = RunConfig::Command::Enumerate;
  cfg.group = GroupKind::P4M;
  cfg.n = 4;
  cfg.out_dir = dir.string();
  std::string text;
  REQUIRE(run_quiet(cfg, &text) == 0);
  CHECK(text.find("p4m admits no isohedral tilings") != std::string::npos);
  CHECK(slurp(dir / "tiles_p4m_4.json") == "[]\n");
}

TEST_CASE("enumerate p4 n=5 writes twelve tiles") {
  auto dir = fresh_dir("p4n5");
  RunConfig cfg;
  cfg.command = RunConfig::Command::Enumerate;
  cfg.group = GroupKind::P4;
  cfg.n = 5;
  cfg.out_dir = dir.string();
  REQUIRE(run_quiet(cfg) == 0);
  ojson j = ojson::parse(slurp(dir / "tiles_p4_5.json"));
  CHECK(j.size() == 12);
}

TEST_CASE("invalid inputs exit nonzero with a diagnostic") {
  RunConfig cfg;
  cfg.command = RunConfig::Command::Enumerate;
  cfg.group = GroupKind::P4;
  cfg.n = 3;  // not admissible
  std::ostringstream out, err;
  CHECK(run(cfg, out, err) == 1);
  CHECK(err.str().find("not admissible") != std::string::npos);

  RunConfig bad;
  bad.command = RunConfig::Command::Table;
  bad.group = GroupKind::P4;
  bad.max_n = 0;
  std::ostringstream out2, err2;
  CHECK(run(bad, out2, err2) == 1);
  CHECK(!err2.str().empty());
}

TEST_CASE("table p4 through n=5 matches the published block") {
  auto dir = fresh_dir("table_p4");
  RunConfig cfg;
  cfg.command = RunConfig::Command::Table;
  cfg.group = GroupKind::P4;
  cfg.max_n = 5;
  cfg.out_dir = dir.string();
  REQUIRE(run_quiet(cfg) == 0);
  CHECK(slurp(dir / "table_p4.csv") ==
        "group,n,N,S,Nprime,Sprime\n"
        "p4,1,1,0,1,0\n"
        "p4,2,1,0,1,0\n"
        "p4,4,3,2,3,2\n"
        "p4,5,12,9,8,7\n");
}

TEST_CASE("table output is byte-identical across runs and worker counts") {
  auto dir1 = fresh_dir("det1");
  auto dir2 = fresh_dir("det2");
  auto dir4 = fresh_dir("det4");
  for (auto& [dir, workers] : std::vector<std::pair<std::filesystem::path, int>>{
           {dir1, 1}, {dir2, 1}, {dir4, 4}}) {
    RunConfig cfg;
    cfg.command = RunConfig::Command::Table;
    cfg.group = GroupKind::P4;
    cfg.max_n = 5;
    cfg.out_dir = dir.string();
    cfg.workers = workers;
    REQUIRE(run_quiet(cfg) == 0);
  }
  CHECK(slurp(dir1 / "table_p4.csv") == slurp(dir2 / "table_p4.csv"));
  CHECK(slurp(dir1 / "table_p4.csv") == slurp(dir4 / "table_p4.csv"));
}

TEST_CASE("enumerate output is byte-identical across runs and worker counts") {
  auto dir1 = fresh_dir("edet1");
  auto dir2 = fresh_dir("edet2");
  auto dir4 = fresh_dir("edet4");
  for (auto& [dir, workers] : std::vector<std::pair<std::filesystem::path, int>>{
           {dir1, 1}, {dir2, 1}, {dir4, 4}}) {
    RunConfig cfg;
    cfg.command = RunConfig::Command::Enumerate;
    cfg.group = GroupKind::P3;
    cfg.n = 6;
    cfg.out_dir = dir.string();
    cfg.workers = workers;
    REQUIRE(run_quiet(cfg) == 0);
  }
  CHECK(slurp(dir1 / "tiles_p3_6.json") == slurp(dir2 / "tiles_p3_6.json"));
  CHECK(slurp(dir1 / "tiles_p3_6.json") == slurp(dir4 / "tiles_p3_6.json"));
}

TEST_CASE("render writes tile and tiling files deterministically") {
  auto dir1 = fresh_dir("r1");
  auto dir2 = fresh_dir("r2");
  for (auto& dir : {dir1, dir2}) {
    RunConfig cfg;
    cfg.command = RunConfig::Command::Render;
    cfg.group = GroupKind::P4;
    cfg.n = 4;
    cfg.out_dir = dir.string();
    REQUIRE(run_quiet(cfg) == 0);
  }
  for (const char* name : {"tile_p4_4_001.svg", "tile_p4_4_003.svg", "tiling_p4_4_002.svg"}) {
    CHECK(slurp(dir1 / name) == slurp(dir2 / name));
    CHECK(slurp(dir1 / name).find("<svg") == 0);
  }
}

TEST_CASE("classify writes reports and passes the structural checks") {
  auto dir = fresh_dir("cls");
  RunConfig cfg;
  cfg.command = RunConfig::Command::Classify;
  cfg.group = GroupKind::P4G;
  cfg.n = 4;
  cfg.out_dir = dir.string();
  std::string text;
  REQUIRE(run_quiet(cfg, &text) == 0);
  CHECK(text.find("check p4g_square_tile_exception: ok") != std::string::npos);
  ojson j = ojson::parse(slurp(dir / "classify_p4g_4.json"));
  REQUIRE(j.size() == 3);
  int fundamental = 0;
  for (const auto& e : j)
    if (e["report"]["is_fundamental"].get<bool>()) ++fundamental;
  CHECK(fundamental == 2);
}

TEST_CASE("ISOTILE_OUT supplies the default output directory") {
  auto dir = fresh_dir("envout");
  setenv("ISOTILE_OUT", dir.string().c_str(), 1);
  RunConfig cfg;
  cfg.command = RunConfig::Command::Enumerate;
  cfg.group = GroupKind::P4;
  cfg.n = 2;
  REQUIRE(run_quiet(cfg) == 0);
  unsetenv("ISOTILE_OUT");
  CHECK(std::filesystem::exists(dir / "tiles_p4_2.json"));
}

TEST_CASE("params override is honored") {
  auto dir = fresh_dir("ovr");
  RunConfig cfg;
  cfg.command = RunConfig::Command::Enumerate;
  cfg.group = GroupKind::P4;
  cfg.n = 5;
  cfg.params_override = GroupParams{3, 1};
  cfg.out_dir = dir.string();
  REQUIRE(run_quiet(cfg) == 0);
  ojson j = ojson::parse(slurp(dir / "tiles_p4_5.json"));
  CHECK(j.size() == 12);
}

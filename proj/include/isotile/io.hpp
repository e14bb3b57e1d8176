#pragma once

#include <json.hpp>

#include "isotile/report.hpp"

// JSON serialization of tiles, symmetry reports, and count tables. Field
// order is stable (ordered_json) and all numbers are integers, so files are
// byte-reproducible.

namespace isotile {

using ojson = nlohmann::ordered_json;

// { "group": "p4", "params": [1,3], "n": 5,
//   "cells": [[a,b] or [a,b,"U"/"D"]...],
//   "centers": [{"at":[px,py],"order":4}...], "scale": 2|6 }
inline ojson tile_to_json(const MarkedTile& t) {
  ojson j;
  j["group"] = to_string(t.group_kind);
  j["params"] = {t.params.x, t.params.y};
  j["n"] = (i64)t.cells.size();
  ojson cells = ojson::array();
  for (const Cell& c : t.cells) {
    if (c.lattice == LatticeKind::Square)
      cells.push_back({c.a, c.b});
    else
      cells.push_back({c.a, c.b, c.orient == Orient::Up ? "U" : "D"});
  }
  j["cells"] = std::move(cells);
  ojson centers = ojson::array();
  for (const Center& c : t.centers) {
    ojson e;
    e["at"] = {c.at.x, c.at.y};
    e["order"] = c.order;
    centers.push_back(std::move(e));
  }
  j["centers"] = std::move(centers);
  if (t.marked_only) j["marked_only"] = true;
  j["scale"] = scale_of(lattice_of(t.group_kind));
  return j;
}

inline ojson report_to_json(const SymmetryReport& r) {
  ojson j;
  j["full_kind"] = to_string(r.full_kind);
  j["index"] = r.index;
  j["is_fundamental"] = r.is_fundamental;
  j["has_reflection"] = r.has_reflection;
  ojson centers = ojson::array();
  for (const Center& c : r.new_centers) {
    ojson e;
    e["at"] = {c.at.x, c.at.y};
    e["order"] = c.order;
    centers.push_back(std::move(e));
  }
  j["new_centers"] = std::move(centers);
  return j;
}

inline std::vector<CountRow> parse_tables(const std::string& text, const std::string& format) {
  std::vector<CountRow> rows;
  auto kind_of = [](const std::string& s) {
    auto k = parse_group_kind(s);
    if (!k) throw std::invalid_argument("parse_tables: unknown group " + s);
    return *k;
  };
  if (format == "csv") {
    std::istringstream in(text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      if (header) {
        if (line != "group,n,N,S,Nprime,Sprime")
          throw std::invalid_argument("parse_tables: bad csv header");
        header = false;
        continue;
      }
      std::istringstream ls(line);
      std::string field;
      std::vector<std::string> fields;
      while (std::getline(ls, field, ',')) fields.push_back(field);
      if (fields.size() != 6) throw std::invalid_argument("parse_tables: bad csv row");
      CountRow r;
      r.kind = kind_of(fields[0]);
      r.n = std::stoll(fields[1]);
      r.N = std::stoll(fields[2]);
      r.S = std::stoll(fields[3]);
      r.Nprime = std::stoll(fields[4]);
      r.Sprime = std::stoll(fields[5]);
      rows.push_back(r);
    }
    return rows;
  }
  if (format == "json") {
    ojson j = ojson::parse(text);
    for (const auto& e : j) {
      CountRow r;
      r.kind = kind_of(e.at("group").get<std::string>());
      r.n = e.at("n").get<i64>();
      r.N = e.at("N").get<i64>();
      r.S = e.at("S").get<i64>();
      r.Nprime = e.at("Nprime").get<i64>();
      r.Sprime = e.at("Sprime").get<i64>();
      rows.push_back(r);
    }
    return rows;
  }
  throw std::invalid_argument("parse_tables: format must be csv or json");
}

}  // namespace isotile

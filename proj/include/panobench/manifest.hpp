// Copyright 2026 The panobench authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "panobench/dataset.hpp"
#include "panobench/errors.hpp"

namespace panobench {

inline constexpr int kManifestSchemaVersion = 1;
inline constexpr const char* kManifestHeader =
    "id,path,mos,mos2,reference_path,distortion,split";

/// One dataset row: image path relative to the manifest root plus ratings.
struct ManifestRow {
  std::string id;
  std::string path;
  double mos = 0.0;
  std::optional<double> mos2;
  std::string reference_path;
  std::string distortion;
  std::optional<Split> split;
};

struct DatasetManifest {
  std::string name;
  std::filesystem::path root;
  std::vector<ManifestRow> rows;
  int schema_version = kManifestSchemaVersion;

  std::filesystem::path resolve(const std::string& relative) const { return root / relative; }
};

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line, int line_no) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      if (!cur.empty())
        throw DataError("manifest line " + std::to_string(line_no) +
                        ": stray quote inside unquoted field");
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted)
    throw DataError("manifest line " + std::to_string(line_no) + ": unterminated quote");
  fields.push_back(cur);
  return fields;
}

inline double parse_finite(const std::string& s, int line_no, const char* what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw DataError("manifest line " + std::to_string(line_no) + ": " + what +
                    " is not a number: '" + s + "'");
  }
  if (used != s.size() || !std::isfinite(v))
    throw DataError("manifest line " + std::to_string(line_no) + ": " + what +
                    " is not a finite number: '" + s + "'");
  return v;
}

}  // namespace detail

/// Loads and validates a CSV manifest. Errors carry the 1-based line number.
/// Image paths must resolve under the manifest directory at load time.
inline DatasetManifest load_manifest(const std::string& path, bool check_files = true) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open manifest: " + path);

  DatasetManifest manifest;
  manifest.root = std::filesystem::path(path).parent_path();
  manifest.name = std::filesystem::path(path).stem().string();

  std::string line;
  int line_no = 0;
  bool header_seen = false;
  std::unordered_set<std::string> ids;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      // optional pragmas: "# panobench-manifest v<N>" and "# name: <db name>"
      const auto pos = line.find(" v");
      if (line.find("panobench-manifest") != std::string::npos && pos != std::string::npos) {
        const int v = std::atoi(line.c_str() + pos + 2);
        if (v != kManifestSchemaVersion)
          throw DataError("manifest line " + std::to_string(line_no) +
                          ": unsupported schema version " + std::to_string(v));
      }
      const auto name_pos = line.find("name:");
      if (name_pos != std::string::npos) {
        std::string name = line.substr(name_pos + 5);
        while (!name.empty() && name.front() == ' ') name.erase(name.begin());
        while (!name.empty() && name.back() == ' ') name.pop_back();
        if (!name.empty()) manifest.name = name;
      }
      continue;
    }
    if (!header_seen) {
      if (line != kManifestHeader)
        throw DataError("manifest line " + std::to_string(line_no) +
                        ": expected header '" + kManifestHeader + "'");
      header_seen = true;
      continue;
    }

    const std::vector<std::string> f = detail::split_csv_line(line, line_no);
    if (f.size() != 7)
      throw DataError("manifest line " + std::to_string(line_no) + ": expected 7 fields, got " +
                      std::to_string(f.size()));

    ManifestRow row;
    row.id = f[0];
    row.path = f[1];
    if (row.id.empty())
      throw DataError("manifest line " + std::to_string(line_no) + ": empty id");
    if (!ids.insert(row.id).second)
      throw DataError("manifest line " + std::to_string(line_no) + ": duplicate id '" +
                      row.id + "'");
    if (row.path.empty())
      throw DataError("manifest line " + std::to_string(line_no) + ": empty path");
    row.mos = detail::parse_finite(f[2], line_no, "mos");
    if (!f[3].empty()) row.mos2 = detail::parse_finite(f[3], line_no, "mos2");
    row.reference_path = f[4];
    row.distortion = f[5];
    if (f[6] == "train")
      row.split = Split::Train;
    else if (f[6] == "test")
      row.split = Split::Test;
    else if (!f[6].empty())
      throw DataError("manifest line " + std::to_string(line_no) +
                      ": split must be 'train', 'test' or empty, got '" + f[6] + "'");

    if (check_files) {
      if (!std::filesystem::exists(manifest.resolve(row.path)))
        throw DataError("manifest line " + std::to_string(line_no) + ": image file missing: " +
                        manifest.resolve(row.path).string());
      if (!row.reference_path.empty() &&
          !std::filesystem::exists(manifest.resolve(row.reference_path)))
        throw DataError("manifest line " + std::to_string(line_no) +
                        ": reference file missing: " +
                        manifest.resolve(row.reference_path).string());
    }
    manifest.rows.push_back(std::move(row));
  }
  if (!header_seen) throw DataError("manifest " + path + ": missing header row");
  return manifest;
}

/// Shortest decimal form that parses back to the same double.
inline std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline std::string manifest_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline void save_manifest(const DatasetManifest& manifest, const std::string& path) {
  std::ostringstream out;
  out << "# panobench-manifest v" << kManifestSchemaVersion << "\n";
  if (!manifest.name.empty()) out << "# name: " << manifest.name << "\n";
  out << kManifestHeader << "\n";
  for (const ManifestRow& r : manifest.rows) {
    out << manifest_field(r.id) << ',' << manifest_field(r.path) << ','
        << format_double(r.mos) << ',';
    if (r.mos2) out << format_double(*r.mos2);
    out << ',' << manifest_field(r.reference_path) << ',' << manifest_field(r.distortion)
        << ',';
    if (r.split) out << (*r.split == Split::Train ? "train" : "test");
    out << '\n';
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DataError("cannot write manifest: " + path);
  f << out.str();
}

/// Converts manifest rows into quality records, averaging dual ratings.
inline std::vector<QualityRecord> records_from_manifest(const DatasetManifest& m) {
  std::vector<QualityRecord> records;
  records.reserve(m.rows.size());
  for (const ManifestRow& row : m.rows) {
    QualityRecord rec;
    rec.image_id = row.id;
    rec.mos = row.mos;
    rec.mos2 = row.mos2;
    rec.database = m.name;
    rec.distortion_tag = row.distortion;
    rec.split = row.split;
    if (rec.mos2) rec = merge_dual_mos(std::move(rec));
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace panobench

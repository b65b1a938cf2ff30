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

#include <filesystem>
#include <string>
#include <vector>

#include "panobench/distortion.hpp"
#include "panobench/image_io.hpp"
#include "panobench/manifest.hpp"
#include "panobench/parallel.hpp"

namespace panobench {

/// Synthesizes a whole database to disk: one PNG per record under
/// <out_dir>/<type>/<scope>/ plus pristine originals and a manifest.csv.
/// Byte-identical for identical (sources, plan, seed) at any thread count.
inline DatasetManifest write_database(const std::vector<ErpImage>& sources,
                                      const DatabasePlan& plan, std::uint64_t seed,
                                      const std::string& name, const std::string& out_dir,
                                      int threads = 1) {
  std::vector<std::string> ids;
  ids.reserve(sources.size());
  for (const ErpImage& s : sources) {
    validate_erp(s);
    ids.push_back(s.id);
  }
  const SyntheticDatabase db = build_database(ids, plan, seed, name);

  const std::filesystem::path root(out_dir);
  std::filesystem::create_directories(root);
  for (const DatabaseRecord& rec : db.records)
    std::filesystem::create_directories((root / rec.relative_path).parent_path());

  auto source_of = [&](const std::string& id) -> const ErpImage& {
    for (std::size_t i = 0; i < sources.size(); ++i)
      if (sources[i].id == id) return sources[i];
    throw ConfigError("unknown source id '" + id + "'");
  };

  parallel_for(db.records.size(), threads, [&](std::size_t i) {
    const DatabaseRecord& rec = db.records[i];
    const ErpImage img = synthesize_record(source_of(rec.source_id), rec);
    save_png(img, (root / rec.relative_path).string());
  });

  DatasetManifest manifest;
  manifest.name = name;
  manifest.root = root;
  for (const DatabaseRecord& rec : db.records) {
    ManifestRow row;
    row.id = rec.id;
    row.path = rec.relative_path;
    row.mos = rec.mos;
    row.reference_path = "pristine/" + rec.source_id + ".png";
    row.distortion = distortion_tag(rec);
    manifest.rows.push_back(std::move(row));
  }
  save_manifest(manifest, (root / "manifest.csv").string());
  return manifest;
}

}  // namespace panobench

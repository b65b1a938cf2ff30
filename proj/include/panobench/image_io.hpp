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

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include "panobench/errors.hpp"
#include "panobench/image.hpp"

namespace panobench {

/// Decodes a PNG or JPEG file into an 8-bit RGB equirectangular raster.
/// Non 2:1 rasters are rejected unless allow_any_aspect is set.
inline ErpImage load_erp(const std::string& path, bool allow_any_aspect = false) {
  cv::Mat bgr = cv::imread(path, cv::IMREAD_COLOR);
  if (bgr.empty()) throw DataError("cannot decode image file: " + path);
  ErpImage img;
  img.width = bgr.cols;
  img.height = bgr.rows;
  img.id = std::filesystem::path(path).stem().string();
  img.data.resize(img.pixel_count() * kChannels);
  for (int r = 0; r < bgr.rows; ++r) {
    const cv::Vec3b* row = bgr.ptr<cv::Vec3b>(r);
    std::uint8_t* out = img.data.data() + static_cast<std::size_t>(r) * bgr.cols * kChannels;
    for (int c = 0; c < bgr.cols; ++c) {
      out[c * 3 + 0] = row[c][2];
      out[c * 3 + 1] = row[c][1];
      out[c * 3 + 2] = row[c][0];
    }
  }
  validate_erp(img, allow_any_aspect);
  return img;
}

inline void save_png(const ErpImage& img, const std::string& path) {
  cv::Mat bgr(img.height, img.width, CV_8UC3);
  for (int r = 0; r < img.height; ++r) {
    cv::Vec3b* row = bgr.ptr<cv::Vec3b>(r);
    const std::uint8_t* in = img.data.data() + static_cast<std::size_t>(r) * img.width * kChannels;
    for (int c = 0; c < img.width; ++c) {
      row[c][0] = in[c * 3 + 2];
      row[c][1] = in[c * 3 + 1];
      row[c][2] = in[c * 3 + 0];
    }
  }
  if (!cv::imwrite(path, bgr)) throw DataError("cannot write png: " + path);
}

/// Quantizes viewport samples to 8 bit: round to nearest, clamp to [0, 255].
inline std::vector<std::uint8_t> quantize_viewport(const Viewport& vp) {
  std::vector<std::uint8_t> out(vp.data.size());
  for (std::size_t i = 0; i < vp.data.size(); ++i)
    out[i] = static_cast<std::uint8_t>(std::clamp(std::lround(vp.data[i]), 0L, 255L));
  return out;
}

inline void save_viewport_png(const Viewport& vp, const std::string& path) {
  cv::Mat bgr(vp.height, vp.width, CV_8UC3);
  const std::vector<std::uint8_t> q = quantize_viewport(vp);
  for (int r = 0; r < vp.height; ++r) {
    cv::Vec3b* row = bgr.ptr<cv::Vec3b>(r);
    const std::uint8_t* in = q.data() + static_cast<std::size_t>(r) * vp.width * kChannels;
    for (int c = 0; c < vp.width; ++c) {
      row[c][0] = in[c * 3 + 2];
      row[c][1] = in[c * 3 + 1];
      row[c][2] = in[c * 3 + 0];
    }
  }
  if (!cv::imwrite(path, bgr)) throw DataError("cannot write png: " + path);
}

}  // namespace panobench

#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "autostereo/errors.hpp"

namespace astereo {

// Single-channel raster with values in [0,1], row-major. The shared carrier
// for depth maps, textures, stereograms and watermark carriers.
struct GrayImage {
  int height = 0;
  int width = 0;
  std::vector<float> data;

  GrayImage() = default;
  GrayImage(int h, int w, float fill = 0.0f);

  // Clamps every value into [0,1].
  static GrayImage from_values(int h, int w, std::vector<float> values);

  float& at(int i, int j) { return data[static_cast<size_t>(i) * width + j]; }
  float at(int i, int j) const { return data[static_cast<size_t>(i) * width + j]; }

  size_t size() const { return data.size(); }
  bool same_shape(const GrayImage& o) const { return height == o.height && width == o.width; }

  void clamp01() {
    for (float& v : data) v = std::clamp(v, 0.0f, 1.0f);
  }
};

enum class ResizeMode { nearest, bilinear };

GrayImage resize(const GrayImage& img, int h, int w, ResizeMode mode);

GrayImage flip_horizontal(const GrayImage& img);
GrayImage crop(const GrayImage& img, int top, int left, int h, int w);

// Bilinear rotation about the image center; out-of-range samples take `fill`.
// Used for small-angle scene rotation in the data pipeline.
GrayImage rotate(const GrayImage& img, double degrees, float fill);

// min-max renormalization to [0,1]; a constant image maps to all 0.5.
GrayImage normalize_minmax(const GrayImage& img);

GrayImage invert(const GrayImage& img);  // v -> 1-v (white-is-near depth maps)

}  // namespace astereo

#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "pstab/bq/bq_decide.hpp"
#include "pstab/bq/markoff.hpp"

namespace pstab::bq {

enum class RootChoice { SmallerAbs, LargerAbs };

std::string_view to_string(RootChoice r) noexcept;

// A complex line in a commutator level set: x is fixed, z ranges over the
// window, y is the chosen root of the level-set quadratic.
struct SliceConfig {
  Complex kappa{-2.0, 0.0};
  Complex fixed_x{3.0, 0.0};
  Complex window_min{0.0, -3.0};  // lower-left corner
  Complex window_max{6.0, 3.0};   // upper-right corner
  int width = 64;
  int height = 64;
  RootChoice root = RootChoice::SmallerAbs;
  std::int64_t budget = 20000;
  int small_trace_bound = 64;
};

struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> rgb;  // row-major, top row first

  // Binary PPM: "P6\n{W} {H}\n255\n" then the RGB triples.
  std::vector<std::uint8_t> to_ppm() const;
};

// z at the center of pixel (col, row); row 0 is the top (largest Im z).
Complex pixel_z(const SliceConfig& cfg, int col, int row);

Complex choose_root(const QuadraticRoots& roots, RootChoice choice) noexcept;

// Fixed palette:
//   BQ_CERTIFIED   -> (v, v, v), v = 255 - min(191, nodes / 32)
//   NOT_BQ_WITNESS -> (min(255, 64 + 16 * witnesses), 0, 0)
//   INCONCLUSIVE   -> (0, 0, 96)
std::array<std::uint8_t, 3> palette(const BqVerdict& v) noexcept;

BqVerdict slice_pixel_verdict(const SliceConfig& cfg, int col, int row);

// threads <= 0 uses the hardware concurrency. Output bytes do not depend on
// the thread count.
Image render_slice(const SliceConfig& cfg, int threads = 0);

}  // namespace pstab::bq

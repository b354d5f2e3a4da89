#include "pstab/bq/slice.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <string>
#include <thread>

#include "pstab/error.hpp"

namespace pstab::bq {

namespace {

void validate(const SliceConfig& cfg) {
  if (cfg.width < 1 || cfg.height < 1) throw Error(ErrorCode::InvalidArgument, "slice needs width, height >= 1");
  if (cfg.budget < 0) throw Error(ErrorCode::InvalidArgument, "budget must be nonnegative");
  if (cfg.small_trace_bound < 0) throw Error(ErrorCode::InvalidArgument, "small_trace_bound must be nonnegative");
}

}  // namespace

std::string_view to_string(RootChoice r) noexcept { return r == RootChoice::SmallerAbs ? "smaller" : "larger"; }

std::vector<std::uint8_t> Image::to_ppm() const {
  const std::string header = "P6\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), rgb.begin(), rgb.end());
  return out;
}

Complex pixel_z(const SliceConfig& cfg, int col, int row) {
  const double fx = (col + 0.5) / cfg.width;
  const double fy = (row + 0.5) / cfg.height;
  const double re = cfg.window_min.real() + fx * (cfg.window_max.real() - cfg.window_min.real());
  const double im = cfg.window_max.imag() - fy * (cfg.window_max.imag() - cfg.window_min.imag());
  return {re, im};
}

Complex choose_root(const QuadraticRoots& roots, RootChoice choice) noexcept {
  const bool first_smaller = std::abs(roots.first) <= std::abs(roots.second);
  if (choice == RootChoice::SmallerAbs) return first_smaller ? roots.first : roots.second;
  return first_smaller ? roots.second : roots.first;
}

std::array<std::uint8_t, 3> palette(const BqVerdict& v) noexcept {
  switch (v.kind) {
    case BqKind::Certified: {
      const auto shade = std::min<std::int64_t>(191, v.nodes_explored / 32);
      const auto g = static_cast<std::uint8_t>(255 - shade);
      return {g, g, g};
    }
    case BqKind::NotBqWitness: {
      const auto r = std::min<std::size_t>(255, 64 + 16 * v.witnesses.size());
      return {static_cast<std::uint8_t>(r), 0, 0};
    }
    case BqKind::Inconclusive: return {0, 0, 96};
  }
  return {0, 0, 0};
}

BqVerdict slice_pixel_verdict(const SliceConfig& cfg, int col, int row) {
  const Complex z = pixel_z(cfg, col, row);
  const Complex y = choose_root(solve_y_from_fricke(cfg.fixed_x, z, cfg.kappa), cfg.root);
  BqOptions opts;
  opts.budget = cfg.budget;
  opts.small_trace_bound = cfg.small_trace_bound;
  return bq_decide(MarkoffTriple(cfg.fixed_x, y, z), opts);
}

Image render_slice(const SliceConfig& cfg, int threads) {
  validate(cfg);
  Image img;
  img.width = cfg.width;
  img.height = cfg.height;
  img.rgb.assign(static_cast<std::size_t>(cfg.width) * static_cast<std::size_t>(cfg.height) * 3, 0);

  if (threads <= 0) threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  threads = std::min(threads, cfg.height);

  // Rows are handed out dynamically; each pixel is written at its own offset.
  std::atomic<int> next_row{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    try {
      for (int row = next_row++; row < cfg.height && !failed; row = next_row++) {
        for (int col = 0; col < cfg.width; ++col) {
          const auto rgb = palette(slice_pixel_verdict(cfg, col, row));
          const std::size_t at = (static_cast<std::size_t>(row) * cfg.width + col) * 3;
          std::copy(rgb.begin(), rgb.end(), img.rgb.begin() + static_cast<std::ptrdiff_t>(at));
        }
      }
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
  };

  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return img;
}

}  // namespace pstab::bq

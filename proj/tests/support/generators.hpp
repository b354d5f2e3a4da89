#pragma once

// Random inputs and independent reference computations for the test suites.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "pstab/freegroup/word.hpp"
#include "pstab/moebius/moebius_map.hpp"
#include "pstab/moebius/representation.hpp"

namespace pstab::testing {

using Complex = std::complex<double>;
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t salt = 0) { return Rng(0x5eed2024ULL ^ (salt * 0x9e3779b97f4a7c15ULL)); }

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline double uniform_real(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
inline Complex uniform_complex(Rng& rng, double r) { return {uniform_real(rng, -r, r), uniform_real(rng, -r, r)}; }

// Raw letter values, possibly unreduced.
inline std::vector<int> random_letter_values(Rng& rng, int rank, int len) {
  std::vector<int> v;
  for (int i = 0; i < len; ++i) {
    const int g = uniform_int(rng, 1, rank);
    v.push_back(uniform_int(rng, 0, 1) ? g : -g);
  }
  return v;
}

// Reduced word of exactly `len` letters (each step avoids the inverse of the last).
inline freegroup::Word random_reduced_word(Rng& rng, int rank, int len) {
  std::vector<freegroup::Letter> letters;
  while (static_cast<int>(letters.size()) < len) {
    const int g = uniform_int(rng, 1, rank);
    const freegroup::Letter l(uniform_int(rng, 0, 1) ? g : -g);
    if (!letters.empty() && letters.back() == l.inverse()) continue;
    letters.push_back(l);
  }
  return freegroup::Word::reduce(letters, rank);
}

inline freegroup::Word random_cyclically_reduced_word(Rng& rng, int rank, int len) {
  for (;;) {
    auto w = random_reduced_word(rng, rank, len);
    if (w.is_cyclically_reduced()) return w;
  }
}

// Every reduced word of length exactly len, in letter-key order.
inline void for_each_reduced_word(int rank, int len, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> cur;
  std::function<void()> rec = [&] {
    if (static_cast<int>(cur.size()) == len) {
      fn(cur);
      return;
    }
    for (int g = 1; g <= rank; ++g) {
      for (int v : {g, -g}) {
        if (!cur.empty() && cur.back() == -v) continue;
        cur.push_back(v);
        rec();
        cur.pop_back();
      }
    }
  };
  rec();
}

inline freegroup::Word word_of(const std::vector<int>& values, int rank) {
  std::vector<freegroup::Letter> letters;
  for (int v : values) letters.emplace_back(v);
  return freegroup::Word::reduce(letters, rank);
}

// Plain 2x2 complex matrix with no normalization, used as the reference.
struct Mat {
  Complex a, b, c, d;
  Complex trace() const { return a + d; }
  Complex det() const { return a * d - b * c; }
  Mat inv() const { return {d, -b, -c, a}; }
};
inline Mat mul(const Mat& m, const Mat& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}
inline Mat mat_of(const moebius::MoebiusMap& m) { return {m.a(), m.b(), m.c(), m.d()}; }

inline Mat reference_evaluate(const std::vector<Mat>& gens, const freegroup::Word& w) {
  Mat acc{1.0, 0.0, 0.0, 1.0};
  for (auto l : w.letters()) {
    const Mat& g = gens[static_cast<std::size_t>(l.generator())];
    acc = mul(acc, l.is_inverse() ? g.inv() : g);
  }
  return acc;
}

inline std::vector<Mat> mats_of(const moebius::Representation& rep) {
  std::vector<Mat> out;
  for (const auto& m : rep.images()) out.push_back(mat_of(m));
  return out;
}

// Determinant-1 matrix with entries of modulus about `scale`.
inline moebius::MoebiusMap random_sl2c(Rng& rng, double scale = 1.5) {
  for (;;) {
    const Complex a = uniform_complex(rng, scale), b = uniform_complex(rng, scale), c = uniform_complex(rng, scale),
                  d = uniform_complex(rng, scale);
    const Complex det = a * d - b * c;
    if (std::abs(det) < 0.2) continue;
    return moebius::MoebiusMap::normalized(a, b, c, d);
  }
}

// A random SU(2) element times a diagonal with |lambda| in [1, 1.1].
inline moebius::MoebiusMap random_near_unitary(Rng& rng) {
  Complex alpha = uniform_complex(rng, 1.0), beta = uniform_complex(rng, 1.0);
  const double n = std::sqrt(std::norm(alpha) + std::norm(beta));
  alpha /= n;
  beta /= n;
  const moebius::MoebiusMap u(alpha, -std::conj(beta), beta, std::conj(alpha), 1e-12);
  return u * moebius::MoebiusMap::diagonal(std::polar(uniform_real(rng, 1.0, 1.1), uniform_real(rng, 0.0, 6.28)));
}

inline moebius::MoebiusMap random_loxodromic(Rng& rng) {
  for (;;) {
    auto m = random_sl2c(rng);
    const Complex t = m.trace();
    if (std::abs(t * t - 4.0) > 0.5 && !moebius::is_non_loxodromic_trace(t, 1e-3)) {
      // |lambda| bounded away from 1 keeps the eigenvector problem well conditioned.
      if (moebius::translation_length(m) > 0.2) return m;
    }
  }
}

inline moebius::Representation random_representation(Rng& rng, int rank) {
  std::vector<moebius::MoebiusMap> images;
  for (int i = 0; i < rank; ++i) images.push_back(random_sl2c(rng));
  return moebius::Representation(std::move(images));
}

inline double rel_err(Complex got, Complex want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

inline int gcd(int a, int b) { return b == 0 ? std::abs(a) : gcd(b, a % b); }

inline int euler_phi(int n) {
  int count = 0;
  for (int k = 1; k <= n; ++k) count += gcd(k, n) == 1 ? 1 : 0;
  return count;
}

}  // namespace pstab::testing

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "isofield/common.hpp"

namespace isofield {

/// Philox4x64-10 block cipher (Salmon et al. constants). A pure function of
/// (counter, key), which is what makes every draw in this library addressable:
/// streams are keyed by (seed, domain) and the counter carries structured
/// indices such as (realization, degree, order) so draw order never matters.
struct Philox4x64 {
  using Counter = std::array<std::uint64_t, 4>;
  using Key = std::array<std::uint64_t, 2>;

  static constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ull;
  static constexpr std::uint64_t kMul1 = 0xCA5A826395121157ull;
  static constexpr std::uint64_t kBump0 = 0x9E3779B97F4A7C15ull;
  static constexpr std::uint64_t kBump1 = 0xBB67AE8584CAA73Bull;

  static Counter block(Counter ctr, Key key) {
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += kBump0;
        key[1] += kBump1;
      }
      const auto p0 = static_cast<unsigned __int128>(kMul0) * ctr[0];
      const auto p1 = static_cast<unsigned __int128>(kMul1) * ctr[2];
      const auto hi0 = static_cast<std::uint64_t>(p0 >> 64);
      const auto lo0 = static_cast<std::uint64_t>(p0);
      const auto hi1 = static_cast<std::uint64_t>(p1 >> 64);
      const auto lo1 = static_cast<std::uint64_t>(p1);
      ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
  }
};

/// Stream domains. Distinct ids keep unrelated consumers of the same seed on
/// disjoint Philox keys.
enum class RngDomain : std::uint64_t {
  Coefficients = 1,
  Permutation = 2,
  Rotation = 3,
  Experiment = 4,
  Probe = 5,
  Generic = 6,
};

/// A deterministic random stream: key = (seed, domain), counter =
/// (block, s1, s2, s3). Two streams with different (seed, domain, s1, s2, s3)
/// are statistically independent.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, RngDomain domain, std::uint64_t s1 = 0,
             std::uint64_t s2 = 0, std::uint64_t s3 = 0)
      : key_{seed, static_cast<std::uint64_t>(domain)}, ctr_{0, s1, s2, s3} {}

  std::uint64_t next_u64() {
    if (buf_pos_ == 4) {
      buf_ = Philox4x64::block(ctr_, key_);
      ++ctr_[0];
      buf_pos_ = 0;
    }
    return buf_[buf_pos_++];
  }

  /// Uniform on [0,1), 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform on (0,1].
  double uniform_open01() { return 1.0 - uniform01(); }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  /// Standard normal via Box-Muller; generates pairs, caches the second.
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform_open01()));
    const double t = kTwoPi * uniform01();
    cached_ = r * std::sin(t);
    have_cached_ = true;
    return r * std::cos(t);
  }

  /// Complex Gaussian with E|z|^2 = 1 (independent N(0,1/2) parts).
  cplx complex_normal_unit() {
    const double s = 1.0 / std::sqrt(2.0);
    const double re = normal();
    const double im = normal();
    return {s * re, s * im};
  }

  /// Unbiased integer in [0, n) by rejection.
  std::uint64_t uniform_below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  /// Fisher-Yates permutation of 0..n-1.
  std::vector<std::size_t> permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    for (std::size_t i = n; i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(uniform_below(i));
      std::swap(p[i - 1], p[j]);
    }
    return p;
  }

 private:
  Philox4x64::Key key_;
  Philox4x64::Counter ctr_;
  Philox4x64::Counter buf_{};
  int buf_pos_ = 4;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

}  // namespace isofield

#pragma once

#include <cstdint>
#include <random>

#include "shops/linalg.hpp"

namespace shops {

/// splitmix64 step; used to derive independent stream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic, order-independent combination of a base seed with stream
/// tags (theorem hash, trial index, ...).
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c = 0) {
  std::uint64_t s = a ^ (0x517cc1b727220a95ULL * (b + 1)) ^ (0x2545f4914f6cdd1dULL * (c + 1));
  std::uint64_t out = splitmix64(s);
  out ^= splitmix64(s);
  return out;
}

/// FNV-1a over a string, for hashing theorem ids into seeds.
inline std::uint64_t hash_str(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Deterministic random source. mt19937_64 has a standard-pinned output
/// sequence, and the uniform / Gaussian transforms below are spelled out
/// explicitly, so streams are reproducible across platforms and stdlibs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t bits() { return eng_(); }

  /// Uniform in (0, 1].
  double uniform() { return static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  bool coin() { return (eng_() & 1u) != 0; }

  /// Integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : eng_() % n; }

  /// Standard normal via Box-Muller (one value per pair of uniforms).
  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  Complex cnormal() { return Complex(normal(), normal()); }

  Vector cgaussian(Eigen::Index n) {
    Vector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = cnormal();
    return v;
  }

  Matrix cgaussian(Eigen::Index rows, Eigen::Index cols) {
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = cnormal();
    return m;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace shops

#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace gifting {

constexpr const char* kVersion = "0.1.0";

using Eigen::ArrayXXd;
using Eigen::MatrixXd;
using Eigen::VectorXd;

/// One action index per player.
using JointAction = std::vector<int>;

/// A game or parameter set violates a defining condition (CLI exit code 2).
struct constraint_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A computation produced a non-finite value.
struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Deterministic randomness. All stochastic code draws from an mt19937_64
// seeded through splitmix64, so identical seeds give identical streams on
// every platform.

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Derives a child seed from a parent seed and a sequence of indices.
inline std::uint64_t derive_seed(std::uint64_t root,
                                 std::initializer_list<std::uint64_t> path) {
  std::uint64_t s = root;
  std::uint64_t out = splitmix64(s);
  for (std::uint64_t p : path) {
    s = out ^ (p + 0x9e3779b97f4a7c15ull);
    out = splitmix64(s);
  }
  return out;
}

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) {
  std::uint64_t s = seed;
  return Rng(splitmix64(s));
}

/// Uniform double in [0, 1).
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

/// Uniform integer in [0, n). Modulo bias is negligible for the small n
/// used here and keeps the draw count per call fixed.
inline int uniform_int(Rng& rng, int n) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
}

/// n evenly spaced values covering [lo, hi]; n == 1 gives the midpoint.
inline VectorXd linspace(double lo, double hi, int n) {
  if (n <= 0) throw std::invalid_argument("linspace: n must be positive");
  if (n == 1) {
    VectorXd v(1);
    v[0] = 0.5 * (lo + hi);
    return v;
  }
  return VectorXd::LinSpaced(n, lo, hi);
}

}  // namespace gifting

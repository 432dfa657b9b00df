#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace clucmp::rng {

using Engine = std::mt19937_64;

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed for the stream addressed by `path` under a root seed; distinct paths
/// give unrelated streams, so work items can run in any order.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> path) noexcept {
  std::uint64_t h = splitmix64(seed);
  for (const std::uint64_t p : path) h = splitmix64(h ^ splitmix64(p + 0x632be59bd9b4e019ULL));
  return h;
}

inline Engine stream(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
  return Engine(derive_seed(seed, path));
}

/// Uniform integer in [0, n) by rejection; identical on every standard library.
inline std::uint64_t uniform_below(Engine& g, std::uint64_t n) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x;
  do x = g();
  while (x >= limit);
  return x % n;
}

/// m distinct indices drawn uniformly from [0, n), in draw order.
inline std::vector<std::size_t> sample_without_replacement(Engine& g, std::size_t n, std::size_t m) {
  std::vector<std::size_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i;
  for (std::size_t i = 0; i < m; ++i) std::swap(pool[i], pool[i + uniform_below(g, n - i)]);
  pool.resize(m);
  return pool;
}

template <typename T>
void shuffle(Engine& g, std::vector<T>& v) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform_below(g, i)]);
}

}  // namespace clucmp::rng

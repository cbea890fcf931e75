#pragma once

// Deliberately naive reference implementations. They share no code with the
// library: adjacency is a dense bool matrix, closure applies one force at a
// time, and path covers come from a partition search over submasks.

#include "zf/graph.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;
using Blue = std::vector<bool>;

inline Matrix matrix(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Matrix a(n, std::vector<bool>(n, false));
  for (auto [u, v] : edges) a[u][v] = a[v][u] = true;
  return a;
}

inline Matrix matrix(const zf::Graph& g) {
  const auto n = g.vertex_count();
  Matrix a(n, std::vector<bool>(n, false));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = true;
  return a;
}

inline Blue from_mask(std::size_t n, std::uint64_t mask) {
  Blue b(n, false);
  for (std::size_t v = 0; v < n; ++v) b[v] = (mask >> v) & 1U;
  return b;
}

inline bool all_blue(const Blue& b) {
  for (bool x : b) {
    if (!x) return false;
  }
  return true;
}

// The single white neighbour of u, or -1.
inline long lone_white(const Matrix& a, const Blue& b, std::size_t u) {
  long found = -1;
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (a[u][w] && !b[w]) {
      if (found >= 0) return -1;
      found = static_cast<long>(w);
    }
  }
  return found;
}

// One force at a time until nothing changes.
inline Blue closure(const Matrix& a, Blue b) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t u = 0; u < a.size(); ++u) {
      if (!b[u]) continue;
      const long w = lone_white(a, b, u);
      if (w >= 0) {
        b[static_cast<std::size_t>(w)] = true;
        changed = true;
      }
    }
  }
  return b;
}

// Synchronous rounds against a frozen snapshot.
inline std::optional<std::size_t> propagation_time(const Matrix& a, Blue b) {
  std::size_t rounds = 0;
  while (!all_blue(b)) {
    Blue next = b;
    bool any = false;
    for (std::size_t u = 0; u < a.size(); ++u) {
      if (!b[u]) continue;
      const long w = lone_white(a, b, u);
      if (w >= 0) {
        next[static_cast<std::size_t>(w)] = true;
        any = true;
      }
    }
    if (!any) return std::nullopt;
    b = std::move(next);
    ++rounds;
  }
  return rounds;
}

struct ZfPt {
  std::size_t z;
  std::size_t pt;
};

// Every subset, smallest first.
inline ZfPt zero_forcing(const Matrix& a) {
  const std::size_t n = a.size();
  for (std::size_t k = 0; k <= n; ++k) {
    std::optional<std::size_t> best;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
      const auto t = propagation_time(a, from_mask(n, mask));
      if (t && (!best || *t < *best)) best = t;
    }
    if (best) return {k, *best};
  }
  return {n, 0};
}

// Connected, acyclic, max degree 2 inside the part.
inline bool induced_path_set(const Matrix& a, std::uint64_t part) {
  const std::size_t n = a.size();
  std::size_t size = 0;
  std::size_t edges = 0;
  std::size_t first = n;
  for (std::size_t u = 0; u < n; ++u) {
    if (!((part >> u) & 1U)) continue;
    if (first == n) first = u;
    ++size;
    std::size_t deg = 0;
    for (std::size_t w = 0; w < n; ++w) {
      if ((part >> w) & 1U && a[u][w]) ++deg;
    }
    if (deg > 2) return false;
    edges += deg;
  }
  if (size == 0 || edges / 2 != size - 1) return false;
  std::uint64_t seen = std::uint64_t{1} << first;
  std::vector<std::size_t> stack{first};
  while (!stack.empty()) {
    const auto u = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < n; ++w) {
      if ((part >> w) & 1U && a[u][w] && !((seen >> w) & 1U)) {
        seen |= std::uint64_t{1} << w;
        stack.push_back(w);
      }
    }
  }
  return seen == part;
}

// Fewest parts: the lowest remaining vertex goes into some path-shaped submask.
inline std::size_t path_cover(const Matrix& a) {
  std::map<std::uint64_t, std::size_t> memo;
  auto solve = [&](auto&& self, std::uint64_t rest) -> std::size_t {
    if (rest == 0) return 0;
    if (auto it = memo.find(rest); it != memo.end()) return it->second;
    const std::uint64_t low = rest & (~rest + 1);
    const std::uint64_t others = rest & ~low;
    std::size_t best = a.size() + 1;
    for (std::uint64_t sub = others;; sub = (sub - 1) & others) {
      const std::uint64_t part = sub | low;
      if (induced_path_set(a, part)) best = std::min(best, 1 + self(self, rest & ~part));
      if (sub == 0) break;
    }
    memo[rest] = best;
    return best;
  };
  const std::uint64_t all = a.empty() ? 0 : (~std::uint64_t{0} >> (64 - a.size()));
  return solve(solve, all);
}

struct RandomGraph {
  std::size_t n;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

inline RandomGraph random_graph(std::mt19937_64& rng, std::size_t min_n, std::size_t max_n) {
  std::uniform_int_distribution<std::size_t> size(min_n, max_n);
  std::uniform_real_distribution<double> density(0.1, 0.75);
  std::bernoulli_distribution coin(density(rng));
  RandomGraph out{size(rng), {}};
  for (std::size_t u = 0; u < out.n; ++u) {
    for (std::size_t v = u + 1; v < out.n; ++v) {
      if (coin(rng)) out.edges.emplace_back(u, v);
    }
  }
  return out;
}

inline std::vector<std::size_t> random_subset(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n; ++v) {
    if (coin(rng)) out.push_back(v);
  }
  return out;
}

} // namespace oracle

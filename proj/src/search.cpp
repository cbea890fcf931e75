#include "zf/search.hpp"

#include "zf/error.hpp"
#include "zf/forcing.hpp"
#include "zf/symmetry.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

namespace zf {

namespace {

using Mask = std::uint64_t;

constexpr std::uint64_t kChunkSize = 4096;

// Pascal's triangle up to 64; C(64, 32) < 2^63 so nothing overflows.
const auto& binomials() {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, 65>, 65> t{};
    for (std::size_t n = 0; n <= 64; ++n) {
      t[n][0] = 1;
      for (std::size_t k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
    }
    return t;
  }();
  return table;
}

std::uint64_t binom(std::size_t n, std::size_t k) {
  return k > n ? 0 : binomials()[n][k];
}

// rank-th k-subset of [0, n) in lexicographic order.
void unrank_combination(std::uint64_t rank, std::size_t n, std::size_t k,
                        std::vector<unsigned>& out) {
  out.resize(k);
  unsigned next = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (;; ++next) {
      const std::uint64_t with_next = binom(n - next - 1, k - i - 1);
      if (rank < with_next) break;
      rank -= with_next;
    }
    out[i] = next++;
  }
}

bool next_combination(std::vector<unsigned>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

Mask to_mask(const std::vector<unsigned>& c) {
  Mask m = 0;
  for (unsigned v : c) m |= Mask{1} << v;
  return m;
}

std::vector<Vertex> mask_members(Mask m) {
  std::vector<Vertex> out;
  for (; m != 0; m &= m - 1) out.push_back(static_cast<Vertex>(std::countr_zero(m)));
  return out;
}

// Synchronous color change rule on bitmasks.
class Kernel {
public:
  explicit Kernel(const Graph& g)
      : adj_(g.neighbor_masks()),
        full_(g.vertex_count() == 64 ? ~Mask{0} : (Mask{1} << g.vertex_count()) - 1) {}

  Mask full() const noexcept { return full_; }

  // True when some blue vertex has exactly one white neighbor.
  bool can_force(Mask blue) const noexcept {
    for (Mask rest = blue; rest != 0; rest &= rest - 1) {
      const Mask white = adj_[std::countr_zero(rest)] & ~blue;
      if (white != 0 && (white & (white - 1)) == 0) return true;
    }
    return false;
  }

  struct Outcome {
    Mask blue;
    std::size_t steps;
  };

  Outcome run(Mask blue) const noexcept {
    std::size_t steps = 0;
    while (blue != full_) {
      Mask forced = 0;
      for (Mask rest = blue; rest != 0; rest &= rest - 1) {
        const Mask white = adj_[std::countr_zero(rest)] & ~blue;
        if (white != 0 && (white & (white - 1)) == 0) forced |= white;
      }
      if (forced == 0) break;
      blue |= forced;
      ++steps;
    }
    return {blue, steps};
  }

private:
  std::span<const Mask> adj_;
  Mask full_;
};

struct LevelScan {
  bool stop_at_first = true;
  bool filter = true;
  const std::vector<Permutation>* group = nullptr;
};

struct ChunkResult {
  std::vector<Mask> zfs;
  std::vector<std::size_t> steps;
  std::uint64_t examined = 0;
  std::uint64_t closures = 0;
};

bool canonical(Mask m, const std::vector<Permutation>& group) {
  for (const auto& perm : group) {
    if (permute_mask(perm, m) < m) return false;
  }
  return true;
}

void scan_chunk(const Kernel& kernel, std::size_t n, std::size_t k, std::uint64_t begin,
                std::uint64_t end, const LevelScan& scan, ChunkResult& out) {
  std::vector<unsigned> comb;
  unrank_combination(begin, n, k, comb);
  for (std::uint64_t rank = begin; rank < end; ++rank) {
    const Mask b = to_mask(comb);
    if (!scan.group || canonical(b, *scan.group)) {
      ++out.examined;
      if (b == kernel.full() || !scan.filter || kernel.can_force(b)) {
        ++out.closures;
        const auto result = kernel.run(b);
        if (result.blue == kernel.full()) {
          out.zfs.push_back(b);
          out.steps.push_back(result.steps);
          if (scan.stop_at_first) return;
        }
      }
    }
    if (rank + 1 < end) next_combination(comb, n);
  }
}

// Splits the C(n, k) lexicographic range into fixed-size chunks handed to
// workers through an atomic counter; chunks are merged in rank order so the
// outcome never depends on the worker count.
ChunkResult scan_level(const Kernel& kernel, std::size_t n, std::size_t k,
                       const LevelScan& scan, unsigned workers) {
  const std::uint64_t total = binom(n, k);
  const std::uint64_t chunks = (total + kChunkSize - 1) / kChunkSize;
  std::vector<ChunkResult> results(chunks);
  std::atomic<std::uint64_t> next_chunk{0};
  std::atomic<std::uint64_t> first_hit{std::numeric_limits<std::uint64_t>::max()};

  auto work = [&] {
    for (;;) {
      const std::uint64_t c = next_chunk.fetch_add(1, std::memory_order_relaxed);
      if (c >= chunks) return;
      if (scan.stop_at_first && c > first_hit.load(std::memory_order_relaxed)) continue;
      const std::uint64_t begin = c * kChunkSize;
      scan_chunk(kernel, n, k, begin, std::min(total, begin + kChunkSize), scan, results[c]);
      if (scan.stop_at_first && !results[c].zfs.empty()) {
        std::uint64_t seen = first_hit.load(std::memory_order_relaxed);
        while (c < seen && !first_hit.compare_exchange_weak(seen, c)) {
        }
      }
    }
  };

  const unsigned threads =
      static_cast<unsigned>(std::min<std::uint64_t>(std::max(1U, workers), chunks));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }

  ChunkResult merged;
  for (auto& r : results) {
    merged.examined += r.examined;
    merged.closures += r.closures;
    merged.zfs.insert(merged.zfs.end(), r.zfs.begin(), r.zfs.end());
    merged.steps.insert(merged.steps.end(), r.steps.begin(), r.steps.end());
    if (scan.stop_at_first && !r.zfs.empty()) break;
  }
  return merged;
}

unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

SearchReport run_search(const Graph& g, const SearchOptions& opts, bool want_pt) {
  const auto started = std::chrono::steady_clock::now();
  const std::size_t n = g.vertex_count();
  if (n == 0) throw Error(ErrorCode::EmptyGraph, "search on the empty graph");
  if (n > VertexSet::kWordBits) {
    throw Error(ErrorCode::TooLarge, "exhaustive search supports at most 64 vertices");
  }

  const Kernel kernel(g);
  const unsigned workers = resolve_workers(opts.workers);
  std::vector<Permutation> group;
  if (opts.symmetry == Symmetry::On) group = dihedral_automorphisms(g);

  SearchReport report;
  report.n = n;
  report.symmetry = opts.symmetry;
  report.symmetry_group_order = group.empty() ? 1 : group.size();
  report.lower_bound = opts.pruning ? search_lower_bound(g) : 1;

  const bool exhaustive_level = opts.all_witnesses || (want_pt && !opts.pt_first_witness);
  LevelScan scan;
  scan.stop_at_first = !exhaustive_level;
  scan.filter = opts.pruning;
  scan.group = group.empty() ? nullptr : &group;

  std::uint64_t budget_used = 0;
  ChunkResult found;
  for (std::size_t k = report.lower_bound; k <= n; ++k) {
    budget_used += binom(n, k);
    if (opts.max_sets != 0 && budget_used > opts.max_sets) {
      throw Error(ErrorCode::BudgetExceeded,
                  "candidate sets through cardinality " + std::to_string(k) + " exceed " +
                      std::to_string(opts.max_sets));
    }
    ChunkResult level = scan_level(kernel, n, k, scan, workers);
    report.sets_examined += level.examined;
    report.closure_calls += level.closures;
    if (!level.zfs.empty()) {
      report.z = k;
      found = std::move(level);
      break;
    }
  }

  if (opts.prove_minimality && report.z >= 1) {
    LevelScan full_scan;
    full_scan.stop_at_first = false;
    full_scan.filter = false;
    const ChunkResult below = scan_level(kernel, n, report.z - 1, full_scan, workers);
    report.minimality = MinimalityProof{report.z - 1, below.examined, below.zfs.empty()};
  }

  const std::size_t keep = opts.all_witnesses ? found.zfs.size() : 1;
  for (std::size_t i = 0; i < keep && i < found.zfs.size(); ++i) {
    report.zfs_witnesses.push_back(mask_members(found.zfs[i]));
    if (want_pt) report.witness_pt.push_back(found.steps[i]);
  }

  if (want_pt) {
    const std::size_t best = *std::min_element(found.steps.begin(), found.steps.end());
    report.pt = best;
    report.pt_is_upper_bound = opts.pt_first_witness && !opts.all_witnesses;
    for (std::size_t i = 0; i < found.zfs.size(); ++i) {
      if (found.steps[i] != best) continue;
      report.pt_witnesses.push_back(mask_members(found.zfs[i]));
      if (!opts.all_witnesses) break;
    }
  }

  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
          .count();
  return report;
}

SearchReport search_with_symmetry_mode(const Graph& g, const SearchOptions& opts, bool want_pt) {
  if (opts.symmetry != Symmetry::CrossCheck) return run_search(g, opts, want_pt);
  SearchOptions plain = opts;
  plain.symmetry = Symmetry::Off;
  SearchOptions reduced = opts;
  reduced.symmetry = Symmetry::On;
  reduced.prove_minimality = false;
  SearchReport a = run_search(g, plain, want_pt);
  const SearchReport b = run_search(g, reduced, want_pt);
  if (a.z != b.z || a.pt != b.pt) {
    throw std::logic_error("symmetry-reduced search disagrees with the full search");
  }
  a.symmetry = Symmetry::CrossCheck;
  a.symmetry_group_order = b.symmetry_group_order;
  return a;
}

} // namespace

std::size_t search_lower_bound(const Graph& g) {
  const std::size_t pendants = count_degree_one(g);
  return std::max({std::size_t{1}, min_degree(g), (pendants + 1) / 2});
}

SearchReport zero_forcing_number(const Graph& g, const SearchOptions& opts) {
  return search_with_symmetry_mode(g, opts, false);
}

SearchReport propagation_time(const Graph& g, const SearchOptions& opts) {
  return search_with_symmetry_mode(g, opts, true);
}

BoundChainReport verify_bound_chain(const Graph& g, std::size_t ceiling, unsigned workers) {
  SearchOptions opts;
  opts.workers = workers;
  const SearchReport z = zero_forcing_number(g, opts);
  BoundChainReport out{};
  out.min_degree = min_degree(g);
  out.path_cover = path_cover_number(g, ceiling);
  out.z = z.z;

  const VertexSet b(g.vertex_count(), std::span<const Vertex>(z.zfs_witnesses.front()));
  const ChainSet chains = chain_set(propagate(g, b));
  out.chain_count = chains.chains.size();

  VertexSet covered(g.vertex_count());
  bool ok = true;
  for (const auto& chain : chains.chains) {
    ok = ok && is_induced_path(g, chain);
    for (Vertex v : chain) {
      ok = ok && !covered.contains(v);
      covered.insert(v);
    }
  }
  out.chain_set_is_path_cover = ok && covered.is_full();
  out.holds = out.min_degree <= out.z && out.path_cover <= out.z &&
              out.chain_count == out.z && out.chain_count >= out.path_cover &&
              out.chain_set_is_path_cover;
  return out;
}

} // namespace zf

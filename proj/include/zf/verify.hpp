#pragma once

#include "zf/search.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace zf {

enum class TheoremFamily { Gear, Helm, GeneralizedHelm };

std::string_view to_string(TheoremFamily f) noexcept;

struct Prediction {
  std::size_t z;
  std::size_t pt;

  friend bool operator==(const Prediction&, const Prediction&) = default;
};

/// z = 3; pt = m - 1 when m is odd and r = 1, else ceil(m(r+1)/2) - 2.
Prediction predict_gear(std::size_t m, std::size_t r);

/// Traditional helm H_m: (3,2) and (3,3) for m = 3, 4; otherwise
/// (ceil(m/2), {6, 4, 5, 5}[m mod 4]).
Prediction predict_helm(std::size_t m);

/// H(m, s), s >= 2: (m(s-1) + 1, 2).
Prediction predict_generalized_helm(std::size_t m, std::size_t s);

/// Structural facts checked on every minimum zero forcing set of H_m, m >= 5.
///
/// A "run" is a window of three consecutive forcing pendants p_i, p_{i+1},
/// p_{i+2} (indices mod m); a group of four consecutive forcing pendants
/// therefore holds two runs.
struct LemmaReport {
  bool applicable = false;
  std::size_t witnesses_checked = 0;
  /// Every chain of the propagating chain set has two pendants, except for
  /// exactly one single-pendant chain when m is odd.
  bool pendants_per_chain = true;
  /// Even m: at most one run. Odd m: at most two runs.
  bool run_upper_bound = true;
  /// Even m: every witness has a run. Odd m: every all-pendant witness has one.
  bool run_required = true;
  std::vector<std::string> violations;

  bool holds() const noexcept {
    return pendants_per_chain && run_upper_bound && run_required;
  }
};

/// Counts the cyclic windows of three consecutive pendants of H_m inside b.
std::size_t helm_pendant_runs(std::size_t m, const std::vector<Vertex>& b);

/// Runs the structural checks over a list of minimum ZFS of H_m.
LemmaReport check_helm_lemmas(std::size_t m, const std::vector<std::vector<Vertex>>& witnesses);

enum class CaseStatus { Match, Mismatch, BudgetExceeded };

std::string_view to_string(CaseStatus s) noexcept;

struct TheoremCase {
  TheoremFamily family;
  std::size_t m;
  /// r for gears, s for helms.
  std::size_t param;
  Prediction predicted;
  std::optional<std::size_t> computed_z;
  std::optional<std::size_t> computed_pt;
  CaseStatus status = CaseStatus::Mismatch;
  /// Set when prove_minimality ran: every (z-1)-set failed.
  std::optional<bool> minimality_proved;
  /// The explicit construction reproduces the predicted values; nullopt when
  /// no construction exists (H_3, H_4).
  std::optional<bool> construction_ok;
  LemmaReport lemmas;
  std::size_t vertices = 0;
  std::size_t minimum_zfs_count = 0;
  std::uint64_t sets_examined = 0;
  double wall_time_ms = 0.0;
  std::string note;

  /// Match, and every auxiliary check that ran also passed.
  bool fully_verified() const noexcept;
};

struct Range {
  std::size_t lo;
  std::size_t hi;
};

struct GridRequest {
  std::vector<TheoremFamily> families;
  Range m_range{3, 6};
  Range r_range{1, 3};
  Range s_range{2, 3};
  /// Per-case candidate-set budget handed to the searcher.
  std::uint64_t max_sets = 50'000'000;
  unsigned workers = 0;
  Symmetry symmetry = Symmetry::Off;
  bool prove_minimality = true;
};

TheoremCase run_case(TheoremFamily family, std::size_t m, std::size_t param,
                     const GridRequest& settings);

/// One case per (family, m, param) in the requested ranges; generalized
/// helm ranges with s = 1 are skipped (that is the Helm family).
std::vector<TheoremCase> run_grid(const GridRequest& request);

/// Fixed-width human-readable table, one row per case.
std::string format_table(const std::vector<TheoremCase>& cases);

} // namespace zf

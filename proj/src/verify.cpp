#include "zf/verify.hpp"

#include "zf/constructions.hpp"
#include "zf/error.hpp"
#include "zf/forcing.hpp"
#include "zf/generators.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <sstream>
#include <thread>

namespace zf {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::InvalidParams, what);
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

Graph build(TheoremFamily family, std::size_t m, std::size_t param) {
  switch (family) {
  case TheoremFamily::Gear: return gear({m, param});
  case TheoremFamily::Helm: return helm({m, 1});
  case TheoremFamily::GeneralizedHelm: return helm({m, param});
  }
  return {};
}

Prediction predict(TheoremFamily family, std::size_t m, std::size_t param) {
  switch (family) {
  case TheoremFamily::Gear: return predict_gear(m, param);
  case TheoremFamily::Helm: return predict_helm(m);
  case TheoremFamily::GeneralizedHelm: return predict_generalized_helm(m, param);
  }
  return {};
}

// pt of the explicit set equals the prediction and the set has size z.
bool construction_matches(const Graph& g, const VertexSet& b, Prediction expected) {
  return b.count() == expected.z && propagation_time_of_set(g, b) == expected.pt;
}

std::optional<bool> check_construction(TheoremFamily family, std::size_t m, std::size_t param,
                                       const Graph& g, Prediction expected) {
  switch (family) {
  case TheoremFamily::Gear: {
    const GearParams p{m, param};
    const VertexSet b = gear_minimum_set(p);
    const auto script = gear_passive_center_script(p);
    const Chronology c = run_relaxed(g, b, script);
    const bool center_passive = c.complete() && terminus(c).contains(0);
    return center_passive && construction_matches(g, gear_efficient_set(p), expected);
  }
  case TheoremFamily::Helm:
    if (m < 5) return std::nullopt;
    return construction_matches(g, helm_efficient_set(m), expected);
  case TheoremFamily::GeneralizedHelm:
    return construction_matches(g, generalized_helm_efficient_set({m, param}), expected);
  }
  return std::nullopt;
}

} // namespace

std::string_view to_string(TheoremFamily f) noexcept {
  switch (f) {
  case TheoremFamily::Gear: return "gear";
  case TheoremFamily::Helm: return "helm";
  case TheoremFamily::GeneralizedHelm: return "ghelm";
  }
  return "gear";
}

std::string_view to_string(CaseStatus s) noexcept {
  switch (s) {
  case CaseStatus::Match: return "Match";
  case CaseStatus::Mismatch: return "Mismatch";
  case CaseStatus::BudgetExceeded: return "BudgetExceeded";
  }
  return "Mismatch";
}

Prediction predict_gear(std::size_t m, std::size_t r) {
  require(m >= 3 && r >= 1, "gear prediction requires m >= 3 and r >= 1");
  if (m % 2 == 1 && r == 1) return {3, m - 1};
  return {3, ceil_div(m * (r + 1), 2) - 2};
}

Prediction predict_helm(std::size_t m) {
  require(m >= 3, "helm prediction requires m >= 3");
  if (m == 3) return {3, 2};
  if (m == 4) return {3, 3};
  constexpr std::size_t kPt[4] = {6, 4, 5, 5};
  return {ceil_div(m, 2), kPt[m % 4]};
}

Prediction predict_generalized_helm(std::size_t m, std::size_t s) {
  require(m >= 3 && s >= 2, "generalized helm prediction requires m >= 3 and s >= 2");
  return {m * (s - 1) + 1, 2};
}

std::size_t helm_pendant_runs(std::size_t m, const std::vector<Vertex>& b) {
  const HelmParams p{m, 1};
  std::vector<bool> forcing(m + 1, false);
  for (Vertex v : b) {
    if (v > m) forcing[v - m] = true;
  }
  std::size_t runs = 0;
  for (std::size_t i = 1; i <= m; ++i) {
    const bool run = forcing[i] && forcing[helm_spoke_index(p, i + 1)] &&
                     forcing[helm_spoke_index(p, i + 2)];
    runs += run ? 1 : 0;
  }
  return runs;
}

LemmaReport check_helm_lemmas(std::size_t m, const std::vector<std::vector<Vertex>>& witnesses) {
  LemmaReport report;
  if (m < 5) return report;
  report.applicable = true;
  const Graph g = helm({m, 1});
  const bool even = m % 2 == 0;

  auto describe = [](const std::vector<Vertex>& b) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
    os << '}';
    return os.str();
  };

  for (const auto& w : witnesses) {
    ++report.witnesses_checked;
    const VertexSet b(g.vertex_count(), std::span<const Vertex>(w));
    const ChainSet chains = chain_set(propagate(g, b));
    std::size_t singles = 0;
    bool counts_ok = true;
    for (const auto& chain : chains.chains) {
      const auto pendants = static_cast<std::size_t>(std::count_if(
          chain.begin(), chain.end(), [&](Vertex v) { return g.role(v) == Role::Pendant; }));
      if (pendants == 1) ++singles;
      else if (pendants != 2) counts_ok = false;
    }
    counts_ok = counts_ok && singles == (even ? 0U : 1U);
    if (!counts_ok) {
      report.pendants_per_chain = false;
      report.violations.push_back("pendant count per chain fails for " + describe(w));
    }

    const std::size_t runs = helm_pendant_runs(m, w);
    if (runs > (even ? 1U : 2U)) {
      report.run_upper_bound = false;
      report.violations.push_back("too many pendant runs in " + describe(w));
    }
    const bool all_pendants = std::all_of(
        w.begin(), w.end(), [&](Vertex v) { return g.role(v) == Role::Pendant; });
    if ((even || all_pendants) && runs == 0) {
      report.run_required = false;
      report.violations.push_back("no run of three forcing pendants in " + describe(w));
    }
  }
  return report;
}

bool TheoremCase::fully_verified() const noexcept {
  return status == CaseStatus::Match && minimality_proved.value_or(true) &&
         construction_ok.value_or(true) && lemmas.holds();
}

TheoremCase run_case(TheoremFamily family, std::size_t m, std::size_t param,
                     const GridRequest& settings) {
  TheoremCase tc{};
  tc.family = family;
  tc.m = m;
  tc.param = family == TheoremFamily::Helm ? 1 : param;
  tc.predicted = predict(family, m, tc.param);
  const Graph g = build(family, m, tc.param);
  tc.vertices = g.vertex_count();

  SearchOptions opts;
  opts.workers = settings.workers;
  opts.max_sets = settings.max_sets;
  opts.symmetry = settings.symmetry;
  opts.prove_minimality = settings.prove_minimality;
  // Lemma checks need every minimum ZFS of the traditional helm.
  opts.all_witnesses = family == TheoremFamily::Helm && opts.symmetry == Symmetry::Off;

  try {
    const SearchReport report = propagation_time(g, opts);
    tc.computed_z = report.z;
    tc.computed_pt = report.pt;
    tc.sets_examined = report.sets_examined;
    tc.wall_time_ms = report.wall_time_ms;
    tc.minimum_zfs_count = opts.all_witnesses ? report.zfs_witnesses.size() : 0;
    if (report.minimality) tc.minimality_proved = report.minimality->all_failed;
    if (opts.all_witnesses) tc.lemmas = check_helm_lemmas(m, report.zfs_witnesses);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded && e.code() != ErrorCode::TooLarge) throw;
    tc.status = CaseStatus::BudgetExceeded;
    tc.note = e.what();
    return tc;
  }

  tc.status = tc.computed_z == tc.predicted.z && tc.computed_pt == tc.predicted.pt
                  ? CaseStatus::Match
                  : CaseStatus::Mismatch;
  tc.construction_ok = check_construction(family, m, tc.param, g, tc.predicted);
  return tc;
}

std::vector<TheoremCase> run_grid(const GridRequest& request) {
  struct Job {
    TheoremFamily family;
    std::size_t m;
    std::size_t param;
  };
  std::vector<Job> jobs;
  for (TheoremFamily f : request.families) {
    for (std::size_t m = request.m_range.lo; m <= request.m_range.hi; ++m) {
      switch (f) {
      case TheoremFamily::Gear:
        for (std::size_t r = request.r_range.lo; r <= request.r_range.hi; ++r) {
          jobs.push_back({f, m, r});
        }
        break;
      case TheoremFamily::Helm: jobs.push_back({f, m, 1}); break;
      case TheoremFamily::GeneralizedHelm:
        for (std::size_t s = std::max<std::size_t>(2, request.s_range.lo); s <= request.s_range.hi;
             ++s) {
          jobs.push_back({f, m, s});
        }
        break;
      }
    }
  }

  // Cases run concurrently; each search gets an equal share of the workers.
  const unsigned total =
      request.workers != 0 ? request.workers : std::max(1U, std::thread::hardware_concurrency());
  const unsigned case_threads =
      static_cast<unsigned>(std::min<std::size_t>(std::max(1U, total / 2), jobs.size()));
  GridRequest per_case = request;
  per_case.workers = std::max(1U, total / std::max(1U, case_threads));

  std::vector<TheoremCase> cases(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      cases[i] = run_case(jobs[i].family, jobs[i].m, jobs[i].param, per_case);
    }
  };
  if (case_threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < case_threads; ++t) pool.emplace_back(work);
  }
  return cases;
}

std::string format_table(const std::vector<TheoremCase>& cases) {
  std::ostringstream os;
  char line[200];
  std::snprintf(line, sizeof line, "%-6s %4s %4s %5s | %6s %6s | %6s %6s | %-14s %-6s %s\n",
                "family", "m", "r/s", "|V|", "z_pred", "z_comp", "pt_prd", "pt_cmp", "status",
                "checks", "time_ms");
  os << line;
  for (const auto& c : cases) {
    auto opt = [](const std::optional<std::size_t>& v) {
      return v ? std::to_string(*v) : std::string("-");
    };
    std::snprintf(line, sizeof line, "%-6s %4zu %4zu %5zu | %6zu %6s | %6zu %6s | %-14s %-6s %.1f\n",
                  std::string(to_string(c.family)).c_str(), c.m, c.param, c.vertices,
                  c.predicted.z, opt(c.computed_z).c_str(), c.predicted.pt,
                  opt(c.computed_pt).c_str(), std::string(to_string(c.status)).c_str(),
                  c.status == CaseStatus::BudgetExceeded ? "-"
                  : c.fully_verified()                   ? "ok"
                                                         : "FAIL",
                  c.wall_time_ms);
    os << line;
  }
  return os.str();
}

} // namespace zf

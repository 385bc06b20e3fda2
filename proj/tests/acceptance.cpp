// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Criteria are trend- and oracle-based; every tolerance is pinned here.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sppn/config.hpp"
#include "sppn/experiment.hpp"
#include "sppn/jammer_opt.hpp"
#include "sppn/metrics.hpp"
#include "sppn/ris_opt.hpp"

using namespace sppn;
namespace fs = std::filesystem;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  template <typename T>
  Check& operator<<(const T& v) {
    detail << v;
    return *this;
  }

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "  FAILED: " << what;
    }
  }
};

SimConfig load_scenario(const char* name) {
  return load_sim_config(fs::path(SPPN_SCENARIO_DIR) / name);
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Shared between criteria 1 and 2 (same run).
struct Fig3Run {
  double pse[4];  // k = 0, 2, 8, 12
  double se[4];
  bool ready = false;
} fig3;

constexpr std::uint64_t kFig3Trials = 20000;
constexpr std::uint64_t kFig3Seed = 1;

void criterion_fig3_shape(Check& c) {
  const SimConfig cfg = load_scenario("default_fig3.cfg");
  const Scenario sc = build_scenario(cfg.scenario);
  const int ks[4] = {0, 2, 8, 12};
  for (int i = 0; i < 4; ++i) {
    const PseEstimate est = estimate_pse(sc, fixed_placement(sc, ks[i]),
                                         EavesdropChannel::Information, kFig3Trials, kFig3Seed, 4);
    fig3.pse[i] = est.mean;
    fig3.se[i] = est.std_error;
  }
  fig3.ready = true;
  const auto gap = [&](int a, int b) {
    return 3.0 * std::sqrt(fig3.se[a] * fig3.se[a] + fig3.se[b] * fig3.se[b]);
  };
  c << "PSE(k)=" << fig3.pse[0] << "/" << fig3.pse[1] << "/" << fig3.pse[2] << "/"
    << fig3.pse[3] << " at k=0/2/8/12, trials=" << kFig3Trials;
  c.expect(fig3.pse[1] < fig3.pse[0] - gap(0, 1), "PSE(2) < PSE(0) - 3*stderr");
  c.expect(fig3.pse[2] < fig3.pse[1] - gap(1, 2), "PSE(8) < PSE(2) - 3*stderr");
}

void criterion_fig3_plateau(Check& c) {
  if (!fig3.ready) {
    c.expect(false, "fig3 run unavailable");
    return;
  }
  const double tail = fig3.pse[2] - fig3.pse[3];
  const double drop = fig3.pse[0] - fig3.pse[2];
  c << "PSE(8)-PSE(12)=" << tail << " vs 0.15*(PSE(0)-PSE(8))=" << 0.15 * drop;
  c.expect(tail <= 0.15 * drop, "plateau beyond eight jammers");
}

void criterion_aco_dominance(Check& c) {
  SimConfig cfg = load_scenario("default_fig3.cfg");
  cfg.scenario.fading = FadingModel::None;  // deterministic mode, exact comparison
  const Scenario sc = build_scenario(cfg.scenario);
  const std::uint64_t trials = 4;
  const std::uint64_t seed = 1;
  for (int k : {2, 4, 8}) {
    const Placement ring = fixed_placement(sc, k);
    std::vector<Point2D> ring_points;
    for (const JammerNode& j : ring.jammers) ring_points.push_back(j.position);
    const CandidateGrid grid =
        CandidateGrid::regular(sc.region, cfg.aco_grid_resolution_m).with_extra_cells(ring_points);
    const PlacementObjective fixed = evaluate_placement(sc, ring, cfg.aco, trials, seed, 4);
    const AcoResult aco = aco_optimize(sc, k, grid, cfg.aco, trials, seed, 4);
    c << "k=" << k << ": J " << aco.objective.penalized << " vs " << fixed.penalized
      << ", impact " << aco.objective.impact_db << " vs " << fixed.impact_db << " dB; ";
    c.expect(aco.objective.penalized <= fixed.penalized, "ACO J <= fixed J");
    c.expect(aco.objective.impact_db <= fixed.impact_db, "ACO impact <= fixed impact");
  }
}

Scenario random_small_world(std::uint64_t seed) {
  auto s = rng::substream(seed, rng::hash_tag("acceptance-world"));
  ScenarioConfig cfg;
  cfg.region = {0, 120, 0, 120};
  cfg.transmitters.positions = {{s.uniform(10, 50), s.uniform(10, 50)}};
  cfg.receivers.positions = {{s.uniform(10, 50), s.uniform(10, 50)}};
  cfg.sensing_targets.positions = {{s.uniform(10, 110), s.uniform(10, 110)}};
  const int n_eves = 1 + static_cast<int>(s.next_u64() % 2);
  for (int e = 0; e < n_eves; ++e)
    cfg.eavesdroppers.positions.push_back({s.uniform(10, 110), s.uniform(10, 110)});
  cfg.fading = FadingModel::None;
  cfg.sinr_threshold = std::pow(10.0, s.uniform(-0.3, 0.6));
  cfg.radio.noise_power_w = 1e-7;
  cfg.seed = seed;
  return build_scenario(cfg);
}

void criterion_aco_oracle(Check& c) {
  AcoParams params;
  params.n_ants = 9;
  params.n_iterations = 30;
  params.penalty_weight = 0.0;  // pure-PSE objective for the oracle batch
  int match_k1 = 0;
  int close_k2 = 0;
  const int cases = 100;
  for (int i = 0; i < cases; ++i) {
    const Scenario sc = random_small_world(7000 + static_cast<std::uint64_t>(i));
    const CandidateGrid grid = CandidateGrid::regular(sc.region, 40.0);  // 3x3
    const auto b1 = brute_force_placement(sc, 1, grid, params, 1, 3);
    const AcoResult a1 = aco_optimize(sc, 1, grid, params, 1, 3);
    if (a1.objective.penalized == b1.objective.penalized) ++match_k1;
    const auto b2 = brute_force_placement(sc, 2, grid, params, 1, 3);
    const AcoResult a2 = aco_optimize(sc, 2, grid, params, 1, 3);
    if (a2.objective.penalized <= 1.05 * b2.objective.penalized) ++close_k2;
  }
  c << "k=1 optimal in " << match_k1 << "/100, k=2 within 5% in " << close_k2 << "/100";
  c.expect(match_k1 >= 95, "k=1 matches brute force in >= 95 cases");
  c.expect(close_k2 >= 90, "k=2 within 5% of brute force in >= 90 cases");
}

void criterion_pse_analytic(Check& c) {
  struct Setting {
    double tau, d, alpha;
  };
  const Setting settings[5] = {
      {0.1, 100.0, 3.0}, {1.0, 80.0, 3.0}, {10.0, 50.0, 3.0}, {1.0, 40.0, 3.0}, {10.0, 30.0, 3.0}};
  const std::uint64_t trials = 100000;
  for (int i = 0; i < 5; ++i) {
    const Setting& st = settings[i];
    ScenarioConfig cfg;
    cfg.region = {-200, 200, -200, 200};
    cfg.transmitters.positions = {{0, 0}};
    cfg.eavesdroppers.positions = {{st.d, 0}};
    cfg.sinr_threshold = st.tau;
    cfg.fading = FadingModel::Rayleigh;
    cfg.radio.noise_power_w = 1e-6;
    cfg.radio.pathloss_exponent = st.alpha;
    const Scenario sc = build_scenario(cfg);
    // Exp(1) power fading through the threshold event:
    const double expected =
        std::exp(-st.tau * sc.radio.noise_power_w *
                 std::pow(st.d / sc.radio.reference_distance_m, st.alpha) /
                 (sc.radio.tx_power_w * sc.radio.reference_gain));
    const PseEstimate est = estimate_pse(sc, Placement{}, EavesdropChannel::Information, trials,
                                         200 + static_cast<std::uint64_t>(i), 4);
    c << "tau=" << st.tau << " d=" << st.d << ": " << est.mean << " vs " << expected << "; ";
    c.expect(std::fabs(est.mean - expected) <= 3.0 * est.std_error,
             "within 3 standard errors of the closed form");
  }
}

void criterion_fig4_suppression(Check& c) {
  const SimConfig cfg = load_scenario("default_fig4.cfg");
  const Scenario sc = build_scenario(cfg.scenario);
  const RisProblem problem = build_ris_problem(sc, cfg.ris, 1.0);
  const std::uint64_t seed = 1;
  const RisResult opt = coordinate_descent(problem, baseline_phases(cfg.ris.init, problem, seed),
                                           cfg.ris.tolerance, cfg.ris.max_sweeps);
  const RisEval random_eval = evaluate(problem, baseline_phases(PhaseInit::Random, problem, seed));
  const RisEval align_eval =
      evaluate(problem, baseline_phases(PhaseInit::AlignTarget, problem, seed));
  c << "g_user opt/random = " << opt.g_user / random_eval.g_user
    << ", g_target opt/align = " << opt.g_target / align_eval.g_target << " (N="
    << problem.size() << ")";
  c.expect(problem.size() == 64, "64-element RIS");
  c.expect(opt.g_user <= 1e-2 * random_eval.g_user, ">= 20 dB suppression toward the user");
  c.expect(opt.g_target >= 0.25 * align_eval.g_target, "target gain within 6 dB of coherent");
}

void criterion_fig4_linearity(Check& c) {
  const SimConfig cfg = load_scenario("default_fig4.cfg");
  ExperimentSpec spec;
  spec.kind = ExperimentKind::RisPowerSweep;
  spec.swept_values = {0.5, 1.0, 2.0, 4.0};
  spec.trials = 1;
  spec.seed = 1;
  const ExperimentResult r = run_ris_power_sweep(spec, cfg);
  for (std::size_t row = 1; row < r.results.rows.size(); ++row) {
    for (std::size_t col = 1; col < r.results.columns.size(); ++col) {
      const double lo = r.results.rows[row - 1][col];
      const double hi = r.results.rows[row][col];
      c.expect(std::fabs(hi - 2.0 * lo) <= 1e-12 * std::fabs(hi),
               "gain column doubles exactly when P doubles");
    }
  }
  c << "4 powers x 4 gain columns, relative doubling error <= 1e-12";
}

RisProblem random_acceptance_problem(std::size_t n, std::uint64_t seed) {
  auto s = rng::substream(seed, rng::hash_tag("acceptance-ris"));
  RisProblem p;
  for (std::size_t i = 0; i < n; ++i) {
    p.tx_to_ris.push_back(std::polar(s.uniform(0.2, 1.5), s.uniform(0.0, kTwoPi)));
    p.ris_to_user.push_back(std::polar(s.uniform(0.2, 1.5), s.uniform(0.0, kTwoPi)));
    p.ris_to_target.push_back(std::polar(s.uniform(0.2, 1.5), s.uniform(0.0, kTwoPi)));
  }
  p.direct_user = std::polar(s.uniform(0.0, 1.0), s.uniform(0.0, kTwoPi));
  p.direct_target = std::polar(s.uniform(0.0, 1.0), s.uniform(0.0, kTwoPi));
  p.tradeoff_weight = s.uniform(0.0, 2.0);
  return p;
}

void criterion_ris_oracle(Check& c) {
  int dominated = 0;
  const int cases = 200;
  for (int i = 0; i < cases; ++i) {
    const RisProblem p = random_acceptance_problem(4, 40000 + static_cast<std::uint64_t>(i));
    const RisResult cd = coordinate_descent(p, baseline_phases(PhaseInit::AlignTarget, p, 0));
    const RisResult lattice = exhaustive_quantized(p, 2);
    if (cd.objective <= lattice.objective + 1e-12 * (1.0 + std::fabs(lattice.objective)))
      ++dominated;
  }
  c << "CD <= 2-bit lattice in " << dominated << "/200; ";
  c.expect(dominated == cases, "coordinate descent dominates the quantized oracle");

  auto s = rng::substream(31, rng::hash_tag("acceptance-upd"));
  int non_increasing = 0;
  const int updates = 1000;
  for (int i = 0; i < updates; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(s.next_u64() % 6);
    const RisProblem p = random_acceptance_problem(n, 50000 + static_cast<std::uint64_t>(i));
    PhaseProfile phi;
    for (std::size_t j = 0; j < n; ++j) phi.phases.push_back(s.uniform(0.0, kTwoPi));
    const std::size_t el = static_cast<std::size_t>(s.next_u64() % n);
    const double before = evaluate(p, phi).objective;
    const double after = evaluate(p, single_element_update(p, phi, el)).objective;
    if (after <= before) ++non_increasing;
  }
  c << "updates non-increasing in " << non_increasing << "/" << updates;
  c.expect(non_increasing == updates, "no single-element update increases J");
}

void criterion_statistical_sanity(Check& c) {
  const Region region{0, 100, 0, 100};
  const double density = 1e-2;  // mean 100
  auto s = rng::substream(2025, rng::kTagHppp);
  const int draws = 10000;
  std::vector<double> counts(draws);
  double sum = 0.0;
  for (int i = 0; i < draws; ++i) {
    counts[i] = static_cast<double>(sample_hppp(density, region, s).size());
    sum += counts[i];
  }
  const double mean = sum / draws;
  double var = 0.0;
  for (double x : counts) var += (x - mean) * (x - mean);
  var /= draws - 1;
  c << "HPPP mean=" << mean << " var=" << var << " (target 100 +-5%); ";
  c.expect(std::fabs(mean - 100.0) <= 5.0, "HPPP mean within 5% of density*area");
  c.expect(std::fabs(var - 100.0) <= 5.0, "HPPP variance within 5% of density*area");

  auto f = rng::substream(2026, rng::kTagLinkFading);
  const int n = 1000000;
  double fsum = 0.0;
  int above = 0;
  for (int i = 0; i < n; ++i) {
    const double g = sample_fading(FadingModel::Rayleigh, f);
    fsum += g;
    if (g > std::log(2.0)) ++above;
  }
  const double fmean = fsum / n;
  const double med = static_cast<double>(above) / n;
  c << "Rayleigh mean=" << fmean << " P(>ln2)=" << med;
  c.expect(fmean >= 0.997 && fmean <= 1.003, "Rayleigh mean within [0.997, 1.003]");
  c.expect(med >= 0.498 && med <= 0.502, "Rayleigh median at ln 2");
}

void criterion_reproducibility(Check& c) {
  const fs::path base = fs::temp_directory_path() / "sppn_acceptance_repro";
  fs::remove_all(base);
  const std::string scenario = (fs::path(SPPN_SCENARIO_DIR) / "default_fig3.cfg").string();
  const auto run = [&](const char* tag, int workers) -> fs::path {
    const fs::path out = base / tag;
    std::ostringstream cmd;
    cmd << SPPN_SIMULATE_BIN << " --scenario " << scenario
        << " --experiment jammer-sweep --values 0,2 --trials 1500 --seed 5 --workers " << workers
        << " --out " << out.string() << " >/dev/null 2>&1";
    const int rc = std::system(cmd.str().c_str());
    if (rc != 0) c.expect(false, "simulate exited nonzero");
    return out / "results.csv";
  };
  const std::string a = read_file(run("a", 1));
  const std::string b = read_file(run("b", 1));
  const std::string d = read_file(run("d", 5));
  c << "results.csv bytes: " << a.size();
  c.expect(!a.empty(), "run produced output");
  c.expect(a == b, "identical flags give byte-identical results.csv");
  c.expect(a == d, "worker count does not change results.csv");
  fs::remove_all(base);
}

struct Criterion {
  int id;
  const char* name;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "jammer benefit (PSE drops at k=2 and k=8)", criterion_fig3_shape},
      {2, "jammer plateau beyond eight", criterion_fig3_plateau},
      {3, "ACO dominates the fixed ring", criterion_aco_dominance},
      {4, "ACO matches the exhaustive oracle", criterion_aco_oracle},
      {5, "single-link Rayleigh PSE closed form", criterion_pse_analytic},
      {6, "RIS private-zone suppression at N=64", criterion_fig4_suppression},
      {7, "beampattern gain linear in transmit power", criterion_fig4_linearity},
      {8, "coordinate descent vs quantized oracle", criterion_ris_oracle},
      {9, "HPPP and Rayleigh statistics", criterion_statistical_sanity},
      {10, "byte-identical reruns across worker counts", criterion_reproducibility},
  };

  int failures = 0;
  for (const Criterion& cr : criteria) {
    Check check;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (cr.id == 1) check.expect(secs < 120.0, "runtime under two minutes");
    if (cr.id == 4) check.expect(secs < 60.0, "runtime under one minute");
    std::printf("[%s] %2d. %s (%.2fs) %s\n", check.ok ? "PASS" : "FAIL", cr.id, cr.name, secs,
                check.detail.str().c_str());
    if (!check.ok) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures;
}

#include "damplab/sweeper.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>

#include <json.hpp>

#include "damplab/serialize.hpp"
#include "damplab/structure.hpp"

namespace damplab {

namespace {

ChannelKind make_kind(ChannelType type, double param) {
  return type == ChannelType::AmplitudeDamping ? ChannelKind::amplitude_damping(param)
                                               : ChannelKind::phase_damping(param);
}

std::string optional_cell(const std::optional<double>& v) {
  return v ? format_real(*v) : std::string();
}

std::string format_short(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

constexpr std::array<Side, 3> kAllSides = {Side::Left, Side::Right, Side::Both};

// Tracks the worst value seen for one invariant.
class Check {
 public:
  Check(std::string name, double threshold, bool lower_bound = false)
      : result_{std::move(name),
                lower_bound ? std::numeric_limits<double>::infinity()
                            : -std::numeric_limits<double>::infinity(),
                threshold, lower_bound, 0} {}

  void add(double v) {
    ++result_.samples;
    if (std::isnan(v)) v = result_.lower_bound ? -std::numeric_limits<double>::infinity()
                                               : std::numeric_limits<double>::infinity();
    result_.worst = result_.lower_bound ? std::min(result_.worst, v) : std::max(result_.worst, v);
  }

  const InvariantResult& result() const { return result_; }

 private:
  InvariantResult result_;
};

}  // namespace

int exit_status_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::IoError: return kExitIo;
    case ErrorCode::InvariantViolation: return kExitInvariant;
    default: return kExitValidation;
  }
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string sweep_csv_header() {
  return "state_id,p0,gamma,n,side,c_in,c_iterative,c_analytic,c_limit,"
         "factorization_residual,frozen";
}

std::string to_csv(const SweepRow& row) {
  std::string s;
  s += row.state_id + ',' + format_real(row.p0) + ',' + format_real(row.gamma) + ',' +
       std::to_string(row.n) + ',' + row.side + ',' + format_real(row.c_in) + ',' +
       format_real(row.c_iterative) + ',' + optional_cell(row.c_analytic) + ',' +
       optional_cell(row.c_limit) + ',' + optional_cell(row.factorization_residual) + ',' +
       (row.frozen ? "true" : "false");
  return s;
}

std::vector<SweepRow> evaluate_sweep(const SweepRequest& request) {
  const DensityMatrix4 rho = resolve_state(request.state_id, request.params);
  const double c_in = l1_coherence(rho);

  std::vector<SweepRow> rows;
  for (double param : request.params_grid) {
    const ChannelKind kind = make_kind(request.channel, param);
    const bool ad = request.channel == ChannelType::AmplitudeDamping;
    for (Side side : request.sides) {
      const auto states = evolve_trajectory(rho, {kind, side, request.n_max});
      std::vector<DensityMatrix4> left, right;
      if (side == Side::Both) {
        left = evolve_trajectory(rho, {kind, Side::Left, request.n_max});
        right = evolve_trajectory(rho, {kind, Side::Right, request.n_max});
      }
      const bool frozen = frozen_predicate(rho, kind, side).frozen;

      for (std::size_t n = 0; n <= request.n_max; ++n) {
        SweepRow row;
        row.state_id = request.state_id;
        row.p0 = request.params.p0;
        row.gamma = param;
        row.n = n;
        row.side = std::string(to_string(side));
        row.c_in = c_in;
        row.c_iterative = l1_coherence(states[n]);
        row.frozen = frozen;
        if (ad) {
          row.c_analytic = analytic_coherence_ad(rho, param, side, n);
          row.c_limit = asymptotic_coherence_ad(rho, side, param);
          const double gap = std::abs(*row.c_analytic - row.c_iterative);
          if (!(gap <= request.tol_oracle))
            throw Error(ErrorCode::InvariantViolation,
                        "iterative and closed-form coherence differ by " + format_short(gap) +
                            " at param=" + format_real(param) + " side=" + row.side +
                            " n=" + std::to_string(n));
        }
        if (side == Side::Both)
          row.factorization_residual =
              std::abs(row.c_iterative - l1_coherence(left[n]) * l1_coherence(right[n]));
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

OutputFormat parse_output_format(std::string_view text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "table") return OutputFormat::Table;
  if (text == "csv") return OutputFormat::Csv;
  throw Error(ErrorCode::ParseError,
              "format '" + std::string(text) + "' is not one of json|table|csv");
}

CoherenceReport cmd_evolve(const std::string& state_id, const StateParams& params,
                           const ChannelSpec& spec, OutputFormat format, std::ostream& out,
                           double tol_oracle) {
  const DensityMatrix4 rho = resolve_state(state_id, params);
  CoherenceReport report = build_report(rho, spec);

  if (report.c_analytic) {
    const double gap = std::abs(*report.c_analytic - report.trajectory.back().c);
    if (!(gap <= tol_oracle))
      throw Error(ErrorCode::InvariantViolation,
                  "final iterative and closed-form coherence differ by " + format_short(gap));
  }

  switch (format) {
    case OutputFormat::Json:
      out << nlohmann::json(report).dump(2) << '\n';
      break;
    case OutputFormat::Table: {
      out << "state     " << state_id << '\n'
          << "channel   " << to_string(spec.kind.type()) << " param=" << format_real(spec.kind.param())
          << " side=" << to_string(spec.side) << " n=" << spec.n << '\n'
          << "c_in      " << format_real(report.c_in) << '\n';
      out << "    n  coherence\n";
      for (const auto& p : report.trajectory) {
        char line[64];
        std::snprintf(line, sizeof line, "%5zu  %.17g\n", p.n, p.c);
        out << line;
      }
      out << "c_analytic " << (report.c_analytic ? format_real(*report.c_analytic) : "n/a") << '\n'
          << "c_limit    " << (report.c_limit ? format_real(*report.c_limit) : "n/a") << '\n'
          << "frozen     " << (report.frozen.frozen ? "true" : "false") << " ("
          << to_string(report.frozen.reason) << ")\n";
      break;
    }
    case OutputFormat::Csv: {
      SweepRequest request{state_id,   params,       spec.kind.type(), {spec.kind.param()},
                           {spec.side}, spec.n, tol_oracle};
      out << sweep_csv_header() << '\n';
      for (const auto& row : evaluate_sweep(request)) out << to_csv(row) << '\n';
      break;
    }
  }
  return report;
}

std::vector<Fig1Row> fig1_rows(const Fig1Options& options) {
  if (options.p0_steps < 2)
    throw Error(ErrorCode::ParamOutOfRange, "p0_steps must be at least 2");

  std::vector<Fig1Row> rows;
  rows.reserve(2 * options.gammas.size() * options.p0_steps);
  for (const std::string family : {"m2", "m3"}) {
    for (double gamma : options.gammas) {
      const ChannelSpec spec{ChannelKind::amplitude_damping(gamma), Side::Left, options.n};
      for (std::size_t i = 0; i < options.p0_steps; ++i) {
        const double p0 = static_cast<double>(i) / static_cast<double>(options.p0_steps - 1);
        const DensityMatrix4 rho = family == "m2" ? build_named(family::M2{p0})
                                                  : build_named(family::M3{p0});
        rows.push_back({family, gamma, p0, options.n, l1_coherence(apply_n(rho, spec))});
      }
    }
  }
  return rows;
}

std::string fig1_csv(const std::vector<Fig1Row>& rows) {
  std::string s = "family,gamma,p0,n,coherence\n";
  for (const auto& r : rows)
    s += r.family + ',' + format_real(r.gamma) + ',' + format_real(r.p0) + ',' +
         std::to_string(r.n) + ',' + format_real(r.coherence) + '\n';
  return s;
}

std::vector<Fig1Row> cmd_fig1(const Fig1Options& options, const std::string& path) {
  auto rows = fig1_rows(options);
  const std::string text = fig1_csv(rows);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "failed writing '" + path + "'");
  return rows;
}

bool VerifyReport::all_passed() const {
  return std::all_of(results.begin(), results.end(),
                     [](const InvariantResult& r) { return r.passed(); });
}

VerifyReport run_verify(const VerifyOptions& options) {
  const double tol = options.tol_oracle;
  const std::uint64_t base = options.base_seed;
  constexpr std::array<double, 5> kGammas = {0.1, 0.25, 0.5, 0.75, 0.9};
  constexpr std::array<double, 3> kFrozenParams = {0.2, 0.5, 0.8};
  constexpr std::size_t kMaxN = 20;
  constexpr std::size_t kStructured = 200;

  Check identities("operator_identities", 1e-15);
  Check nilpotent("e1_squared_zero", 0.0);
  Check closed_form("closed_form_vs_iterative", tol);
  Check analytic("analytic_vs_iterative_coherence", tol);
  Check monotone("coherence_nonincreasing", tol);
  Check trace("trace_preservation", tol);
  Check bound("coherence_bound_violation", 0.0);
  Check commute("left_right_commutation", 1e-13);
  Check semigroup("semigroup_composition", 1e-13);
  Check factor("factorization_both_vs_left_times_right", tol);
  Check right_only("factorization_right_equals_decay", tol);
  Check sound("frozen_soundness", tol);
  Check complete("frozen_completeness_margin", 1e-6, true);
  Check contrast_pd("phase_damping_contrast_frozen", tol);
  Check contrast_ad("phase_damping_contrast_ad_margin", 1e-6, true);

  for (int k = 0; k <= 10; ++k) {
    const double gamma = k / 10.0;
    const auto [e0, e1] = kraus_ops(ChannelKind::amplitude_damping(gamma));
    nilpotent.add(max_abs_diff(e1 * e1, Matrix2{}));
    identities.add(max_abs_diff(e0 * e1, e1));
    identities.add(max_abs_diff(e1 * e0, e1 * std::sqrt(1.0 - gamma)));
  }

  for (std::size_t s = 0; s < options.seeds; ++s) {
    const DensityMatrix4 rho = random_density(base + s);
    const double c_in = l1_coherence(rho);
    bound.add(std::max({0.0, -c_in, c_in - 3.0}));
    for (double gamma : kGammas) {
      const ChannelKind kind = ChannelKind::amplitude_damping(gamma);
      for (Side side : kAllSides) {
        DensityMatrix4 cur = rho;
        double prev_c = c_in;
        for (std::size_t n = 1; n <= kMaxN; ++n) {
          cur = apply_n(cur, {kind, side, 1});
          const double c = l1_coherence(cur);
          closed_form.add(max_abs_diff(closed_form_ad(rho, gamma, side, n).matrix(), cur.matrix()));
          analytic.add(std::abs(analytic_coherence_ad(rho, gamma, side, n) - c));
          monotone.add(c - prev_c);
          trace.add(std::abs(cur.matrix().trace() - 1.0));
          bound.add(std::max({0.0, -c, c - 3.0}));
          prev_c = c;
        }
      }
    }
  }

  // Structural identities on a smaller sample; each is exact algebra.
  const std::size_t structural = std::max<std::size_t>(options.seeds / 10, 20);
  for (std::size_t s = 0; s < structural; ++s) {
    const DensityMatrix4 rho = random_density(base + 1'000'000 + s);
    for (double gamma : kGammas) {
      for (ChannelKind kind : {ChannelKind::amplitude_damping(gamma), ChannelKind::phase_damping(gamma)}) {
        for (std::size_t n = 1; n <= 6; ++n) {
          const auto lr = apply_n(apply_n(rho, {kind, Side::Left, n}), {kind, Side::Right, n});
          const auto rl = apply_n(apply_n(rho, {kind, Side::Right, n}), {kind, Side::Left, n});
          commute.add(max_abs_diff(lr.matrix(), rl.matrix()));
          commute.add(max_abs_diff(lr.matrix(), apply_n(rho, {kind, Side::Both, n}).matrix()));
          for (std::size_t m = 1; m <= 4; ++m) {
            const auto split = apply_n(apply_n(rho, {kind, Side::Both, n}), {kind, Side::Both, m});
            semigroup.add(
                max_abs_diff(split.matrix(), apply_n(rho, {kind, Side::Both, n + m}).matrix()));
          }
        }
      }
    }
  }

  const std::size_t factor_states = std::max<std::size_t>(options.seeds / 20, 50);
  for (std::size_t s = 0; s < factor_states; ++s) {
    const DensityMatrix4 rho = random_max_incoherent_coherent(base + 2'000'000 + s);
    for (double gamma : kFrozenParams) {
      const ChannelKind kind = ChannelKind::amplitude_damping(gamma);
      for (std::size_t n = 1; n <= 10; ++n) {
        const double both = l1_coherence(apply_n(rho, {kind, Side::Both, n}));
        const double left = l1_coherence(apply_n(rho, {kind, Side::Left, n}));
        const double right = l1_coherence(apply_n(rho, {kind, Side::Right, n}));
        factor.add(std::abs(both - left * right));
        right_only.add(std::abs(right - std::pow(1.0 - gamma, n / 2.0)));
      }
    }
  }

  // Soundness: every state the predicate calls frozen keeps its coherence.
  auto check_sound = [&](const DensityMatrix4& rho, ChannelType type, Side side) {
    for (double param : kFrozenParams) {
      const ChannelKind kind = make_kind(type, param);
      if (!frozen_predicate(rho, kind, side).frozen) {
        sound.add(std::numeric_limits<double>::infinity());
        continue;
      }
      const double c_in = l1_coherence(rho);
      DensityMatrix4 cur = rho;
      for (std::size_t n = 1; n <= 15; ++n) {
        cur = apply_n(cur, {kind, side, 1});
        sound.add(std::abs(l1_coherence(cur) - c_in));
      }
    }
  };
  for (std::size_t s = 0; s < kStructured; ++s) {
    const std::uint64_t seed = base + 3'000'000 + s;
    check_sound(random_incoherent_coherent(seed, true), ChannelType::AmplitudeDamping, Side::Left);
    check_sound(random_coherent_incoherent(seed, true), ChannelType::AmplitudeDamping, Side::Right);
    check_sound(random_incoherent(seed), ChannelType::AmplitudeDamping, Side::Both);
    check_sound(random_incoherent_coherent(seed, false), ChannelType::PhaseDamping, Side::Left);
    check_sound(random_coherent_incoherent(seed, false), ChannelType::PhaseDamping, Side::Right);
    check_sound(random_incoherent(seed), ChannelType::PhaseDamping, Side::Both);
  }

  // Completeness: states rejected by the predicate lose coherence by n = 15.
  const ChannelKind half = ChannelKind::amplitude_damping(0.5);
  std::size_t accepted = 0;
  for (std::uint64_t s = 0; accepted < kStructured; ++s) {
    const std::uint64_t seed = base + 4'000'000 + s;
    const Side side = kAllSides[s % 3];
    DensityMatrix4 rho = random_density(seed);
    switch ((s / 3) % 3) {
      case 0: break;
      case 1: rho = random_incoherent_coherent(seed, false); break;
      case 2: rho = random_coherent_incoherent(seed, false); break;
    }
    const double c_in = l1_coherence(rho);
    if (c_in < 0.05 || frozen_predicate(rho, half, side).frozen) continue;
    ++accepted;
    complete.add(c_in - l1_coherence(apply_n(rho, {half, side, 15})));
  }

  const DensityMatrix4 m2 = build_named(family::M2{0.5});
  const double c_m2 = l1_coherence(m2);
  for (double lambda : kFrozenParams) {
    const ChannelKind pd = ChannelKind::phase_damping(lambda);
    DensityMatrix4 cur = m2;
    for (std::size_t n = 1; n <= 15; ++n) {
      cur = apply_n(cur, {pd, Side::Left, 1});
      contrast_pd.add(std::abs(l1_coherence(cur) - c_m2));
    }
  }
  contrast_ad.add(c_m2 - l1_coherence(apply_n(m2, {half, Side::Left, 15})));

  VerifyReport report;
  for (const Check* c : {&identities, &nilpotent, &closed_form, &analytic, &monotone, &trace,
                         &bound, &commute, &semigroup, &factor, &right_only, &sound, &complete,
                         &contrast_pd, &contrast_ad})
    report.results.push_back(c->result());
  return report;
}

std::string verify_csv(const VerifyReport& report) {
  std::string s = "invariant,worst,comparison,threshold,samples,status\n";
  for (const auto& r : report.results)
    s += r.name + ',' + format_real(r.worst) + ',' + (r.lower_bound ? ">" : "<=") + ',' +
         format_real(r.threshold) + ',' + std::to_string(r.samples) + ',' +
         (r.passed() ? "pass" : "FAIL") + '\n';
  return s;
}

void print_verify_table(const VerifyReport& report, std::ostream& out) {
  char line[160];
  std::snprintf(line, sizeof line, "%-42s %12s %3s %10s %9s  %s\n", "invariant", "worst", "", "threshold",
                "samples", "status");
  out << line;
  for (const auto& r : report.results) {
    std::snprintf(line, sizeof line, "%-42s %12.4e %3s %10.1e %9zu  %s\n", r.name.c_str(), r.worst,
                  r.lower_bound ? ">" : "<=", r.threshold, r.samples, r.passed() ? "pass" : "FAIL");
    out << line;
  }
}

double tol_oracle_from_env() {
  const char* raw = std::getenv("DAMPLAB_TOL");
  if (raw == nullptr || *raw == '\0') return kTolOracle;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(v > 0.0) || !std::isfinite(v))
    throw Error(ErrorCode::ParseError, std::string("DAMPLAB_TOL='") + raw + "' is not a positive number");
  return v;
}

}  // namespace damplab

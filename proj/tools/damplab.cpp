// damplab: coherence evolution of two-qubit states under repeated damping.
//
// Usage:
//   damplab evolve --state m2 --p0 0.5 --channel ad --param 0.5 --side left --n 2
//   damplab fig1   --out fig1.csv [--gammas 0.2 0.5 0.8] [--n 2] [--p0-steps 101]
//   damplab sweep  --state m3 --params 0.2 0.5 --sides left both --n 10 [--out rows.csv]
//   damplab verify [--seeds 1000] [--seed 1] [--tol 1e-12] [--out report.csv]
//
// Exit status: 0 success, 2 validation error, 3 invariant failure, 4 I/O.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "damplab/serialize.hpp"
#include "damplab/sweeper.hpp"

namespace {

using namespace damplab;

struct StateArgs {
  std::string id;
  StateParams params;
};

void add_state_options(CLI::App* cmd, StateArgs& args) {
  cmd->add_option("--state", args.id, "m1|m2|m3|bell|incoco|coinco|file:<path>")->required();
  cmd->add_option("--p0", args.params.p0, "mixing weight of the |0> branch")->capture_default_str();
  cmd->add_option("--theta0", args.params.theta0, "phase of the first coherent part (incoco/coinco)");
  cmd->add_option("--theta1", args.params.theta1, "phase of the second coherent part (incoco/coinco)");
}

// Writes `text` to `path`, or to stdout when path is empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  out << text;
  if (!out.flush()) throw Error(ErrorCode::IoError, "failed writing '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qubit coherence under amplitude and phase damping"};
  app.require_subcommand(1);

  // evolve
  StateArgs evolve_state;
  std::string channel = "ad";
  double param = 0.0;
  std::string side = "left";
  std::size_t steps = 0;
  std::string format = "table";
  std::string spec_json;
  std::string evolve_out;
  auto* evolve = app.add_subcommand("evolve", "coherence trajectory and frozen verdict for one state");
  add_state_options(evolve, evolve_state);
  evolve->add_option("--channel", channel, "ad|pd")->capture_default_str();
  evolve->add_option("--param", param, "gamma (ad) or lambda (pd) in [0, 1]");
  evolve->add_option("--side", side, "left|right|both")->capture_default_str();
  evolve->add_option("--n", steps, "number of channel uses")->capture_default_str();
  evolve->add_option("--format", format, "json|table|csv")->capture_default_str();
  evolve->add_option("--spec", spec_json,
                     R"(channel spec as JSON {"kind","param","side","n"}; overrides the flags)");
  evolve->add_option("--out", evolve_out, "output file (default stdout)");

  // fig1
  Fig1Options fig1_options;
  std::string fig1_out = "fig1.csv";
  auto* fig1 = app.add_subcommand("fig1", "m2/m3 coherence after left amplitude damping, swept over p0");
  fig1->add_option("--gammas", fig1_options.gammas, "damping strengths")->capture_default_str();
  fig1->add_option("--n", fig1_options.n, "number of channel uses")->capture_default_str();
  fig1->add_option("--p0-steps", fig1_options.p0_steps, "grid points in p0 over [0, 1]")
      ->capture_default_str();
  fig1->add_option("--out", fig1_out, "CSV output path")->capture_default_str();

  // sweep
  StateArgs sweep_state;
  std::string sweep_channel = "ad";
  std::vector<double> sweep_params{0.2, 0.5, 0.8};
  std::vector<std::string> sweep_sides{"left", "right", "both"};
  std::size_t sweep_n = 10;
  std::string sweep_out;
  auto* sweep = app.add_subcommand("sweep", "per-step rows over a parameter grid, as CSV");
  add_state_options(sweep, sweep_state);
  sweep->add_option("--channel", sweep_channel, "ad|pd")->capture_default_str();
  sweep->add_option("--params", sweep_params, "gamma or lambda values")->capture_default_str();
  sweep->add_option("--sides", sweep_sides, "subset of left right both")->capture_default_str();
  sweep->add_option("--n", sweep_n, "largest number of channel uses")->capture_default_str();
  sweep->add_option("--out", sweep_out, "output file (default stdout)");

  // verify
  VerifyOptions verify_options;
  std::optional<double> verify_tol;
  std::string verify_out;
  auto* verify = app.add_subcommand("verify", "randomised invariant battery");
  verify->add_option("--seeds", verify_options.seeds, "random states in the main grid")
      ->capture_default_str();
  verify->add_option("--seed", verify_options.base_seed, "first seed")->capture_default_str();
  verify->add_option("--tol", verify_tol, "oracle tolerance (overrides DAMPLAB_TOL)");
  verify->add_option("--out", verify_out, "write the residual table as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    const double tol_oracle = tol_oracle_from_env();

    if (*evolve) {
      ChannelSpec spec = [&] {
        if (!spec_json.empty()) {
          nlohmann::json j;
          try {
            j = nlohmann::json::parse(spec_json);
          } catch (const nlohmann::json::parse_error& e) {
            throw Error(ErrorCode::ParseError, std::string("--spec: ") + e.what());
          }
          return channel_spec_from_json(j);
        }
        const ChannelKind kind = parse_channel_type(channel) == ChannelType::AmplitudeDamping
                                     ? ChannelKind::amplitude_damping(param)
                                     : ChannelKind::phase_damping(param);
        return ChannelSpec{kind, parse_side(side), steps};
      }();
      std::ostringstream text;
      cmd_evolve(evolve_state.id, evolve_state.params, spec, parse_output_format(format), text,
                 tol_oracle);
      emit(evolve_out, text.str());
    } else if (*fig1) {
      const auto rows = cmd_fig1(fig1_options, fig1_out);
      std::cerr << "wrote " << rows.size() << " rows to " << fig1_out << '\n';
    } else if (*sweep) {
      SweepRequest request;
      request.state_id = sweep_state.id;
      request.params = sweep_state.params;
      request.channel = parse_channel_type(sweep_channel);
      request.params_grid = sweep_params;
      for (const auto& s : sweep_sides) request.sides.push_back(parse_side(s));
      request.n_max = sweep_n;
      request.tol_oracle = tol_oracle;
      std::string text = sweep_csv_header() + '\n';
      for (const auto& row : evaluate_sweep(request)) text += to_csv(row) + '\n';
      emit(sweep_out, text);
    } else if (*verify) {
      verify_options.tol_oracle = verify_tol.value_or(tol_oracle);
      const VerifyReport report = run_verify(verify_options);
      print_verify_table(report, std::cout);
      if (!verify_out.empty()) emit(verify_out, verify_csv(report));
      if (!report.all_passed()) {
        for (const auto& r : report.results)
          if (!r.passed()) std::cerr << "invariant failed: " << r.name << '\n';
        return kExitInvariant;
      }
    }
  } catch (const Error& e) {
    std::cerr << "damplab: " << e.what() << '\n';
    return exit_status_for(e.code());
  }
  return kExitOk;
}

#ifndef DAMPLAB_SWEEPER_HPP
#define DAMPLAB_SWEEPER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "damplab/channels.hpp"
#include "damplab/coherence.hpp"
#include "damplab/error.hpp"
#include "damplab/states.hpp"

namespace damplab {

/// Process exit statuses used by the command line tool.
enum ExitStatus : int {
  kExitOk = 0,
  kExitValidation = 2,
  kExitInvariant = 3,
  kExitIo = 4,
};

int exit_status_for(ErrorCode code) noexcept;

/// Formats a double with 17 significant digits ("%.17g").
std::string format_real(double v);

/// One evaluated grid point of a sweep.
struct SweepRow {
  std::string state_id;
  double p0 = 0.0;
  double gamma = 0.0;  ///< channel parameter (lambda for phase damping)
  std::size_t n = 0;
  std::string side;
  double c_in = 0.0;
  double c_iterative = 0.0;
  std::optional<double> c_analytic;              ///< amplitude damping only
  std::optional<double> c_limit;                 ///< amplitude damping only
  std::optional<double> factorization_residual;  ///< side == both only
  bool frozen = false;
};

std::string sweep_csv_header();
std::string to_csv(const SweepRow& row);

struct SweepRequest {
  std::string state_id;
  StateParams params;
  ChannelType channel = ChannelType::AmplitudeDamping;
  std::vector<double> params_grid;  ///< gamma or lambda values
  std::vector<Side> sides;
  std::size_t n_max = 0;
  double tol_oracle = kTolOracle;
};

/// Rows for every (param, side, n = 0..n_max), in that nesting order. Throws
/// Error{InvariantViolation} if an amplitude-damping row's iterative and
/// closed-form coherence differ by more than tol_oracle.
std::vector<SweepRow> evaluate_sweep(const SweepRequest& request);

enum class OutputFormat { Json, Table, Csv };
OutputFormat parse_output_format(std::string_view text);

/// Evolution report for one state and channel; writes it to `out` in the
/// requested format (csv emits one SweepRow per step).
CoherenceReport cmd_evolve(const std::string& state_id, const StateParams& params,
                           const ChannelSpec& spec, OutputFormat format, std::ostream& out,
                           double tol_oracle = kTolOracle);

struct Fig1Options {
  std::vector<double> gammas{0.2, 0.5, 0.8};
  std::size_t n = 2;
  std::size_t p0_steps = 101;
};

struct Fig1Row {
  std::string family;  ///< "m2" | "m3"
  double gamma;
  double p0;
  std::size_t n;
  double coherence;
};

/// Left-side amplitude damping of the m2 and m3 families over a uniform p0
/// grid; coherence from the iterative evolution.
std::vector<Fig1Row> fig1_rows(const Fig1Options& options);
/// CSV text with header family,gamma,p0,n,coherence (LF line endings).
std::string fig1_csv(const std::vector<Fig1Row>& rows);
/// Writes fig1_csv to `path`; Error{IoError} on failure.
std::vector<Fig1Row> cmd_fig1(const Fig1Options& options, const std::string& path);

struct VerifyOptions {
  std::size_t seeds = 1000;
  std::uint64_t base_seed = 1;
  double tol_oracle = kTolOracle;
};

struct InvariantResult {
  std::string name;
  double worst = 0.0;  ///< worst residual, or smallest margin for lower bounds
  double threshold = 0.0;
  bool lower_bound = false;  ///< pass iff worst > threshold (else worst <= threshold)
  std::size_t samples = 0;
  bool passed() const { return lower_bound ? worst > threshold : worst <= threshold; }
};

struct VerifyReport {
  std::vector<InvariantResult> results;
  bool all_passed() const;
};

/// Randomised invariant battery: closed form vs iteration, analytic coherence,
/// operator identities, commutation, composition, factorisation, frozen
/// soundness and completeness, phase-damping contrast.
VerifyReport run_verify(const VerifyOptions& options);
/// CSV with header invariant,worst,comparison,threshold,samples,status.
std::string verify_csv(const VerifyReport& report);
void print_verify_table(const VerifyReport& report, std::ostream& out);

/// Reads DAMPLAB_TOL when set; Error{ParseError} for a non-positive or
/// unparsable value.
double tol_oracle_from_env();

}  // namespace damplab

#endif  // DAMPLAB_SWEEPER_HPP

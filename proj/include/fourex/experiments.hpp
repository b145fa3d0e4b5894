#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "fourex/approximant.hpp"
#include "fourex/baseline.hpp"
#include "fourex/extension.hpp"
#include "fourex/refined.hpp"

namespace fourex {

/// Abscissae t_l = l/M, l = -M..M.
std::vector<double> uniform_abscissae(int half_count);

/// Catalog function sampled on the uniform grid.
std::vector<cdouble> sample_catalog(const std::string& name, double omega, int half_count);

/// Process-wide operator memo keyed by (config, refine); concurrent callers
/// share the same immutable operator.
std::shared_ptr<const ExtensionOperator> shared_operator(const ExtensionConfig& config);
std::shared_ptr<const ExtensionOperator> shared_fine_operator(const RefinedConfig& rc);

/// One end-to-end boundary-method run of a catalog function, including the
/// grid-refined variant for refine > 1. The operator comes from the shared
/// memo; `seconds` times the pipeline only (warm operator).
struct ApproxRun {
    FourierApproximant approximant;
    double max_error = 0.0;
    double seconds = 0.0;
};
ApproxRun approximate_catalog(const std::string& name, double omega, int half_count,
                              const ExtensionConfig& config, int refine = 1,
                              int density = 10);

/// Full-data baseline run of a catalog function.
ApproxRun fulldata_catalog(const std::string& name, double omega, int half_count,
                           const FullDataConfig& cfg, int density = 10);

enum class SweepParameter { extension_ratio, boundary_nodes, half_count, refine, oversampling };
SweepParameter parse_sweep_parameter(const std::string& name);

struct SweepPoint {
    double value = 0.0;
    double max_error = 0.0; // NaN when the run failed
    double seconds = 0.0;
    bool ok = false;
    std::string message;
};

/// One row per swept value; invalid parameter combinations produce a NaN row
/// instead of aborting the sweep. Values must be positive and strictly
/// increasing.
std::vector<SweepPoint> run_sweep(SweepParameter parameter, const std::vector<double>& values,
                                  const ExtensionConfig& base, int refine,
                                  const std::string& name, double omega, int half_count,
                                  int density = 10);

/// Minimal M in [lower, upper] with error_at(M) <= delta. Bisection with a
/// +-2-step retry guard so isolated non-monotonic dips or spikes near the
/// threshold do not derail the bracket, then a short linear scan pins the
/// exact minimum. error_at evaluations are memoized. Throws numerical_error
/// when no M in the bounds qualifies.
struct ResolutionQuery {
    double omega = 0.0;
    double delta = 0.0;
    int lower = 0;
    int upper = 0;
};
int minimal_nodes(const std::function<double(int)>& error_at, double delta, int lower, int upper);

/// Resolution constant probes R(omega, delta) for the plane wave
/// exp(i*pi*omega*t), boundary method and full-data baseline.
int boundary_resolution(const ResolutionQuery& q, const ExtensionConfig& config, int refine = 1);
int fulldata_resolution(const ResolutionQuery& q, const FullDataConfig& cfg);

/// Table-1 procedure: for each omega in [omega_lo, omega_hi], scan the
/// extension ratio upward and record the first value whose plane-wave error
/// drops below `threshold`; the estimate is the mean over the omegas that
/// qualified.
struct THat1Estimate {
    double mean = 0.0;
    int qualified = 0;
    int total = 0;
};
THat1Estimate estimate_t_hat1(double oversampling, int boundary_nodes, int half_count,
                              double ratio_lo, double ratio_hi, double ratio_step,
                              int omega_lo, int omega_hi, double threshold = 1e-13);

/// Wall-clock of the samples->coefficients pipeline. `warm_seconds` is the
/// median of `repeats` runs against a prebuilt operator; `cold_seconds`
/// includes one operator precompute.
struct BenchRow {
    int half_count = 0;
    double warm_seconds = 0.0;
    double cold_seconds = 0.0;
};
std::vector<BenchRow> run_bench(const std::vector<int>& half_counts,
                                const ExtensionConfig& config, int repeats = 5);

/// Least-squares slope of log(time) against log(M).
double loglog_slope(const std::vector<BenchRow>& rows);

} // namespace fourex

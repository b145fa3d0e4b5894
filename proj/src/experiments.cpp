#include "fourex/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <tuple>

#include "fourex/special_functions.hpp"

namespace fourex {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

using OperatorKey = std::tuple<double, int, int, double, int>; // T, m, n, tau, refine

OperatorKey key_of(const ExtensionConfig& c, int refine) {
    return {c.extension_ratio, c.boundary_nodes, c.basis_order, c.truncation, refine};
}

std::shared_ptr<const ExtensionOperator> memoized_operator(const ExtensionConfig& cfg,
                                                           int refine) {
    static std::mutex mutex;
    static std::map<OperatorKey, std::shared_ptr<const ExtensionOperator>> cache;
    const OperatorKey key = key_of(cfg, refine);
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto op = std::make_shared<const ExtensionOperator>(precompute_operator(cfg));
    std::lock_guard<std::mutex> lock(mutex);
    return cache.try_emplace(key, std::move(op)).first->second;
}

std::function<cdouble(double)> reference_of(const std::string& name, double omega) {
    return [name, omega](double t) { return test_function_value(name, t, omega); };
}

} // namespace

std::vector<double> uniform_abscissae(int half_count) {
    if (half_count < 1) throw std::invalid_argument("uniform_abscissae: M must be positive");
    std::vector<double> t(2 * static_cast<std::size_t>(half_count) + 1);
    for (int l = -half_count; l <= half_count; ++l) {
        t[l + half_count] = static_cast<double>(l) / half_count;
    }
    return t;
}

std::vector<cdouble> sample_catalog(const std::string& name, double omega, int half_count) {
    return test_function(name, uniform_abscissae(half_count), omega);
}

std::shared_ptr<const ExtensionOperator> shared_operator(const ExtensionConfig& config) {
    return memoized_operator(config, 1);
}

std::shared_ptr<const ExtensionOperator> shared_fine_operator(const RefinedConfig& rc) {
    return memoized_operator(rc.fine, rc.refine);
}

ApproxRun approximate_catalog(const std::string& name, double omega, int half_count,
                              const ExtensionConfig& config, int refine, int density) {
    const std::vector<cdouble> samples = sample_catalog(name, omega, half_count);

    if (refine <= 1) {
        auto op = shared_operator(config);
        const auto start = Clock::now();
        const PeriodicSamples period = extend_periodically(*op, samples, half_count);
        FourierApproximant approx = coefficients_from_period(period);
        const double elapsed = seconds_since(start);
        const double err = max_error(approx, reference_of(name, omega), half_count, density);
        return ApproxRun{std::move(approx), err, elapsed};
    }

    const RefinedConfig rc = make_refined(config, refine);
    auto fine_op = shared_fine_operator(rc);
    const std::vector<double> fine_t = fine_boundary_abscissae(rc, half_count);
    const std::vector<cdouble> fine_values = test_function(name, fine_t, omega);
    const int mr = rc.fine.boundary_nodes;

    const auto start = Clock::now();
    const std::vector<cdouble> g = refined_boundary_data(
        std::span<const cdouble>(fine_values).first(mr),
        std::span<const cdouble>(fine_values).subspan(mr), rc);
    const std::vector<cdouble> gc = compute_extension_values(*fine_op, g);
    const PeriodicSamples period = assemble_refined(samples, gc, rc, half_count);
    FourierApproximant approx = coefficients_from_period(period);
    const double elapsed = seconds_since(start);
    const double err = max_error(approx, reference_of(name, omega), half_count, density);
    return ApproxRun{std::move(approx), err, elapsed};
}

ApproxRun fulldata_catalog(const std::string& name, double omega, int half_count,
                           const FullDataConfig& cfg, int density) {
    const std::vector<cdouble> samples = sample_catalog(name, omega, half_count);
    const auto start = Clock::now();
    FourierApproximant approx = fulldata_fe(samples, cfg);
    const double elapsed = seconds_since(start);
    const double err = max_error(approx, reference_of(name, omega), half_count, density);
    return ApproxRun{std::move(approx), err, elapsed};
}

SweepParameter parse_sweep_parameter(const std::string& name) {
    if (name == "Tdelta") return SweepParameter::extension_ratio;
    if (name == "mdelta") return SweepParameter::boundary_nodes;
    if (name == "M") return SweepParameter::half_count;
    if (name == "R") return SweepParameter::refine;
    if (name == "gamma") return SweepParameter::oversampling;
    throw std::invalid_argument("sweep: unknown parameter '" + name +
                                "' (expected Tdelta, mdelta, M, R or gamma)");
}

std::vector<SweepPoint> run_sweep(SweepParameter parameter, const std::vector<double>& values,
                                  const ExtensionConfig& base, int refine,
                                  const std::string& name, double omega, int half_count,
                                  int density) {
    if (values.empty()) throw std::invalid_argument("sweep: empty value list");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!(values[i] > 0.0)) throw std::invalid_argument("sweep: values must be positive");
        if (i > 0 && !(values[i] > values[i - 1])) {
            throw std::invalid_argument("sweep: values must be strictly increasing");
        }
    }

    std::vector<SweepPoint> rows;
    rows.reserve(values.size());
    for (const double value : values) {
        SweepPoint row;
        row.value = value;
        try {
            double t_ratio = base.extension_ratio;
            int m = base.boundary_nodes;
            double gamma = base.oversampling;
            int m_half = half_count;
            int r = refine;
            switch (parameter) {
                case SweepParameter::extension_ratio: t_ratio = value; break;
                case SweepParameter::boundary_nodes: m = static_cast<int>(std::lround(value)); break;
                case SweepParameter::half_count: m_half = static_cast<int>(std::lround(value)); break;
                case SweepParameter::refine: r = static_cast<int>(std::lround(value)); break;
                case SweepParameter::oversampling: gamma = value; break;
            }
            const ExtensionConfig cfg = make_config(t_ratio, m, gamma, base.truncation);
            const ApproxRun run = approximate_catalog(name, omega, m_half, cfg, r, density);
            row.max_error = run.max_error;
            row.seconds = run.seconds;
            row.ok = std::isfinite(run.max_error);
            if (!row.ok) {
                row.max_error = std::numeric_limits<double>::quiet_NaN();
                row.message = "non-finite result";
            }
        } catch (const std::exception& e) {
            row.max_error = std::numeric_limits<double>::quiet_NaN();
            row.ok = false;
            row.message = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

int minimal_nodes(const std::function<double(int)>& error_at, double delta, int lower,
                  int upper) {
    if (lower < 1 || upper < lower) throw std::invalid_argument("minimal_nodes: bad bounds");
    if (!(delta > 0.0)) throw std::invalid_argument("minimal_nodes: delta must be positive");

    std::map<int, double> memo;
    const auto err = [&](int m) {
        if (auto it = memo.find(m); it != memo.end()) return it->second;
        double e;
        try {
            e = error_at(m);
        } catch (const std::exception&) {
            e = std::numeric_limits<double>::infinity();
        }
        if (!std::isfinite(e)) e = std::numeric_limits<double>::infinity();
        memo.emplace(m, e);
        return e;
    };
    // A point "achieves" if the error is at or below delta within two grid
    // steps; this absorbs isolated dips without moving the final answer,
    // which is pinned by a raw scan at the end.
    const auto achieves = [&](int m) {
        for (int probe = m; probe <= std::min(m + 2, upper); ++probe) {
            if (err(probe) <= delta) return true;
        }
        for (int probe = m - 1; probe >= std::max(m - 2, lower); --probe) {
            if (err(probe) <= delta) return true;
        }
        return false;
    };

    if (!achieves(upper)) {
        throw numerical_error("minimal_nodes: no M in bounds reaches the target accuracy");
    }

    int lo = lower;
    int hi = upper;
    if (achieves(lower)) {
        hi = lower;
    } else {
        while (hi - lo > 1) {
            const int mid = lo + (hi - lo) / 2;
            if (achieves(mid)) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
    }
    for (int m = std::max(lower, hi - 3); m <= upper; ++m) {
        if (err(m) <= delta) return m;
    }
    throw numerical_error("minimal_nodes: bracket collapsed without a qualifying M");
}

int boundary_resolution(const ResolutionQuery& q, const ExtensionConfig& config, int refine) {
    return minimal_nodes(
        [&](int m) {
            return approximate_catalog("exp_iomega", q.omega, m, config, refine).max_error;
        },
        q.delta, q.lower, q.upper);
}

int fulldata_resolution(const ResolutionQuery& q, const FullDataConfig& cfg) {
    return minimal_nodes(
        [&](int m) { return fulldata_catalog("exp_iomega", q.omega, m, cfg).max_error; },
        q.delta, q.lower, q.upper);
}

THat1Estimate estimate_t_hat1(double oversampling, int boundary_nodes, int half_count,
                              double ratio_lo, double ratio_hi, double ratio_step,
                              int omega_lo, int omega_hi, double threshold) {
    if (!(ratio_lo > 1.0) || !(ratio_hi > ratio_lo) || !(ratio_step > 0.0)) {
        throw std::invalid_argument("estimate_t_hat1: bad ratio range");
    }
    THat1Estimate est;
    est.total = omega_hi - omega_lo + 1;
    std::vector<double> first_ratio(static_cast<std::size_t>(est.total),
                                    std::numeric_limits<double>::quiet_NaN());
    int remaining = est.total;

    const int steps = static_cast<int>(std::floor((ratio_hi - ratio_lo) / ratio_step + 0.5));
    for (int s = 0; s <= steps && remaining > 0; ++s) {
        const double ratio = ratio_lo + s * ratio_step;
        ExtensionConfig cfg;
        try {
            cfg = make_config(ratio, boundary_nodes, oversampling);
            (void)shared_operator(cfg); // one SVD per ratio, shared by all omegas
        } catch (const std::exception&) {
            continue; // basis not resolvable at this ratio
        }
        for (int w = omega_lo; w <= omega_hi; ++w) {
            auto& slot = first_ratio[static_cast<std::size_t>(w - omega_lo)];
            if (!std::isnan(slot)) continue;
            const ApproxRun run =
                approximate_catalog("exp_iomega", static_cast<double>(w), half_count, cfg);
            if (run.max_error < threshold) {
                slot = ratio;
                --remaining;
            }
        }
    }

    double sum = 0.0;
    for (const double r : first_ratio) {
        if (!std::isnan(r)) {
            sum += r;
            ++est.qualified;
        }
    }
    est.mean = est.qualified > 0 ? sum / est.qualified : std::numeric_limits<double>::quiet_NaN();
    return est;
}

std::vector<BenchRow> run_bench(const std::vector<int>& half_counts,
                                const ExtensionConfig& config, int repeats) {
    if (repeats < 1) throw std::invalid_argument("run_bench: repeats must be positive");
    for (std::size_t i = 1; i < half_counts.size(); ++i) {
        if (half_counts[i] <= half_counts[i - 1]) {
            throw std::invalid_argument("run_bench: M list must be increasing");
        }
    }

    std::vector<BenchRow> rows;
    rows.reserve(half_counts.size());
    for (const int m : half_counts) {
        const std::vector<cdouble> samples = sample_catalog("f3", 0.0, m);

        const auto cold_start = Clock::now();
        const ExtensionOperator op = precompute_operator(config);
        coefficients_from_period(extend_periodically(op, samples, m));
        const double cold = seconds_since(cold_start);

        std::vector<double> warm(static_cast<std::size_t>(repeats));
        for (double& w : warm) {
            const auto start = Clock::now();
            coefficients_from_period(extend_periodically(op, samples, m));
            w = seconds_since(start);
        }
        std::sort(warm.begin(), warm.end());
        rows.push_back(BenchRow{m, warm[warm.size() / 2], cold});
    }
    return rows;
}

double loglog_slope(const std::vector<BenchRow>& rows) {
    if (rows.size() < 2) throw std::invalid_argument("loglog_slope: need at least two rows");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const BenchRow& r : rows) {
        const double x = std::log(static_cast<double>(r.half_count));
        const double y = std::log(r.warm_seconds);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(rows.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace fourex

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fourex/experiments.hpp"
#include "fourex/operator_cache.hpp"
#include "fourex/special_functions.hpp"

namespace {

using nlohmann::json;
using namespace fourex;

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

struct ConfigFlags {
    double t_delta = 6.0;
    int m_delta = 25;
    double gamma = 1.0;
    double tau = 1e-14;
    int refine = 1;

    void attach(CLI::App* cmd) {
        cmd->add_option("--Tdelta", t_delta, "Extension ratio T_delta (> 1)");
        cmd->add_option("--mdelta", m_delta, "Boundary nodes per side m_delta (>= 2)");
        cmd->add_option("--gamma", gamma, "Oversampling ratio gamma_delta (> 0)");
        cmd->add_option("--tau", tau, "SVD truncation threshold tau");
        cmd->add_option("--R", refine, "Boundary grid refinement factor");
    }
    ExtensionConfig build() const { return make_config(t_delta, m_delta, gamma, tau); }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// samples CSV: header `t,re,im` (im optional), uniform abscissae over [-1,1].

struct SampleFile {
    int half_count = 0;
    std::vector<cdouble> values;
};

std::vector<std::vector<double>> read_csv_rows(const std::string& path, std::size_t min_cols,
                                               std::size_t max_cols) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("'" + path + "': empty file");
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                row.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw std::invalid_argument("'" + path + "': malformed number '" + cell + "'");
            }
        }
        if (row.size() < min_cols || row.size() > max_cols) {
            throw std::invalid_argument("'" + path + "': expected " + std::to_string(min_cols) +
                                        (max_cols > min_cols ? "-" + std::to_string(max_cols) : "") +
                                        " columns");
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("'" + path + "': no data rows");
    return rows;
}

SampleFile read_samples(const std::string& path) {
    const auto rows = read_csv_rows(path, 2, 3);
    const std::size_t n = rows.size();
    if (n < 3 || n % 2 == 0) {
        throw std::invalid_argument("'" + path + "': need an odd sample count 2M+1 >= 3");
    }
    SampleFile f;
    f.half_count = static_cast<int>(n / 2);
    const double spacing = 1.0 / f.half_count;
    f.values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double expected = -1.0 + static_cast<double>(i) * spacing;
        if (std::abs(rows[i][0] - expected) > 1e-12) {
            throw std::invalid_argument("'" + path + "': abscissae not uniform over [-1,1] (row " +
                                        std::to_string(i + 2) + ")");
        }
        f.values.emplace_back(rows[i][1], rows[i].size() > 2 ? rows[i][2] : 0.0);
    }
    return f;
}

std::vector<cdouble> read_fine_boundary(const std::string& path, const RefinedConfig& rc,
                                        int half_count) {
    const auto rows = read_csv_rows(path, 2, 3);
    const std::vector<double> expected = fine_boundary_abscissae(rc, half_count);
    if (rows.size() != expected.size()) {
        throw std::invalid_argument("'" + path + "': expected " + std::to_string(expected.size()) +
                                    " fine boundary rows (left block then right block)");
    }
    std::vector<cdouble> values(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (std::abs(rows[i][0] - expected[i]) > 1e-12) {
            throw std::invalid_argument("'" + path + "': fine abscissa mismatch at row " +
                                        std::to_string(i + 2));
        }
        values[i] = cdouble{rows[i][1], rows[i].size() > 2 ? rows[i][2] : 0.0};
    }
    return values;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
    return out;
}

// value list: "lo:hi:step" or comma-separated
std::vector<double> parse_values(const std::string& spec) {
    std::vector<double> values;
    if (spec.find(':') != std::string::npos) {
        double lo, hi, step;
        char c1, c2;
        std::istringstream ss(spec);
        if (!(ss >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' || step <= 0) {
            throw std::invalid_argument("bad range '" + spec + "' (expected lo:hi:step)");
        }
        for (int i = 0;; ++i) {
            const double v = lo + i * step;
            if (v > hi + step * 1e-9) break;
            values.push_back(v);
        }
    } else {
        std::stringstream ss(spec);
        std::string cell;
        while (std::getline(ss, cell, ',')) values.push_back(std::stod(cell));
    }
    if (values.empty()) throw std::invalid_argument("empty value list '" + spec + "'");
    return values;
}

// ---------------------------------------------------------------------------

int cmd_approximate(const ConfigFlags& flags, const std::string& function, double omega,
                    int half_count, const std::string& input, const std::string& fine_input,
                    const std::string& output, const std::string& format, int density) {
    const ExtensionConfig cfg = flags.build();
    std::vector<cdouble> samples;
    int m_half = half_count;
    const bool has_function = !function.empty();

    if (!input.empty()) {
        const SampleFile f = read_samples(input);
        samples = f.values;
        m_half = f.half_count;
    } else if (has_function) {
        if (m_half < 1) throw std::invalid_argument("--M is required with --function");
        samples = sample_catalog(function, omega, m_half);
    } else {
        throw std::invalid_argument("approximate needs --input or --function");
    }

    PeriodicSamples period;
    if (flags.refine <= 1) {
        auto op = shared_operator(cfg);
        period = extend_periodically(*op, samples, m_half);
    } else {
        const RefinedConfig rc = make_refined(cfg, flags.refine);
        std::vector<cdouble> fine_values;
        if (has_function) {
            fine_values = test_function(function, fine_boundary_abscissae(rc, m_half), omega);
        } else if (!fine_input.empty()) {
            fine_values = read_fine_boundary(fine_input, rc, m_half);
        } else {
            throw std::invalid_argument("--R > 1 with --input requires --fine-input");
        }
        const int mr = rc.fine.boundary_nodes;
        auto fine_op = shared_fine_operator(rc);
        const std::vector<cdouble> g = refined_boundary_data(
            std::span<const cdouble>(fine_values).first(mr),
            std::span<const cdouble>(fine_values).subspan(mr), rc);
        period = assemble_refined(samples, compute_extension_values(*fine_op, g), rc, m_half);
    }

    const FourierApproximant approx = coefficients_from_period(period);

    std::optional<double> err;
    if (has_function) {
        err = max_error(
            approx, [&](double t) { return test_function_value(function, t, omega); }, m_half,
            density);
        if (!std::isfinite(*err)) throw numerical_error("approximation error is not finite");
    }

    // Dense values on [-1,1]: first 2*density*M+1 entries of the dense period.
    const std::vector<cdouble> dense =
        dense_period_values(approx, density * static_cast<int>(approx.period_num()));
    const long long dm = static_cast<long long>(density) * m_half;

    if (format == "json") {
        json doc;
        doc["config"] = {{"Tdelta", cfg.extension_ratio}, {"mdelta", cfg.boundary_nodes},
                         {"gamma", cfg.oversampling},     {"ndelta", cfg.basis_order},
                         {"tau", cfg.truncation},         {"R", flags.refine}};
        doc["M"] = m_half;
        doc["lambda"] = period.lambda;
        if (err) doc["max_error"] = *err;
        json coeffs = json::array();
        for (int k = -approx.max_mode(); k <= approx.max_mode(); ++k) {
            const cdouble c = approx.coefficient(k);
            coeffs.push_back({k, c.real(), c.imag()});
        }
        doc["coefficients"] = std::move(coeffs);
        json dense_rows = json::array();
        for (long long j = 0; j <= 2 * dm; ++j) {
            const double t = static_cast<double>(j - dm) / static_cast<double>(dm);
            dense_rows.push_back({t, dense[j].real(), dense[j].imag()});
        }
        doc["dense"] = std::move(dense_rows);
        auto out = open_out(output + ".json");
        out << doc.dump(2) << '\n';
    } else {
        auto coeff_out = open_out(output + ".coeffs.csv");
        coeff_out << "k,re,im\n";
        for (int k = -approx.max_mode(); k <= approx.max_mode(); ++k) {
            const cdouble c = approx.coefficient(k);
            coeff_out << k << ',' << fmt(c.real()) << ',' << fmt(c.imag()) << '\n';
        }
        auto dense_out = open_out(output + ".dense.csv");
        dense_out << "t,re,im\n";
        for (long long j = 0; j <= 2 * dm; ++j) {
            const double t = static_cast<double>(j - dm) / static_cast<double>(dm);
            dense_out << fmt(t) << ',' << fmt(dense[j].real()) << ',' << fmt(dense[j].imag())
                      << '\n';
        }
    }

    std::cout << "M = " << m_half << ", lambda = " << fmt(period.lambda)
              << ", modes = " << 2 * approx.max_mode() + 1;
    if (err) std::cout << ", max_error = " << fmt(*err);
    std::cout << '\n';
    return 0;
}

int cmd_sweep(const ConfigFlags& flags, const std::string& param, const std::string& values_spec,
              const std::string& function, double omega, int half_count,
              const std::string& output, const std::string& format) {
    const SweepParameter param_id = parse_sweep_parameter(param);
    const std::vector<double> values = parse_values(values_spec);
    const ExtensionConfig base = flags.build();
    const std::vector<SweepPoint> rows =
        run_sweep(param_id, values, base, flags.refine, function, omega, half_count);

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!output.empty()) {
        file = open_out(output);
        out = &file;
    }
    if (format == "json") {
        json doc = json::array();
        for (const SweepPoint& r : rows) {
            json row = {{"value", r.value}, {"seconds", r.seconds}};
            if (r.ok) {
                row["max_error"] = r.max_error;
            } else {
                row["max_error"] = nullptr;
                row["message"] = r.message;
            }
            doc.push_back(std::move(row));
        }
        *out << doc.dump(2) << '\n';
    } else {
        *out << "value,max_error,seconds\n";
        for (const SweepPoint& r : rows) {
            *out << fmt(r.value) << ',' << (r.ok ? fmt(r.max_error) : "nan") << ','
                 << fmt(r.seconds) << '\n';
        }
    }
    return 0;
}

int cmd_resolution(const ConfigFlags& flags, const std::string& method,
                   const std::string& function, double omega, double delta, int m_lo, int m_hi,
                   double full_t, double full_gamma) {
    if (!(delta > 0.0 && delta < 1.0)) {
        throw std::invalid_argument("resolution: delta must lie in (0,1)");
    }
    int found;
    if (method == "fulldata") {
        const FullDataConfig cfg{full_t, full_gamma, flags.tau};
        found = minimal_nodes(
            [&](int m) { return fulldata_catalog(function, omega, m, cfg).max_error; }, delta,
            m_lo, m_hi);
    } else {
        const ExtensionConfig cfg = flags.build();
        found = minimal_nodes(
            [&](int m) {
                return approximate_catalog(function, omega, m, cfg, flags.refine).max_error;
            },
            delta, m_lo, m_hi);
    }
    std::cout << found << '\n';
    return 0;
}

int cmd_bench(const ConfigFlags& flags, const std::string& ms_spec, int repeats,
              const std::string& output) {
    const std::vector<double> raw = parse_values(ms_spec);
    std::vector<int> ms(raw.size());
    std::transform(raw.begin(), raw.end(), ms.begin(),
                   [](double v) { return static_cast<int>(std::lround(v)); });
    const std::vector<BenchRow> rows = run_bench(ms, flags.build(), repeats);

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!output.empty()) {
        file = open_out(output);
        out = &file;
    }
    *out << "M,seconds\n";
    for (const BenchRow& r : rows) *out << r.half_count << ',' << fmt(r.warm_seconds) << '\n';
    for (const BenchRow& r : rows) {
        std::cerr << "M=" << r.half_count << " warm=" << fmt(r.warm_seconds)
                  << "s cold=" << fmt(r.cold_seconds)
                  << "s (first-run overhead " << fmt(r.cold_seconds - r.warm_seconds) << "s)\n";
    }
    if (rows.size() >= 2) std::cerr << "log-log slope = " << fmt(loglog_slope(rows)) << '\n';
    return 0;
}

int cmd_cache(const ConfigFlags& flags, bool save, const std::string& path) {
    if (save) {
        if (flags.refine <= 1) {
            auto op = shared_operator(flags.build());
            save_operator(path, *op, 1);
        } else {
            const RefinedConfig rc = make_refined(flags.build(), flags.refine);
            auto op = shared_fine_operator(rc);
            save_operator(path, *op, flags.refine);
        }
        std::cout << "saved operator cache to " << path << '\n';
        return 0;
    }
    int refine = 1;
    const ExtensionOperator op = load_operator(path, &refine);
    ExtensionConfig expected = flags.build();
    if (refine != flags.refine) {
        throw std::invalid_argument("cache config mismatch: file has R=" + std::to_string(refine) +
                                    ", requested R=" + std::to_string(flags.refine));
    }
    if (flags.refine > 1) expected = make_refined(flags.build(), flags.refine).fine;
    if (!config_matches(op.config, expected)) {
        throw std::invalid_argument("cache config mismatch: file was built for different parameters");
    }
    std::cout << "loaded operator cache from " << path << " ("
              << op.factorization.rank_limit() << " singular values, validated)\n";
    return 0;
}

int cmd_compare(const ConfigFlags& flags, const std::string& function, double omega,
                int half_count, double full_t, double full_gamma, const std::string& output,
                const std::string& format) {
    const ApproxRun boundary =
        approximate_catalog(function, omega, half_count, flags.build(), flags.refine);
    const FullDataConfig full_cfg{full_t, full_gamma, flags.tau};
    const ApproxRun full = fulldata_catalog(function, omega, half_count, full_cfg);

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!output.empty()) {
        file = open_out(output);
        out = &file;
    }
    if (format == "json") {
        json doc = {{"function", function},
                    {"M", half_count},
                    {"boundary_error", boundary.max_error},
                    {"fulldata_error", full.max_error},
                    {"boundary_seconds", boundary.seconds},
                    {"fulldata_seconds", full.seconds}};
        if (function == "exp_iomega" || function == "planewave") doc["omega"] = omega;
        *out << doc.dump(2) << '\n';
    } else {
        *out << "function,omega,M,boundary_error,fulldata_error,boundary_seconds,fulldata_seconds\n";
        *out << function << ',' << fmt(omega) << ',' << half_count << ','
             << fmt(boundary.max_error) << ',' << fmt(full.max_error) << ','
             << fmt(boundary.seconds) << ',' << fmt(full.seconds) << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Boundary-interval fast Fourier extension toolkit"};
    app.require_subcommand(1);

    auto* approx = app.add_subcommand("approximate", "Approximate a function or a samples file");
    ConfigFlags approx_flags;
    approx_flags.attach(approx);
    std::string fn, input, fine_input, output = "fourex_out", format = "csv";
    double omega = 0.0;
    int m_half = 0, density = 10;
    approx->add_option("--function", fn, "Catalog function name (f1..f12, exp_iomega)");
    approx->add_option("--omega", omega, "Plane-wave frequency for exp_iomega");
    approx->add_option("--M", m_half, "Half sample count M (grid is t = l/M, l = -M..M)");
    approx->add_option("--input", input, "Samples CSV (header t,re,im; im optional)");
    approx->add_option("--fine-input", fine_input, "Fine boundary samples CSV for --R > 1");
    approx->add_option("--output", output, "Output path prefix");
    approx->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    approx->add_option("--density", density, "Dense-grid density multiplier");

    auto* sweep = app.add_subcommand("sweep", "Sweep one parameter, report error per value");
    ConfigFlags sweep_flags;
    sweep_flags.attach(sweep);
    std::string sweep_param, sweep_values, sweep_fn = "exp_iomega", sweep_out, sweep_fmt = "csv";
    double sweep_omega = 20.0;
    int sweep_m = 500;
    sweep->add_option("--param", sweep_param, "Swept parameter: Tdelta|mdelta|M|R|gamma")
        ->required();
    sweep->add_option("--values", sweep_values, "Values: lo:hi:step or comma list")->required();
    sweep->add_option("--function", sweep_fn, "Catalog function name");
    sweep->add_option("--omega", sweep_omega, "Plane-wave frequency");
    sweep->add_option("--M", sweep_m, "Half sample count (unless swept)");
    sweep->add_option("--output", sweep_out, "Output CSV/JSON path (stdout when omitted)");
    sweep->add_option("--format", sweep_fmt, "Output format")->check(CLI::IsMember({"csv", "json"}));

    auto* resolution = app.add_subcommand("resolution", "Minimal M reaching a target accuracy");
    ConfigFlags res_flags;
    res_flags.attach(resolution);
    std::string res_method = "boundary", res_fn = "exp_iomega";
    double res_omega = 20.0, res_delta = 1e-10, res_t = 2.0, res_gamma = 2.0;
    int res_lo = 1, res_hi = 1000;
    resolution->add_option("--omega", res_omega, "Plane-wave frequency");
    resolution->add_option("--delta", res_delta, "Target accuracy, in (0,1)");
    resolution->add_option("--Mmin", res_lo, "Lower search bound");
    resolution->add_option("--Mmax", res_hi, "Upper search bound");
    resolution->add_option("--method", res_method, "boundary or fulldata")
        ->check(CLI::IsMember({"boundary", "fulldata"}));
    resolution->add_option("--function", res_fn, "Catalog function name");
    resolution->add_option("--T", res_t, "Full-data extension half-length");
    resolution->add_option("--gammaF", res_gamma, "Full-data oversampling ratio");

    auto* bench = app.add_subcommand("bench", "Time the warm-cache pipeline per M");
    ConfigFlags bench_flags;
    bench_flags.attach(bench);
    std::string bench_ms, bench_out;
    int bench_repeats = 5;
    bench->add_option("--Ms", bench_ms, "M values: lo:hi:step or comma list")->required();
    bench->add_option("--repeats", bench_repeats, "Warm repetitions per M (median reported)");
    bench->add_option("--output", bench_out, "Output CSV path (stdout when omitted)");

    auto* cache = app.add_subcommand("cache", "Save or load a precomputed operator");
    ConfigFlags cache_flags;
    std::string cache_save_path, cache_load_path;
    auto* cache_save = cache->add_subcommand("save", "Precompute and store the operator");
    cache_flags.attach(cache_save);
    cache_save->add_option("--output", cache_save_path, "Cache file path")->required();
    auto* cache_load = cache->add_subcommand("load", "Load and validate a stored operator");
    ConfigFlags cache_load_flags;
    cache_load_flags.attach(cache_load);
    cache_load->add_option("--input", cache_load_path, "Cache file path")->required();
    cache->require_subcommand(1);

    auto* compare = app.add_subcommand("compare", "Boundary method vs full-data baseline");
    ConfigFlags cmp_flags;
    cmp_flags.attach(compare);
    std::string cmp_fn = "exp_iomega", cmp_out, cmp_fmt = "csv";
    double cmp_omega = 20.0, cmp_t = 2.0, cmp_gamma = 2.0;
    int cmp_m = 200;
    compare->add_option("--function", cmp_fn, "Catalog function name");
    compare->add_option("--omega", cmp_omega, "Plane-wave frequency");
    compare->add_option("--M", cmp_m, "Half sample count");
    compare->add_option("--T", cmp_t, "Full-data extension half-length");
    compare->add_option("--gammaF", cmp_gamma, "Full-data oversampling ratio");
    compare->add_option("--output", cmp_out, "Output path (stdout when omitted)");
    compare->add_option("--format", cmp_fmt, "Output format")->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitValidation;
    }

    try {
        if (*approx) {
            return cmd_approximate(approx_flags, fn, omega, m_half, input, fine_input, output,
                                   format, density);
        }
        if (*sweep) {
            return cmd_sweep(sweep_flags, sweep_param, sweep_values, sweep_fn, sweep_omega,
                             sweep_m, sweep_out, sweep_fmt);
        }
        if (*resolution) {
            return cmd_resolution(res_flags, res_method, res_fn, res_omega, res_delta, res_lo,
                                  res_hi, res_t, res_gamma);
        }
        if (*bench) return cmd_bench(bench_flags, bench_ms, bench_repeats, bench_out);
        if (*cache) {
            return cmd_cache(*cache_save ? cache_flags : cache_load_flags,
                             cache_save->parsed(),
                             cache_save->parsed() ? cache_save_path : cache_load_path);
        }
        if (*compare) {
            return cmd_compare(cmp_flags, cmp_fn, cmp_omega, cmp_m, cmp_t, cmp_gamma, cmp_out,
                               cmp_fmt);
        }
    } catch (const numerical_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
    return 0;
}

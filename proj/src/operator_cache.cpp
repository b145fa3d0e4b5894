#include "fourex/operator_cache.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace fourex {

namespace {

constexpr const char* kMagic = "fourex-operator-cache 1";

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (const unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17e", v);
    return buf;
}

void append_array(std::ostringstream& out, const char* key, const cdouble* data,
                  std::size_t count) {
    out << key << " =";
    for (std::size_t i = 0; i < count; ++i) {
        out << ' ' << fmt(data[i].real()) << ' ' << fmt(data[i].imag());
    }
    out << '\n';
}

std::string expect_key(std::istringstream& line_in, const std::string& line,
                       const std::string& key) {
    const auto pos = line.find(" = ");
    if (pos == std::string::npos || line.substr(0, pos) != key) {
        throw std::invalid_argument("operator cache: expected key '" + key + "'");
    }
    line_in.str(line.substr(pos + 3));
    line_in.clear();
    return line.substr(pos + 3);
}

double read_scalar(std::istream& in, const std::string& key, std::string* raw_line) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("operator cache: truncated file");
    *raw_line = line;
    std::istringstream ss;
    expect_key(ss, line, key);
    double v;
    if (!(ss >> v)) throw std::invalid_argument("operator cache: bad value for '" + key + "'");
    return v;
}

} // namespace

void save_operator(const std::string& path, const ExtensionOperator& op, int refine) {
    const SVDFactorization& f = op.factorization;
    std::ostringstream body;
    body << kMagic << '\n';
    body << "T_delta = " << fmt(op.config.extension_ratio) << '\n';
    body << "m_delta = " << op.config.boundary_nodes << '\n';
    body << "gamma_delta = " << fmt(op.config.oversampling) << '\n';
    body << "n_delta = " << op.config.basis_order << '\n';
    body << "tau = " << fmt(op.config.truncation) << '\n';
    body << "refine = " << refine << '\n';
    body << "L_delta = " << op.geometry.node_count << '\n';
    body << "rows = " << f.u.rows << '\n';
    body << "cols = " << f.v.rows << '\n';
    body << "rank = " << f.rank_limit() << '\n';
    body << "sigma =";
    for (const double s : f.singular_values) body << ' ' << fmt(s);
    body << '\n';
    append_array(body, "U", f.u.data.data(), f.u.data.size());
    append_array(body, "V", f.v.data.data(), f.v.data.size());

    std::ofstream out(path);
    if (!out) throw std::invalid_argument("operator cache: cannot open '" + path + "' for writing");
    const std::string text = body.str();
    char checksum[32];
    std::snprintf(checksum, sizeof(checksum), "%016" PRIx64, fnv1a(text));
    out << text << "checksum = " << checksum << '\n';
    if (!out) throw std::invalid_argument("operator cache: write to '" + path + "' failed");
}

ExtensionOperator load_operator(const std::string& path, int* refine_out) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("operator cache: cannot open '" + path + "'");

    std::string line;
    if (!std::getline(in, line) || line != kMagic) {
        throw std::invalid_argument("operator cache: bad magic or unsupported format version");
    }
    std::string body = line + "\n";
    std::string raw;

    const double t_ratio = read_scalar(in, "T_delta", &raw);
    body += raw + "\n";
    const int m = static_cast<int>(read_scalar(in, "m_delta", &raw));
    body += raw + "\n";
    const double gamma = read_scalar(in, "gamma_delta", &raw);
    body += raw + "\n";
    const int n = static_cast<int>(read_scalar(in, "n_delta", &raw));
    body += raw + "\n";
    const double tau = read_scalar(in, "tau", &raw);
    body += raw + "\n";
    const int refine = static_cast<int>(read_scalar(in, "refine", &raw));
    body += raw + "\n";
    const int l_delta = static_cast<int>(read_scalar(in, "L_delta", &raw));
    body += raw + "\n";
    const int rows = static_cast<int>(read_scalar(in, "rows", &raw));
    body += raw + "\n";
    const int cols = static_cast<int>(read_scalar(in, "cols", &raw));
    body += raw + "\n";
    const int rank = static_cast<int>(read_scalar(in, "rank", &raw));
    body += raw + "\n";

    if (rows < 1 || cols < 1 || rank != std::min(rows, cols)) {
        throw std::invalid_argument("operator cache: inconsistent dimensions");
    }

    SVDFactorization f;
    f.singular_values.resize(rank);
    f.u = ComplexMatrix(rows, rank);
    f.v = ComplexMatrix(cols, rank);

    auto read_line_tokens = [&](const std::string& key, auto&& consume) {
        if (!std::getline(in, line)) throw std::invalid_argument("operator cache: truncated file");
        body += line + "\n";
        std::istringstream ss;
        expect_key(ss, line, key);
        consume(ss);
        double extra;
        if (ss >> extra) throw std::invalid_argument("operator cache: trailing data after '" + key + "'");
    };

    read_line_tokens("sigma", [&](std::istringstream& ss) {
        for (double& s : f.singular_values) {
            if (!(ss >> s)) throw std::invalid_argument("operator cache: short sigma array");
        }
    });
    const auto read_matrix = [&](const std::string& key, ComplexMatrix& mat) {
        read_line_tokens(key, [&](std::istringstream& ss) {
            for (cdouble& v : mat.data) {
                double re, im;
                if (!(ss >> re >> im)) {
                    throw std::invalid_argument("operator cache: short '" + key + "' array");
                }
                v = cdouble{re, im};
            }
        });
    };
    read_matrix("U", f.u);
    read_matrix("V", f.v);

    if (!std::getline(in, line)) throw std::invalid_argument("operator cache: missing checksum");
    std::istringstream ss;
    const std::string stored = expect_key(ss, line, "checksum");
    char computed[32];
    std::snprintf(computed, sizeof(computed), "%016" PRIx64, fnv1a(body));
    if (stored != computed) {
        throw std::invalid_argument("operator cache: checksum mismatch (file corrupted or edited)");
    }

    for (int i = 1; i < rank; ++i) {
        if (f.singular_values[i] > f.singular_values[i - 1]) {
            throw std::invalid_argument("operator cache: singular values not sorted");
        }
    }

    ExtensionConfig cfg;
    cfg.extension_ratio = t_ratio;
    cfg.boundary_nodes = m;
    cfg.oversampling = gamma;
    cfg.basis_order = n;
    cfg.truncation = tau;
    const ExtensionGeometry geom = extension_geometry(t_ratio, m);
    if (geom.node_count != l_delta || rows != 2 * m || cols != 2 * n + 1) {
        throw std::invalid_argument("operator cache: geometry does not match stored config");
    }

    // Reconstruction check against a freshly built system matrix.
    const ComplexMatrix a = build_system_matrix(geom, n);
    double err_sq = 0.0, norm_sq = 0.0;
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            cdouble rec{0.0, 0.0};
            for (int r = 0; r < rank; ++r) {
                rec += f.u(i, r) * f.singular_values[r] * std::conj(f.v(j, r));
            }
            err_sq += std::norm(rec - a(i, j));
            norm_sq += std::norm(a(i, j));
        }
    }
    if (!(err_sq <= 1e-26 * norm_sq)) {
        throw std::invalid_argument("operator cache: factorization fails the reconstruction check");
    }

    if (refine_out) *refine_out = refine;
    return ExtensionOperator{cfg, geom, std::move(f)};
}

bool config_matches(const ExtensionConfig& a, const ExtensionConfig& b) {
    return a.extension_ratio == b.extension_ratio && a.boundary_nodes == b.boundary_nodes &&
           a.basis_order == b.basis_order && a.oversampling == b.oversampling &&
           a.truncation == b.truncation;
}

} // namespace fourex

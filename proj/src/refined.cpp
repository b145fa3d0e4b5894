#include "fourex/refined.hpp"

#include <cmath>

namespace fourex {

RefinedConfig make_refined(const ExtensionConfig& base, int refine) {
    if (refine < 1) throw std::invalid_argument("make_refined: refinement factor must be positive");
    if (refine > 1 && base.extension_ratio != std::floor(base.extension_ratio)) {
        throw std::invalid_argument(
            "make_refined: refinement needs an integer extension ratio so fine and "
            "coarse working grids align");
    }
    RefinedConfig rc;
    rc.base = base;
    rc.refine = refine;
    const int fine_nodes = refine * (base.boundary_nodes - 1) + 1;
    rc.fine = make_config(base.extension_ratio, fine_nodes, base.oversampling, base.truncation);
    return rc;
}

std::vector<cdouble> refined_boundary_data(std::span<const cdouble> fine_left,
                                           std::span<const cdouble> fine_right,
                                           const RefinedConfig& rc) {
    const int mr = rc.fine.boundary_nodes;
    if (static_cast<int>(fine_left.size()) != mr || static_cast<int>(fine_right.size()) != mr) {
        throw std::invalid_argument("refined_boundary_data: fine boundary vectors must have m^R entries");
    }
    std::vector<cdouble> g(2 * static_cast<std::size_t>(mr));
    for (int j = 0; j < mr; ++j) {
        g[j] = fine_right[j];
        g[mr + j] = fine_left[j];
    }
    return g;
}

PeriodicSamples assemble_refined(std::span<const cdouble> coarse_samples,
                                 std::span<const cdouble> fine_extension,
                                 const RefinedConfig& rc, int half_count) {
    if (static_cast<int>(coarse_samples.size()) != 2 * half_count + 1) {
        throw std::invalid_argument("assemble_refined: sample count is not 2M+1");
    }
    const ExtensionGeometry coarse =
        extension_geometry(rc.base.extension_ratio, rc.base.boundary_nodes);
    const ExtensionGeometry fine =
        extension_geometry(rc.fine.extension_ratio, rc.fine.boundary_nodes);
    if (static_cast<int>(fine_extension.size()) != fine.node_count) {
        throw std::invalid_argument("assemble_refined: fine extension length mismatch");
    }

    const int m = coarse.boundary_nodes;
    const int mr = fine.boundary_nodes;
    PeriodicSamples out;
    out.half_count = half_count;
    out.lambda = period_lambda(coarse, half_count);
    out.values.reserve(per_period_count(coarse, half_count));
    out.values.assign(coarse_samples.begin(), coarse_samples.end());
    for (int l = half_count + 1; l <= half_count + coarse.half() - m; ++l) {
        const int fine_index = mr + (l - half_count) * rc.refine; // 1-based fine node
        if (fine_index < 1 || fine_index > fine.node_count) {
            throw std::invalid_argument("assemble_refined: fine index out of range");
        }
        out.values.push_back(fine_extension[fine_index - 1]);
    }
    return out;
}

std::vector<double> fine_boundary_abscissae(const RefinedConfig& rc, int half_count) {
    const int mr = rc.fine.boundary_nodes;
    const long long rm = static_cast<long long>(rc.refine) * half_count;
    if (rm < mr) {
        throw std::invalid_argument("fine_boundary_abscissae: boundary window exceeds half grid");
    }
    std::vector<double> t(2 * static_cast<std::size_t>(mr));
    for (int j = 0; j < mr; ++j) {
        t[j] = static_cast<double>(-rm + j) / static_cast<double>(rm);       // left, ascending
        t[mr + j] = static_cast<double>(rm - mr + 1 + j) / static_cast<double>(rm); // right
    }
    return t;
}

} // namespace fourex

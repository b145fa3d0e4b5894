#include "fourex/grids.hpp"

#include <cmath>

namespace fourex {

BoundaryIndexSets boundary_index_sets(int half_count, int boundary_nodes) {
    if (boundary_nodes < 2) {
        throw std::invalid_argument("boundary_index_sets: need at least two boundary nodes");
    }
    if (boundary_nodes > half_count) {
        throw std::invalid_argument("boundary_index_sets: boundary window exceeds half grid");
    }
    return BoundaryIndexSets{-half_count, half_count - boundary_nodes + 1, boundary_nodes};
}

ExtensionGeometry extension_geometry(double extension_ratio, int boundary_nodes) {
    if (!(extension_ratio > 1.0)) {
        throw std::invalid_argument("extension_geometry: extension ratio must exceed 1");
    }
    if (boundary_nodes < 2) {
        throw std::invalid_argument("extension_geometry: need at least two boundary nodes");
    }
    const double scaled = extension_ratio * (boundary_nodes - 1);
    const int node_count = 2 * static_cast<int>(std::ceil(scaled));
    return ExtensionGeometry{extension_ratio, boundary_nodes, node_count, kTwoPi / node_count};
}

double period_lambda(const ExtensionGeometry& geom, int half_count) {
    if (half_count < geom.boundary_nodes) {
        throw std::invalid_argument("period_lambda: boundary window exceeds half grid");
    }
    return static_cast<double>(geom.half() - geom.boundary_nodes + 1) / half_count;
}

int per_period_count(const ExtensionGeometry& geom, int half_count) {
    if (half_count < geom.boundary_nodes) {
        throw std::invalid_argument("per_period_count: boundary window exceeds half grid");
    }
    return 2 * half_count + geom.half() - geom.boundary_nodes + 1;
}

} // namespace fourex

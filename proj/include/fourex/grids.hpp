#pragma once

#include "fourex/types.hpp"

namespace fourex {

/// Uniform sampling grid t_l = l/M for l = -M..M.
struct UniformGrid {
    int half_count; // M

    explicit UniformGrid(int m) : half_count(m) {
        if (m < 1) throw std::invalid_argument("UniformGrid: M must be positive");
    }
    int size() const { return 2 * half_count + 1; }
    double node(int ell) const { return static_cast<double>(ell) / half_count; }
};

/// Index windows of the m_delta outermost samples on each side.
struct BoundaryIndexSets {
    int left_first;   // -M
    int right_first;  // M - m_delta + 1
    int count;        // m_delta
};

BoundaryIndexSets boundary_index_sets(int half_count, int boundary_nodes);

/// Geometry of the working interval [0, 2*pi) the extension is computed on:
/// L_delta = 2*ceil(T_delta*(m_delta-1)) nodes x_j = (j-1)h, h = 2*pi/L_delta,
/// with the boundary data occupying slots J_1 = {1..m_delta} and
/// J_2 = {L_delta/2+1 .. L_delta/2+m_delta}.
struct ExtensionGeometry {
    double extension_ratio; // T_delta
    int boundary_nodes;     // m_delta
    int node_count;         // L_delta, even
    double spacing;         // h

    int half() const { return node_count / 2; }
    double node(int j) const { return spacing * (j - 1); } // 1-based, j in [1, L_delta]
};

ExtensionGeometry extension_geometry(double extension_ratio, int boundary_nodes);

/// Length added to the base period by the extension segment:
/// lambda = (L_delta/2 - m_delta + 1)/M. Chosen so that (2+lambda)*M equals
/// the integer per-period sample count; for integer extension ratios this
/// coincides with ceil(T_delta-1)*(m_delta-1)/M.
double period_lambda(const ExtensionGeometry& geom, int half_count);

/// Samples in one assembled period [-1, 1+lambda): 2M + L_delta/2 - m_delta + 1.
int per_period_count(const ExtensionGeometry& geom, int half_count);

} // namespace fourex

#pragma once

#include <span>
#include <vector>

#include "fourex/extension.hpp"
#include "fourex/types.hpp"

namespace fourex {

/// Boundary-grid-refinement setup: the extension is computed from an R-times
/// finer boundary grid (m^R = R*(m-1)+1 nodes per side at spacing 1/(R*M))
/// and subsampled back to the coarse period. R = 1 reproduces the base
/// algorithm exactly. R > 1 requires an integer extension ratio so the fine
/// working nodes land on the coarse ones.
struct RefinedConfig {
    ExtensionConfig base;
    int refine = 1;       // R
    ExtensionConfig fine; // m^R, n^R = round((m^R-1)/gamma), same ratio and tau
};

RefinedConfig make_refined(const ExtensionConfig& base, int refine);

/// Fine boundary samples in collocation row order: right-end values
/// f(-1 + 2 - (m^R - j)/(R*M)) for j = 1..m^R followed by left-end values
/// f(-1 + (j-1)/(R*M)). Each input vector is ascending in t and m^R long;
/// its outermost entries sit exactly on t = -1 and t = 1.
std::vector<cdouble> refined_boundary_data(std::span<const cdouble> fine_left,
                                           std::span<const cdouble> fine_right,
                                           const RefinedConfig& rc);

/// Assemble the coarse period from the fine extension: the extension slots
/// take g_c^R at fine index m^R + (l - M)*R, which coincides with the coarse
/// working node for integer extension ratios.
PeriodicSamples assemble_refined(std::span<const cdouble> coarse_samples,
                                 std::span<const cdouble> fine_extension,
                                 const RefinedConfig& rc, int half_count);

/// Abscissae of the fine boundary samples, left side then right side,
/// each ascending and m^R long.
std::vector<double> fine_boundary_abscissae(const RefinedConfig& rc, int half_count);

} // namespace fourex

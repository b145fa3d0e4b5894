#pragma once

#include <string>

#include "fourex/extension.hpp"

namespace fourex {

/// Plain-text key-value container for a precomputed ExtensionOperator.
///
/// Layout (one `key = value` per line, arrays as whitespace-separated
/// scientific-notation tokens with 17 significant digits):
///
///   fourex-operator-cache 1
///   T_delta / m_delta / gamma_delta / n_delta / tau / refine
///   L_delta / rows / cols / rank
///   sigma = ...          (rank reals)
///   U = ...              (rows*rank re/im pairs, row-major)
///   V = ...              (cols*rank re/im pairs, row-major)
///   checksum = ...       (FNV-1a 64 over every preceding line)
///
/// Loading re-validates the stored factorization: dimensions, ordering of
/// the singular values, and reconstruction against a freshly built system
/// matrix. `refine` tags fine operators of the grid-refinement variant.
void save_operator(const std::string& path, const ExtensionOperator& op, int refine = 1);

ExtensionOperator load_operator(const std::string& path, int* refine_out = nullptr);

/// Exact-field comparison used by the CLI to reject a cache file built for a
/// different configuration.
bool config_matches(const ExtensionConfig& a, const ExtensionConfig& b);

} // namespace fourex

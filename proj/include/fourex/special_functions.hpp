#pragma once

#include <span>
#include <string>
#include <vector>

#include "fourex/types.hpp"

namespace fourex {

/// Error function, |error| <= 1e-14 absolute, odd symmetry exact.
double erf(double x);

/// Airy function Ai on |x| <= 160: compensated Maclaurin series on the core
/// interval, asymptotic expansions beyond it on both axes.
double airy_ai(double x);

/// Built-in test-function catalog: f1..f12 plus the plane wave
/// exp(i*pi*omega*t) under the name "exp_iomega" (alias "planewave").
/// Only the plane wave consumes `omega`.
cdouble test_function_value(const std::string& name, double t, double omega = 0.0);

std::vector<cdouble> test_function(const std::string& name, std::span<const double> t,
                                   double omega = 0.0);

bool is_catalog_function(const std::string& name);
bool catalog_is_real(const std::string& name);
std::vector<std::string> catalog_names();

} // namespace fourex

#pragma once

// Floating point root finding used as an independent cross-check on the exact
// machinery (never as a source of truth).

#include <complex>
#include <vector>

#include "tg/poly.hpp"

namespace tg {

struct NumericOptions {
    int max_iterations = 1000;
    double movement_tol = 1e-12;    // stop when every root moved less than this
    double residual_tol = 1e-8;     // relative residual each root must reach
};

// All complex roots (with multiplicity) by the Aberth-Ehrlich simultaneous
// iteration.  Throws NumericError if the iteration fails to converge, and
// ArgumentError on the zero polynomial.  Degree 0 returns {}.
std::vector<std::complex<double>> numeric_roots(const std::vector<std::complex<double>>& ascending_coeffs,
                                                const NumericOptions& opts = {});
std::vector<std::complex<double>> numeric_roots(const PolyQ& f, const NumericOptions& opts = {});

double to_double(const Rational& q);

// |f(z)| / max(1, sum |c_i| |z|^i): the standard backward-error style relative
// residual used by every numeric cross-check in this library.
double relative_residual(const std::vector<std::complex<double>>& ascending_coeffs,
                         const std::complex<double>& z);

}  // namespace tg

// SPDX-License-Identifier: Apache-2.0
//
// Dense complex polynomials in coefficient form, plus the two root finders
// used by the random-matrix module. Coefficients are stored ascending:
// coeffs[k] multiplies z^k.

#pragma once

#include <complex>
#include <vector>

namespace zetaprime {

using cd = std::complex<double>;

// Horner evaluation.
cd poly_eval(const std::vector<cd>& coeffs, cd z);

// Coefficients of the derivative (one degree lower; empty input -> empty).
std::vector<cd> poly_derivative(const std::vector<cd>& coeffs);

// Monic polynomial with the given roots, built by successive multiplication.
std::vector<cd> poly_from_roots(const std::vector<cd>& roots);

// All roots via the Aberth-Ehrlich iteration with Gauss-Seidel updates.
// Leading coefficient must be nonzero. Throws RootVerificationFailure if the
// iteration fails to settle.
std::vector<cd> poly_roots(const std::vector<cd>& coeffs);

// All roots via the eigenvalues of the companion matrix. Slower and less
// accurate at high degree; kept as an independent cross-check.
std::vector<cd> poly_roots_companion(const std::vector<cd>& coeffs);

} // namespace zetaprime

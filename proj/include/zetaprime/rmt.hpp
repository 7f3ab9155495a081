// SPDX-License-Identifier: Apache-2.0
//
// Circular unitary ensemble statistics for zeros of the derivative of the
// characteristic polynomial Z(U,z) = prod_k (z - e^{i theta_k}).
//
// Sampling uses the Killip-Nenciu construction: Verblunsky coefficients
// alpha_k drawn rotation-invariantly on the disk with |alpha_k|^2 ~
// Beta(1, N-1-k), the last one uniform on the circle, then the Szego
// recurrence produces a degree-N polynomial whose roots are distributed as
// CUE(N) eigenvalues. This costs O(N^2) per sample and never materializes a
// matrix.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "zetaprime/polynomial.hpp"
#include "zetaprime/zero_table.hpp"

namespace zetaprime {

struct UnitarySample {
    int N = 0;
    std::vector<double> eigenangles; // sorted, in [0, 2*pi)
    std::uint64_t seed = 0;          // replay identifier
};

struct DerivativeZeroSet {
    std::vector<cd> zeros; // exactly N-1 of them
    double max_abs = 0;    // Gauss-Lucas puts every zero in the closed disk
};

struct EnsembleStat {
    int N = 0;
    double x = 0; // threshold parameter (x for the radial law, nu small-x)
    double mean_fraction = 0;
    double stderr_mc = 0;
    long n_samples = 0;          // samples actually used
    long long total_count = 0;   // integer zero count summed over samples
    long n_discarded = 0;
};

// Per-sample derivative-zero moduli for one ensemble draw, so several
// thresholds can be evaluated without resampling. Discarded sample indices
// (root verification failed) are kept for the replay log.
struct ModuliEnsemble {
    int N = 0;
    std::uint64_t seed = 0;
    std::vector<std::vector<double>> sample_moduli;
    std::vector<std::uint64_t> discarded_indices;
};

struct BridgeReport {
    double T = 0;
    double x = 0;
    int N = 0; // floor(log T)
    double sigma = 0;
    double zeta_fraction = 0; // share of zeta' zeros with beta' > sigma
    double rmt_fraction = 0;
    double rmt_stderr = 0;
    double ratio = 0;
    bool in_stated_range = false;
};

// One Haar-unitary eigenvalue draw. Deterministic given the seed.
UnitarySample sample_cue(int N, std::uint64_t seed);

// The N-1 roots of Z'(z), from the monic coefficients of Z rebuilt out of
// the eigenangles. Every root is verified against the residual tolerance
// 1e-9 * max coefficient magnitude; a failure throws RootVerificationFailure
// so the caller can discard and log the sample.
DerivativeZeroSet derivative_zeros(const UnitarySample& u);

// n_samples independent draws keyed by (seed, index).
ModuliEnsemble sample_derivative_moduli(int N, long n_samples,
                                        std::uint64_t seed);

// Mean of (1/(N-1)) #{ |lambda'| < 1 - x/N } over the ensemble. The radial
// law predicts this decays like 1/x for 1 << x << N.
EnsembleStat radial_from_moduli(const ModuliEnsemble& e, double x);
EnsembleStat radial_mean_fraction(int N, double x, long n_samples,
                                  std::uint64_t seed);

// Complementary tail: mean of (1/(N-1)) #{ |lambda'| >= 1 - nu/N }, compared
// against (8/(9*pi)) nu^{3/2} for small nu. Counting is the exact complement
// of the radial count, so for equal thresholds the two fractions add to 1
// sample by sample.
EnsembleStat small_x_from_moduli(const ModuliEnsemble& e, double nu);
EnsembleStat small_x_fraction(int N, double nu, long n_samples,
                              std::uint64_t seed);

// Side-by-side comparison at sigma = 1/2 + x/log T: the observed fraction of
// zeta' zeros lying right of sigma against the CUE mean fraction at
// N = floor(log T). The asymptotic matching window is empty at desk-scale T,
// so in_stated_range is expected to be false and the row is labeled
// extrapolation by the CLI.
BridgeReport bridge_compare(double T, double x, const ZeroTable& zp_table,
                            long n_samples, std::uint64_t seed);

} // namespace zetaprime

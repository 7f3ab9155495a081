// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <vector>

#include "zetaprime/zero_table.hpp"

namespace zetaprime {

enum class TargetFunction { zeta, zeta_prime };

struct Rect {
    double sigma_lo = 0;
    double sigma_hi = 0;
    double t_lo = 0;
    double t_hi = 0;
};

struct WindingOptions {
    double eval_tol = 1e-9;
    // |f| must clear this many multiples of the evaluation error on the
    // contour, else the walk reports BoundaryZero for the caller to perturb
    double guard_factor = 16.0;
    std::uint64_t seed = 0x7a11ed;
};

// Zeros of the target inside rect, counted with multiplicity, from the
// boundary argument change with per-step change kept below pi/2. The pole
// at s = 1 (simple for zeta, double for zeta') is compensated when it lies
// strictly inside, so the result is a zero count, never zeros minus poles.
// Throws BoundaryZero when the contour cannot be certified away from a
// zero, CountMismatch when the accumulated change is not close to an
// integer multiple of 2 pi.
int winding_number(TargetFunction fn, const Rect& rect,
                   const WindingOptions& opt = {});

// Same walk for an arbitrary analytic function (no pole compensation);
// exercises the contour machinery against functions with known zeros.
int winding_number(
    const std::function<std::complex<double>(std::complex<double>)>& f,
    const Rect& rect, double eval_tol = 1e-9);

struct ZeroSearchOptions {
    double eval_tol = 1e-9;
    double refine_tol = 2.5e-10;
    double min_cell = 1e-6; // quadrisection stops at this cell diagonal
    std::uint64_t seed = 0x7a11ed;
    // verify winding 0 on [-2,-1] x (window) during sweeps; the left cutoff
    // of the search strip is asserted, not assumed
    bool check_left_band = true;
};

// Recursive quadrisection of rect until every cell holds at most one zero,
// then Newton from the cell center (falling back to further quadrisection if
// an iterate leaves the owning cell). Cells still holding winding >= 2 at
// the minimum size are emitted as records with multiplicity = winding and
// residual = cell diameter, never dropped. Split lines are jittered
// deterministically from the seed and re-drawn when they land on a zero.
std::vector<ZeroRecord> find_zeros(TargetFunction fn, const Rect& rect,
                                   const ZeroSearchOptions& opt = {});

// All zeros of zeta' with 0 < gamma' <= top of the last window covering T,
// sigma in (-1, 4), by windowed find_zeros sweeps with jittered shared
// horizontal edges. Deterministic for a fixed seed.
ZeroTable zeta_prime_zeros_up_to(double T, const ZeroSearchOptions& opt = {});

// Ordinates of zeta zeros on the critical line located by sign changes of
// the rotated real function, refined by bisection plus Newton, then
// cross-checked against the winding count of [0,1] x [1, top]; a mismatch
// aborts (it would mean a missed pair or an off-line zero).
ZeroTable zeta_zeros_up_to(double T, const ZeroSearchOptions& opt = {});

// Cache layer: loads cache_dir/zeros/{fn}/{T}.table if present (re-checking
// tolerances, code version and every simple record's residual), otherwise
// extends the tallest shorter table or computes from scratch, then saves.
ZeroTable cached_zeros_up_to(TargetFunction fn, double T,
                             const std::filesystem::path& cache_dir,
                             const ZeroSearchOptions& opt = {});

} // namespace zetaprime

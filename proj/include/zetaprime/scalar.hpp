// SPDX-License-Identifier: Apache-2.0
#pragma once

// Scalar lanes for the core evaluators. Everything numerical is templated on
// the working scalar so the same formulas run in double, long double or
// __float128; the lane is chosen from the requested tolerance (the working
// epsilon must sit at least 30 bits below it).

#include <cmath>
#include <complex>
#include <cstdlib>
#include <limits>
#include <quadmath.h>

namespace zetaprime {

template <class S>
struct ScalarOps;

template <>
struct ScalarOps<double> {
    static constexpr const char* name = "f64";
    static double eps() { return std::numeric_limits<double>::epsilon(); }
    static double log(double x) { return std::log(x); }
    static double exp(double x) { return std::exp(x); }
    static double sqrt(double x) { return std::sqrt(x); }
    static double hypot(double x, double y) { return std::hypot(x, y); }
    static double atan2(double y, double x) { return std::atan2(y, x); }
    static void sincos(double x, double* s, double* c) { ::sincos(x, s, c); }
    static double abs(double x) { return std::fabs(x); }
    static double pow(double x, double y) { return std::pow(x, y); }
    static double from_string(const char* s) { return std::strtod(s, nullptr); }
};

template <>
struct ScalarOps<long double> {
    static constexpr const char* name = "f80";
    static long double eps() { return std::numeric_limits<long double>::epsilon(); }
    static long double log(long double x) { return logl(x); }
    static long double exp(long double x) { return expl(x); }
    static long double sqrt(long double x) { return sqrtl(x); }
    static long double hypot(long double x, long double y) { return hypotl(x, y); }
    static long double atan2(long double y, long double x) { return atan2l(y, x); }
    static void sincos(long double x, long double* s, long double* c) { ::sincosl(x, s, c); }
    static long double abs(long double x) { return fabsl(x); }
    static long double pow(long double x, long double y) { return powl(x, y); }
    static long double from_string(const char* s) { return strtold(s, nullptr); }
};

template <>
struct ScalarOps<__float128> {
    static constexpr const char* name = "f128";
    static __float128 eps() { return FLT128_EPSILON; }
    static __float128 log(__float128 x) { return logq(x); }
    static __float128 exp(__float128 x) { return expq(x); }
    static __float128 sqrt(__float128 x) { return sqrtq(x); }
    static __float128 hypot(__float128 x, __float128 y) { return hypotq(x, y); }
    static __float128 atan2(__float128 y, __float128 x) { return atan2q(y, x); }
    static void sincos(__float128 x, __float128* s, __float128* c) { ::sincosq(x, s, c); }
    static __float128 abs(__float128 x) { return fabsq(x); }
    static __float128 pow(__float128 x, __float128 y) { return powq(x, y); }
    static __float128 from_string(const char* s) { return strtoflt128(s, nullptr); }
};

// Minimal complex type usable with every lane (std::complex<__float128> has
// no library support). Only the operations the evaluators need.
template <class S>
struct Cx {
    S re{}, im{};

    Cx() = default;
    Cx(S r, S i) : re(r), im(i) {}
    explicit Cx(S r) : re(r), im(S(0)) {}

    Cx operator+(const Cx& o) const { return {re + o.re, im + o.im}; }
    Cx operator-(const Cx& o) const { return {re - o.re, im - o.im}; }
    Cx operator-() const { return {-re, -im}; }
    Cx operator*(const Cx& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Cx operator*(S k) const { return {re * k, im * k}; }
    Cx operator/(const Cx& o) const {
        // Smith's algorithm, robust to intermediate over/underflow.
        if (ScalarOps<S>::abs(o.re) >= ScalarOps<S>::abs(o.im)) {
            S r = o.im / o.re;
            S d = o.re + o.im * r;
            return {(re + im * r) / d, (im - re * r) / d};
        }
        S r = o.re / o.im;
        S d = o.im + o.re * r;
        return {(re * r + im) / d, (im * r - re) / d};
    }
    Cx operator/(S k) const { return {re / k, im / k}; }
    Cx& operator+=(const Cx& o) {
        re += o.re;
        im += o.im;
        return *this;
    }

    S abs() const { return ScalarOps<S>::hypot(re, im); }
    Cx conj() const { return {re, -im}; }
};

// exp(i x)
template <class S>
Cx<S> cis(S x) {
    S s, c;
    ScalarOps<S>::sincos(x, &s, &c);
    return {c, s};
}

template <class S>
std::complex<double> to_cdouble(const Cx<S>& z) {
    return {static_cast<double>(z.re), static_cast<double>(z.im)};
}

// Compensated accumulator. With it the accumulated rounding error is a small
// multiple of eps * sum(|terms|), independent of the term count.
template <class S>
struct KahanSum {
    S sum{}, c{};
    void add(S x) {
        S y = x - c;
        S t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

template <class S>
struct KahanCx {
    KahanSum<S> re, im;
    S abs_sum{}; // running sum of |term|, feeds the roundoff model
    void add(const Cx<S>& z) {
        re.add(z.re);
        im.add(z.im);
        abs_sum += z.abs();
    }
    Cx<S> value() const { return {re.sum, im.sum}; }
};

} // namespace zetaprime

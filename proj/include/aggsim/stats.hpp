// Copyright (c) 2026 The aggsim Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace aggsim {

// sin(x)/x with the removable singularity filled in: sinc(0) = 1.
double sinc(double x);

// Standard normal CDF.
double normal_cdf(double z);

struct Moments {
    double mean = 0.0;
    double variance = 0.0;  // unbiased (n-1 denominator)
    double skewness = 0.0;
    double excess_kurtosis = 0.0;
    std::size_t count = 0;
};

Moments compute_moments(std::span<const double> samples);

// Kolmogorov-Smirnov distance between the samples (standardized by their own
// mean and standard deviation) and the standard normal CDF.
double ks_normal_distance(std::span<const double> samples);

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
};

// Ordinary least squares fit of y against x.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

// Trapezoidal rule on n+1 equally spaced points over [a, b].
double trapezoid(const std::function<double(double)>& f, double a, double b, std::size_t n);

struct Quadrature {
    double value = 0.0;
    bool converged = false;
    std::size_t intervals = 0;
    double last_change = 0.0;  // |value - previous| / max(|value|, eps)
};

// Trapezoidal quadrature with interval doubling until the relative change of
// one refinement step drops below rel_tol.
Quadrature integrate_refined(const std::function<double(double)>& f, double a, double b,
                             std::size_t n0 = 64, double rel_tol = 1e-9,
                             int max_doublings = 16);

// In-place radix-2 FFT; size must be a power of two. The inverse transform
// includes the 1/n factor.
void fft_pow2(std::vector<std::complex<double>>& a, bool inverse);

// O(n^2) reference DFT used to cross-check the FFT in tests.
std::vector<std::complex<double>> dft_naive(const std::vector<std::complex<double>>& a,
                                            bool inverse);

}  // namespace aggsim

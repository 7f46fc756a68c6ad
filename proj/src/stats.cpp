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

#include "aggsim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace aggsim {

double sinc(double x) {
    if (std::abs(x) < 1e-8) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

Moments compute_moments(std::span<const double> samples) {
    Moments m;
    m.count = samples.size();
    if (m.count == 0) return m;
    double sum = 0.0;
    for (double v : samples) sum += v;
    m.mean = sum / static_cast<double>(m.count);
    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double v : samples) {
        const double d = v - m.mean;
        const double d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    const double n = static_cast<double>(m.count);
    if (m.count > 1) m.variance = m2 / (n - 1.0);
    if (m2 > 0.0) {
        const double s2 = m2 / n;
        m.skewness = (m3 / n) / std::pow(s2, 1.5);
        m.excess_kurtosis = (m4 / n) / (s2 * s2) - 3.0;
    }
    return m;
}

double ks_normal_distance(std::span<const double> samples) {
    const std::size_t n = samples.size();
    if (n < 2) throw std::invalid_argument("ks_normal_distance: need at least 2 samples");
    const Moments m = compute_moments(samples);
    const double sd = std::sqrt(m.variance);
    if (!(sd > 0.0)) throw std::invalid_argument("ks_normal_distance: zero variance");
    std::vector<double> z(samples.begin(), samples.end());
    for (double& v : z) v = (v - m.mean) / sd;
    std::sort(z.begin(), z.end());
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double c = normal_cdf(z[i]);
        const double hi = static_cast<double>(i + 1) / static_cast<double>(n) - c;
        const double lo = c - static_cast<double>(i) / static_cast<double>(n);
        d = std::max({d, hi, lo});
    }
    return d;
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_line: mismatched or too-short inputs");
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("fit_line: degenerate x values");
    LineFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    return f;
}

double trapezoid(const std::function<double(double)>& f, double a, double b, std::size_t n) {
    if (n == 0) throw std::invalid_argument("trapezoid: need at least one interval");
    const double h = (b - a) / static_cast<double>(n);
    double acc = 0.5 * (f(a) + f(b));
    for (std::size_t i = 1; i < n; ++i) acc += f(a + h * static_cast<double>(i));
    return acc * h;
}

Quadrature integrate_refined(const std::function<double(double)>& f, double a, double b,
                             std::size_t n0, double rel_tol, int max_doublings) {
    Quadrature q;
    std::size_t n = std::max<std::size_t>(n0, 2);
    double prev = trapezoid(f, a, b, n);
    for (int i = 0; i < max_doublings; ++i) {
        // Doubling reuses prior samples: new value = old/2 + midpoint sum.
        const double h = (b - a) / static_cast<double>(n);
        double mids = 0.0;
        for (std::size_t k = 0; k < n; ++k)
            mids += f(a + h * (static_cast<double>(k) + 0.5));
        const double cur = 0.5 * prev + mids * h * 0.5;
        n *= 2;
        q.last_change = std::abs(cur - prev) / std::max(std::abs(cur), 1e-300);
        prev = cur;
        if (q.last_change <= rel_tol) {
            q.converged = true;
            break;
        }
    }
    q.value = prev;
    q.intervals = n;
    return q;
}

void fft_pow2(std::vector<std::complex<double>>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("fft_pow2: size must be a power of two");
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = 2.0 * std::numbers::pi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
        const std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
    if (inverse)
        for (auto& z : a) z /= static_cast<double>(n);
}

std::vector<std::complex<double>> dft_naive(const std::vector<std::complex<double>>& a,
                                            bool inverse) {
    const std::size_t n = a.size();
    std::vector<std::complex<double>> out(n);
    const double sgn = inverse ? 1.0 : -1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            const double ang = sgn * 2.0 * std::numbers::pi * static_cast<double>(k) *
                               static_cast<double>(j) / static_cast<double>(n);
            acc += a[j] * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        out[k] = inverse ? acc / static_cast<double>(n) : acc;
    }
    return out;
}

}  // namespace aggsim

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

#include "aggsim/kernels.hpp"

namespace aggsim::kernels {
namespace {

double reduce_sum_scalar(const double* v, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += v[i];
    return acc;
}

double reduce_dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

void abs_sq_scalar(const std::complex<double>* src, double* dst, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double re = src[i].real(), im = src[i].imag();
        dst[i] = re * re + im * im;
    }
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

std::complex<double> conj_dot_scalar(const std::complex<double>* a,
                                     const std::complex<double>* b, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

}  // namespace

const Table& scalar_table() {
    static const Table table{"scalar",       reduce_sum_scalar, reduce_dot_scalar,
                             abs_sq_scalar,  axpy_scalar,       conj_dot_scalar};
    return table;
}

}  // namespace aggsim::kernels

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

// Compiled with -mavx2 -mfma; must only be entered after a runtime CPU check.

#include <immintrin.h>

#include "aggsim/kernels.hpp"

namespace aggsim::kernels {
namespace {

inline double hsum4(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

double reduce_sum_avx2(const double* v, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(v + i));
    double out = hsum4(acc);
    for (; i < n; ++i) out += v[i];
    return out;
}

double reduce_dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
    double out = hsum4(acc);
    for (; i < n; ++i) out += a[i] * b[i];
    return out;
}

void abs_sq_avx2(const std::complex<double>* src, double* dst, std::size_t n) {
    const double* p = reinterpret_cast<const double*>(src);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        // (re0,im0,re1,im1) and (re2,im2,re3,im3)
        __m256d z01 = _mm256_loadu_pd(p + 2 * i);
        __m256d z23 = _mm256_loadu_pd(p + 2 * i + 4);
        __m256d s01 = _mm256_mul_pd(z01, z01);
        __m256d s23 = _mm256_mul_pd(z23, z23);
        // hadd yields (|z0|^2,|z2|^2,|z1|^2,|z3|^2); permute back to order.
        __m256d h = _mm256_hadd_pd(s01, s23);
        h = _mm256_permute4x64_pd(h, _MM_SHUFFLE(3, 1, 2, 0));
        _mm256_storeu_pd(dst + i, h);
    }
    for (; i < n; ++i) {
        const double re = src[i].real(), im = src[i].imag();
        dst[i] = re * re + im * im;
    }
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d r = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
        _mm256_storeu_pd(y + i, r);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

std::complex<double> conj_dot_avx2(const std::complex<double>* a,
                                   const std::complex<double>* b, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    // Flips the sign of the imaginary lanes so a swapped product accumulates
    // re(a)*im(b) - im(a)*re(b).
    const __m256d conj_mask = _mm256_set_pd(0.0, -0.0, 0.0, -0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(pa + 2 * i);
        __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        acc_re = _mm256_fmadd_pd(va, vb, acc_re);
        __m256d swapped = _mm256_permute_pd(va, 0x5);  // (im0,re0,im1,re1)
        swapped = _mm256_xor_pd(swapped, conj_mask);   // (-im0,re0,-im1,re1)
        acc_im = _mm256_fmadd_pd(swapped, vb, acc_im);
    }
    double re = hsum4(acc_re);
    double im = hsum4(acc_im);
    for (; i < n; ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

}  // namespace

const Table* avx2_table_impl() {
    static const Table table{"avx2",      reduce_sum_avx2, reduce_dot_avx2,
                             abs_sq_avx2, axpy_avx2,       conj_dot_avx2};
    return &table;
}

}  // namespace aggsim::kernels

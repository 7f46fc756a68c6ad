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
#include <vector>

namespace aggsim::kernels {

// Data-parallel inner loops of the Monte Carlo pipeline. Scalar versions are
// the reference; SIMD variants must match them within floating-point
// reassociation tolerance and are selected once per process at startup.
struct Table {
    const char* name;
    // sum_i v[i]
    double (*reduce_sum)(const double* v, std::size_t n);
    // sum_i a[i]*b[i]
    double (*reduce_dot)(const double* a, const double* b, std::size_t n);
    // dst[i] = |src[i]|^2
    void (*abs_sq)(const std::complex<double>* src, double* dst, std::size_t n);
    // y[i] += a*x[i]
    void (*axpy)(double a, const double* x, double* y, std::size_t n);
    // sum_i conj(a[i])*b[i]
    std::complex<double> (*conj_dot)(const std::complex<double>* a,
                                     const std::complex<double>* b, std::size_t n);
};

const Table& scalar_table();

// True when the running CPU supports the AVX2 path and it was compiled in.
bool avx2_available();

// All tables usable on this machine (always contains the scalar table).
std::vector<const Table*> available_tables();

// Runtime-selected table. Honors AGGSIM_KERNEL=scalar|avx2|auto; "auto"
// (default) picks the widest available variant. Throws std::invalid_argument
// for unknown values or a variant this machine cannot run.
const Table& active();

}  // namespace aggsim::kernels

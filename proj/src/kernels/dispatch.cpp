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

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "aggsim/kernels.hpp"

namespace aggsim::kernels {

#if defined(AGGSIM_HAVE_AVX2)
const Table* avx2_table_impl();
#endif

bool avx2_available() {
#if defined(AGGSIM_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

std::vector<const Table*> available_tables() {
    std::vector<const Table*> out{&scalar_table()};
#if defined(AGGSIM_HAVE_AVX2)
    if (avx2_available()) out.push_back(avx2_table_impl());
#endif
    return out;
}

namespace {

const Table& select() {
    const char* env = std::getenv("AGGSIM_KERNEL");
    const std::string choice = env ? env : "auto";
    if (choice == "scalar") return scalar_table();
    if (choice == "avx2") {
#if defined(AGGSIM_HAVE_AVX2)
        if (avx2_available()) return *avx2_table_impl();
#endif
        throw std::invalid_argument("AGGSIM_KERNEL=avx2 requested but AVX2 is unavailable");
    }
    if (choice == "auto") {
#if defined(AGGSIM_HAVE_AVX2)
        if (avx2_available()) return *avx2_table_impl();
#endif
        return scalar_table();
    }
    throw std::invalid_argument("unknown AGGSIM_KERNEL value: " + choice);
}

}  // namespace

const Table& active() {
    static const Table& chosen = select();
    return chosen;
}

}  // namespace aggsim::kernels

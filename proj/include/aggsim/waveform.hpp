// Copyright 2026 The Artifact Authors
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

namespace aggsim {

// Discrete-time complex baseband signal, sample rate == bandwidth.
using Signal = std::vector<std::complex<double>>;

// Conjugate time reversal: h[n] -> conj(h[L-1-n]).
Signal time_reverse_conjugate(const Signal& h);

// Full linear convolution, length |a| + |b| - 1.
Signal convolve(const Signal& a, const Signal& b);

// Sum of |s[n]|^2 over all samples.
double signal_energy(const Signal& s);

// Sum of signal_energy over all branches.
double total_signal_energy(const std::vector<Signal>& branches);

// Superposition receiver: sum over branches of tx[i] convolved with
// channels[i].  Branch counts must match; output length is the longest
// per-branch convolution.
Signal receive(const std::vector<Signal>& tx, const std::vector<Signal>& channels);

struct TrTransmission {
    std::vector<Signal> tx;  // one waveform per branch, equal lengths
    std::size_t peak_index;  // receive index where all branches add coherently
    double scale;            // common amplitude applied to every branch
};

// Conjugate time-reversed waveform per channel.  Shorter branches are
// front-padded with zeros so every matched-filter peak lands on the same
// receive index, and a single scale makes the summed transmit energy equal
// total_energy.  One shared scale (not per-branch) is what makes the peak
// meet the power bound with equality.
TrTransmission make_tr_transmission(const std::vector<Signal>& channels,
                                    double total_energy);

// Peak receive power bound: total_energy * sum_i sum_n |h_i[n]|^2.
// Attained exactly by make_tr_transmission; strict for anything else that
// is not a common scalar multiple of the reversed channels.
double peak_power_bound(const std::vector<Signal>& channels, double total_energy);

// Frequency-domain view of a multi-branch transmission on an nfft-point
// grid wide enough that circular convolution equals linear convolution.
// Spectra use S(f) = (1/B) * DFT(s), channels use the plain DFT, and all
// integrals are rectangle sums with spacing B/nfft, so every inequality
// below holds exactly on the grid (not just in the continuum limit).
struct SpectralAnalysis {
    std::size_t nfft = 0;
    double band_energy = 0.0;          // integral of sum_i |S_i|^2
    double received_energy = 0.0;      // integral of |sum_i S_i H_i|^2
    double localization = 0.0;         // integral of (sum_i |S_i|^2)^2
    double localization_floor = 0.0;   // band_energy^2 / bandwidth
    double channel_power_integral = 0.0;  // integral of (sum_i |H_i|^2)^2
    double received_energy_bound = 0.0;   // sqrt(localization * channel_power_integral)
};

SpectralAnalysis analyze_transmission(const std::vector<Signal>& tx,
                                      const std::vector<Signal>& channels,
                                      double bandwidth);

}  // namespace aggsim

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

#include "aggsim/waveform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "aggsim/kernels.hpp"
#include "aggsim/stats.hpp"

namespace aggsim {

Signal time_reverse_conjugate(const Signal& h) {
    Signal out(h.size());
    for (std::size_t n = 0; n < h.size(); ++n)
        out[n] = std::conj(h[h.size() - 1 - n]);
    return out;
}

Signal convolve(const Signal& a, const Signal& b) {
    if (a.empty() || b.empty()) return {};
    Signal out(a.size() + b.size() - 1, {0.0, 0.0});
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

double signal_energy(const Signal& s) {
    if (s.empty()) return 0.0;
    std::vector<double> p(s.size());
    kernels::active().abs_sq(s.data(), p.data(), s.size());
    return kernels::active().reduce_sum(p.data(), p.size());
}

double total_signal_energy(const std::vector<Signal>& branches) {
    double e = 0.0;
    for (const auto& s : branches) e += signal_energy(s);
    return e;
}

Signal receive(const std::vector<Signal>& tx, const std::vector<Signal>& channels) {
    if (tx.size() != channels.size())
        throw std::invalid_argument("receive: branch count mismatch");
    Signal out;
    for (std::size_t i = 0; i < tx.size(); ++i) {
        Signal y = convolve(tx[i], channels[i]);
        if (y.size() > out.size()) out.resize(y.size(), {0.0, 0.0});
        for (std::size_t n = 0; n < y.size(); ++n) out[n] += y[n];
    }
    return out;
}

TrTransmission make_tr_transmission(const std::vector<Signal>& channels,
                                    double total_energy) {
    if (channels.empty())
        throw std::invalid_argument("make_tr_transmission: no channels");
    std::size_t max_len = 0;
    double channel_energy_sum = 0.0;
    for (const auto& h : channels) {
        if (h.empty()) throw std::invalid_argument("make_tr_transmission: empty channel");
        max_len = std::max(max_len, h.size());
        channel_energy_sum += signal_energy(h);
    }
    if (!(channel_energy_sum > 0.0))
        throw std::invalid_argument("make_tr_transmission: zero-energy channels");

    TrTransmission t;
    t.scale = std::sqrt(total_energy / channel_energy_sum);
    t.peak_index = max_len - 1;
    t.tx.reserve(channels.size());
    for (const auto& h : channels) {
        Signal s(max_len, {0.0, 0.0});
        const std::size_t pad = max_len - h.size();
        // conj-reverse lands its matched peak at h.size()-1; front padding
        // shifts it to the shared index max_len-1.
        for (std::size_t n = 0; n < h.size(); ++n)
            s[pad + n] = t.scale * std::conj(h[h.size() - 1 - n]);
        t.tx.push_back(std::move(s));
    }
    return t;
}

double peak_power_bound(const std::vector<Signal>& channels, double total_energy) {
    return total_energy * total_signal_energy(channels);
}

SpectralAnalysis analyze_transmission(const std::vector<Signal>& tx,
                                      const std::vector<Signal>& channels,
                                      double bandwidth) {
    if (tx.size() != channels.size())
        throw std::invalid_argument("analyze_transmission: branch count mismatch");
    if (!(bandwidth > 0.0))
        throw std::invalid_argument("analyze_transmission: bandwidth must be positive");
    std::size_t conv_len = 1;
    for (std::size_t i = 0; i < tx.size(); ++i)
        conv_len = std::max(conv_len, tx[i].size() + channels[i].size());
    std::size_t nfft = 1;
    while (nfft < conv_len) nfft <<= 1;

    SpectralAnalysis a;
    a.nfft = nfft;
    const double df = bandwidth / static_cast<double>(nfft);

    std::vector<double> s_power(nfft, 0.0);  // sum_i |S_i(f_k)|^2
    std::vector<double> h_power(nfft, 0.0);  // sum_i |H_i(f_k)|^2
    Signal r_spec(nfft, {0.0, 0.0});         // sum_i S_i(f_k) H_i(f_k)
    Signal buf;
    for (std::size_t i = 0; i < tx.size(); ++i) {
        buf.assign(nfft, {0.0, 0.0});
        std::copy(tx[i].begin(), tx[i].end(), buf.begin());
        fft_pow2(buf, false);
        Signal s_spec = buf;
        for (auto& v : s_spec) v /= bandwidth;

        buf.assign(nfft, {0.0, 0.0});
        std::copy(channels[i].begin(), channels[i].end(), buf.begin());
        fft_pow2(buf, false);

        for (std::size_t k = 0; k < nfft; ++k) {
            s_power[k] += std::norm(s_spec[k]);
            h_power[k] += std::norm(buf[k]);
            r_spec[k] += s_spec[k] * buf[k];
        }
    }

    double band_energy = 0.0, received = 0.0, loc = 0.0, chan = 0.0;
    for (std::size_t k = 0; k < nfft; ++k) {
        band_energy += s_power[k];
        received += std::norm(r_spec[k]);
        loc += s_power[k] * s_power[k];
        chan += h_power[k] * h_power[k];
    }
    a.band_energy = band_energy * df;
    a.received_energy = received * df;
    a.localization = loc * df;
    a.channel_power_integral = chan * df;
    a.localization_floor = a.band_energy * a.band_energy / bandwidth;
    a.received_energy_bound = std::sqrt(a.localization * a.channel_power_integral);
    return a;
}

}  // namespace aggsim

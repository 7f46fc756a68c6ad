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

#include "aggsim/harness.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "aggsim/agg_protocol.hpp"
#include "aggsim/channel.hpp"
#include "aggsim/grid_routing.hpp"
#include "aggsim/kernels.hpp"
#include "aggsim/lifetime.hpp"
#include "aggsim/rng.hpp"
#include "aggsim/stats.hpp"
#include "aggsim/trc_link.hpp"
#include "aggsim/waveform.hpp"

namespace aggsim {

namespace {

// Output failures get their own type so the caller can map them to a
// distinct exit code.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

void ExperimentConfig::set(const std::string& key, const std::string& value) {
    if (key.empty()) throw std::invalid_argument("config: empty key");
    values_[key] = value;
}

void ExperimentConfig::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: " + path + ":" +
                                        std::to_string(lineno) + ": expected key=value");
        set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
}

void ExperimentConfig::require_keys(const std::vector<std::string>& allowed) const {
    for (const auto& [key, value] : values_) {
        bool ok = false;
        for (const auto& a : allowed)
            if (a == key) {
                ok = true;
                break;
            }
        if (!ok) throw std::invalid_argument("config: unknown key '" + key + "'");
    }
}

bool ExperimentConfig::has(const std::string& key) const {
    return values_.count(key) != 0;
}

std::string ExperimentConfig::get_string(const std::string& key,
                                         const std::string& fallback) const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

double ExperimentConfig::get_double(const std::string& key, double fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    try {
        std::size_t used = 0;
        const double v = std::stod(it->second, &used);
        if (used != it->second.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("config: key '" + key + "' is not a number: " +
                                    it->second);
    }
}

long long ExperimentConfig::get_int(const std::string& key, long long fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    try {
        std::size_t used = 0;
        const long long v = std::stoll(it->second, &used);
        if (used != it->second.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("config: key '" + key + "' is not an integer: " +
                                    it->second);
    }
}

void CsvTable::add_meta(const std::string& key, const std::string& value) {
    meta.emplace_back(key, value);
}

void CsvTable::add_meta(const std::string& key, double value) {
    meta.emplace_back(key, format_number(value));
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0";  // covers -0.0
    if (v == std::floor(v) && std::abs(v) < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(v));
        return buf;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string render_csv(const CsvTable& table) {
    std::ostringstream out;
    for (const auto& [k, v] : table.meta) out << "# " << k << "=" << v << "\n";
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        out << (c ? "," : "") << table.columns[c];
    out << "\n";
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size())
            throw std::logic_error("csv row width != column count");
        for (std::size_t c = 0; c < row.size(); ++c)
            out << (c ? "," : "") << format_number(row[c]);
        out << "\n";
    }
    return out.str();
}

}  // namespace

void write_csv_atomic(const CsvTable& table, const std::string& path) {
    const std::string body = render_csv(table);
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp + ": " + std::strerror(errno));
        out << body;
        out.flush();
        if (!out) throw IoError("write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw IoError("rename " + tmp + " -> " + path + ": " + std::strerror(errno));
}

namespace {

// ---- shared config fragments --------------------------------------------

const std::vector<std::string> kChannelKeys = {"bandwidth", "delta",
                                               "bins_per_half_delta", "alpha",
                                               "noise_density"};

ChannelParams sampled_channel_from(const ExperimentConfig& cfg) {
    const double bandwidth = cfg.get_double("bandwidth", 1.0);
    const double delta = cfg.get_double("delta", bandwidth / 64.0);
    const long long bins = cfg.get_int("bins_per_half_delta", 8);
    if (bins < 8) throw std::invalid_argument("config: bins_per_half_delta must be >= 8");
    ChannelParams p = ChannelParams::with_resolution(bandwidth, delta,
                                                     static_cast<std::size_t>(bins));
    p.alpha = cfg.get_double("alpha", 3.0);
    p.noise_density = cfg.get_double("noise_density", 1.0);
    p.validate();
    return p;
}

// Analytic-only experiments never sample H(f), so delta may equal B and no
// grid is required.
ChannelParams analytic_channel_from(const ExperimentConfig& cfg) {
    ChannelParams p;
    p.bandwidth = cfg.get_double("bandwidth", 1.0);
    p.delta = cfg.get_double("delta", p.bandwidth);
    p.alpha = cfg.get_double("alpha", 3.0);
    p.noise_density = cfg.get_double("noise_density", 1.0);
    if (!(p.bandwidth > 0.0) || !(p.delta > 0.0) || p.delta > p.bandwidth)
        throw std::invalid_argument("config: need 0 < delta <= bandwidth");
    if (!(p.alpha > 2.0)) throw std::invalid_argument("config: alpha must be > 2");
    if (!(p.noise_density > 0.0))
        throw std::invalid_argument("config: noise_density must be > 0");
    return p;
}

void add_channel_meta(CsvTable& t, const ChannelParams& p) {
    t.add_meta("bandwidth", p.bandwidth);
    t.add_meta("delta", p.delta);
    t.add_meta("alpha", p.alpha);
    t.add_meta("noise_density", p.noise_density);
}

// ---- experiments ---------------------------------------------------------

CsvTable run_mc_x(const ExperimentConfig& cfg) {
    std::vector<std::string> keys = kChannelKeys;
    keys.insert(keys.end(), {"nodes", "range", "trials", "seed", "power", "rho0"});
    cfg.require_keys(keys);
    const ChannelParams params = sampled_channel_from(cfg);
    McConfig mc;
    mc.nodes = static_cast<std::size_t>(cfg.get_int("nodes", 64));
    mc.range = cfg.get_double("range", 1.0);
    mc.trials = static_cast<std::size_t>(cfg.get_int("trials", 1000));
    mc.master_seed = static_cast<std::uint64_t>(cfg.get_int("seed", 1));
    mc.power = cfg.get_double("power", 1.0);
    mc.rho0 = cfg.get_double("rho0", 1.0);

    const TrcLinkStats stats = monte_carlo_x(params, mc);

    CsvTable t;
    t.add_meta("experiment", "mc-x");
    add_channel_meta(t, params);
    t.add_meta("freq_bins", static_cast<double>(params.freq_bins));
    t.add_meta("window_bins", static_cast<double>(params.window_bins()));
    t.add_meta("nodes", static_cast<double>(mc.nodes));
    t.add_meta("range", mc.range);
    t.add_meta("trials", static_cast<double>(mc.trials));
    t.add_meta("seed", static_cast<double>(mc.master_seed));
    t.add_meta("power", mc.power);
    t.add_meta("rho0", mc.rho0);
    t.add_meta("kernel", kernels::active().name);
    t.add_meta("predicted_mean", stats.predicted_mean);
    t.add_meta("predicted_mean_finite", stats.predicted_mean_finite);
    t.add_meta("predicted_var", stats.predicted_var);
    t.add_meta("sample_mean", stats.moments.mean);
    t.add_meta("sample_var", stats.moments.variance);
    t.add_meta("sample_skewness", stats.moments.skewness);
    t.add_meta("sample_excess_kurtosis", stats.moments.excess_kurtosis);
    t.add_meta("k_mu_estimate", stats.k_mu_estimate);
    t.add_meta("k_sigma", stats.k_sigma);
    t.add_meta("k0", stats.k0);
    t.add_meta("ks_distance", stats.ks_distance);
    t.add_meta("mean_rate", stats.mean_rate);
    t.columns = {"trial", "x"};
    for (std::size_t i = 0; i < stats.samples.size(); ++i)
        t.rows.push_back({static_cast<double>(i), stats.samples[i]});
    return t;
}

CsvTable run_waveform(const ExperimentConfig& cfg) {
    cfg.require_keys({"branches", "taps", "seed", "total_energy", "bandwidth"});
    const long long branches = cfg.get_int("branches", 4);
    const long long taps = cfg.get_int("taps", 32);
    const std::uint64_t seed = static_cast<std::uint64_t>(cfg.get_int("seed", 1));
    const double total_energy = cfg.get_double("total_energy", 1.0);
    const double bandwidth = cfg.get_double("bandwidth", 1.0);
    if (branches < 1 || taps < 1)
        throw std::invalid_argument("config: branches and taps must be >= 1");

    std::vector<Signal> channels(static_cast<std::size_t>(branches));
    const double tap_scale = 1.0 / std::sqrt(static_cast<double>(taps));
    for (std::size_t i = 0; i < channels.size(); ++i) {
        Xoshiro256pp rng(derive_seed(seed, i));
        channels[i].resize(static_cast<std::size_t>(taps));
        for (auto& c : channels[i]) c = rng.complex_normal() * tap_scale;
    }

    const TrTransmission tr = make_tr_transmission(channels, total_energy);
    const Signal r = receive(tr.tx, channels);
    const double peak = std::norm(r[tr.peak_index]);
    const double bound = peak_power_bound(channels, total_energy);
    const SpectralAnalysis sa = analyze_transmission(tr.tx, channels, bandwidth);

    CsvTable t;
    t.add_meta("experiment", "waveform");
    t.add_meta("branches", static_cast<double>(branches));
    t.add_meta("taps", static_cast<double>(taps));
    t.add_meta("seed", static_cast<double>(seed));
    t.add_meta("total_energy", total_energy);
    t.add_meta("bandwidth", bandwidth);
    t.add_meta("peak_power", peak);
    t.add_meta("peak_bound", bound);
    t.add_meta("peak_ratio", peak / bound);
    t.add_meta("nfft", static_cast<double>(sa.nfft));
    t.add_meta("band_energy", sa.band_energy);
    t.add_meta("localization", sa.localization);
    t.add_meta("localization_floor", sa.localization_floor);
    t.add_meta("received_energy", sa.received_energy);
    t.add_meta("received_energy_bound", sa.received_energy_bound);
    t.add_meta("received_ratio", sa.received_energy / sa.received_energy_bound);
    t.columns = {"branch", "channel_energy", "tx_energy"};
    for (std::size_t i = 0; i < channels.size(); ++i)
        t.rows.push_back({static_cast<double>(i), signal_energy(channels[i]),
                          signal_energy(tr.tx[i])});
    return t;
}

CsvTable run_route(const ExperimentConfig& cfg) {
    cfg.require_keys({"side"});
    const long long side = cfg.get_int("side", 101);
    const TrafficMap map = build_traffic(side);
    const TrafficBounds tb = check_traffic_bounds(map);

    CsvTable t;
    t.add_meta("experiment", "route");
    t.add_meta("side", static_cast<double>(side));
    t.add_meta("nodes", static_cast<double>(map.node_count()));
    t.add_meta("ring_sum", static_cast<double>(tb.ring_sum));
    t.add_meta("ring_ok", tb.ring_ok ? "true" : "false");
    t.add_meta("annulus_nodes", static_cast<double>(tb.annulus_nodes));
    t.add_meta("lower_violations", static_cast<double>(tb.lower_violations));
    t.add_meta("upper_violations", static_cast<double>(tb.upper_violations));
    t.add_meta("min_normalized", tb.min_normalized);
    t.add_meta("max_normalized", tb.max_normalized);
    t.add_meta("relay_fraction", relay_fraction(map));
    t.columns = {"x", "y", "load"};
    for (std::int64_t y = -map.half; y <= map.half; ++y)
        for (std::int64_t x = -map.half; x <= map.half; ++x)
            t.rows.push_back({static_cast<double>(x), static_cast<double>(y),
                              static_cast<double>(map.load_at(x, y))});
    return t;
}

CsvTable run_tdma(const ExperimentConfig& cfg) {
    cfg.require_keys({"bandwidth", "delta", "alpha", "noise_density", "k_max",
                      "cell", "power"});
    const ChannelParams params = analytic_channel_from(cfg);
    const long long k_max = cfg.get_int("k_max", 2);
    const double cell = cfg.get_double("cell", 1.0);
    const double power = cfg.get_double("power", 1.0);
    if (k_max < 0) throw std::invalid_argument("config: k_max must be >= 0");

    CsvTable t;
    t.add_meta("experiment", "tdma");
    add_channel_meta(t, params);
    t.add_meta("k_max", static_cast<double>(k_max));
    t.add_meta("cell", cell);
    t.add_meta("power", power);
    t.add_meta("interference_constant", tdma_interference_constant(params.alpha));
    t.columns = {"k",          "frame_slots", "bound_sinr", "worst_sinr",
                 "spacing_ok", "bound_ok",    "rate"};
    for (long long k = 0; k <= k_max; ++k) {
        const ScheduleCheck sc = measure_schedule(params, static_cast<int>(k), cell, power);
        const double rate = tdma_broadcast_rate(params, static_cast<int>(k), cell, power);
        t.rows.push_back({static_cast<double>(k), static_cast<double>(sc.frame_length),
                          sc.bound_sinr, sc.worst_sinr, sc.spacing_ok ? 1.0 : 0.0,
                          sc.bound_ok ? 1.0 : 0.0, rate});
    }
    return t;
}

CsvTable run_scaling(const ExperimentConfig& cfg) {
    cfg.require_keys({"bandwidth", "delta", "alpha", "noise_density", "beta",
                      "gamma", "power", "log10_n_min", "log10_n_max",
                      "points_per_decade"});
    const ChannelParams params = analytic_channel_from(cfg);
    const double beta = cfg.get_double("beta", 0.35);
    const double gamma = cfg.get_double("gamma", 0.30);
    const double power = cfg.get_double("power", 1.0);
    const double lo = cfg.get_double("log10_n_min", 6.0);
    const double hi = cfg.get_double("log10_n_max", 12.0);
    const long long ppd = cfg.get_int("points_per_decade", 2);
    if (ppd < 1 || hi <= lo)
        throw std::invalid_argument("config: bad scaling sweep range");

    CsvTable t;
    t.add_meta("experiment", "scaling");
    add_channel_meta(t, params);
    t.add_meta("beta", beta);
    t.add_meta("gamma", gamma);
    t.add_meta("power", power);
    t.columns = {"n",
                 "d",
                 "big_r",
                 "clusters",
                 "lambda_gather",
                 "lambda_transport",
                 "lambda_deliver",
                 "achievable",
                 "r_inter",
                 "genie",
                 "gap_to_genie"};
    std::vector<double> ln_n, ln_ach, ln_genie;
    for (double e = lo; e <= hi + 1e-9; e += 1.0 / static_cast<double>(ppd)) {
        const double n = std::pow(10.0, e);
        const Partition part = make_partition(n, beta, gamma);
        const RateBreakdown rb = achievable_rate(params, part, power);
        t.rows.push_back({n, part.d, part.big_r, part.clusters, rb.lambda_gather,
                          rb.lambda_transport, rb.lambda_deliver, rb.achievable,
                          rb.r_inter, rb.genie, rb.genie / rb.achievable});
        ln_n.push_back(std::log(n));
        ln_ach.push_back(std::log(rb.achievable));
        ln_genie.push_back(std::log(rb.genie));
    }
    t.add_meta("achievable_slope", fit_line(ln_n, ln_ach).slope);
    t.add_meta("genie_slope", fit_line(ln_n, ln_genie).slope);
    return t;
}

CsvTable run_lifetime(const ExperimentConfig& cfg) {
    cfg.require_keys({"bandwidth", "delta", "alpha", "noise_density", "beta",
                      "gamma", "e0", "c2", "lambda_scale", "log10_n_min",
                      "log10_n_max", "points_per_decade"});
    const ChannelParams params = analytic_channel_from(cfg);
    LifetimeConfig lc;
    lc.beta = cfg.get_double("beta", lc.beta);
    lc.gamma = cfg.get_double("gamma", lc.gamma);
    lc.e0 = cfg.get_double("e0", lc.e0);
    lc.c2 = cfg.get_double("c2", lc.c2);
    lc.lambda_scale = cfg.get_double("lambda_scale", lc.lambda_scale);
    lc.log10_n_min = cfg.get_double("log10_n_min", lc.log10_n_min);
    lc.log10_n_max = cfg.get_double("log10_n_max", lc.log10_n_max);
    lc.points_per_decade =
        static_cast<std::size_t>(cfg.get_int("points_per_decade", 1));

    const LifetimeSweep sweep = lifetime_experiment(params, lc);

    CsvTable t;
    t.add_meta("experiment", "lifetime");
    add_channel_meta(t, params);
    t.add_meta("beta", lc.beta);
    t.add_meta("gamma", lc.gamma);
    t.add_meta("e0", lc.e0);
    t.add_meta("c2", lc.c2);
    t.add_meta("lambda_scale", lc.lambda_scale);
    t.add_meta("slope", sweep.slope);
    t.add_meta("intercept", sweep.intercept);
    t.add_meta("c3", sweep.c3);
    t.add_meta("ratio_monotone", sweep.ratio_monotone ? "true" : "false");
    t.add_meta("predicted_exponent", sweep.predicted_exponent);
    t.columns = {"n", "lambda", "baseline", "trc", "ratio", "normalized"};
    for (const auto& pt : sweep.points)
        t.rows.push_back(
            {pt.n, pt.lambda, pt.baseline, pt.trc, pt.ratio, pt.normalized});
    return t;
}

struct ExperimentEntry {
    const char* name;
    const char* help;
    CsvTable (*run)(const ExperimentConfig&);
};

const ExperimentEntry kExperiments[] = {
    {"mc-x",
     "Monte Carlo of the coherent-gain statistic X.  Keys: bandwidth=1 "
     "delta=B/64 bins_per_half_delta=8 alpha=3 noise_density=1 nodes=64 "
     "range=1 trials=1000 seed=1 power=1 rho0=1",
     run_mc_x},
    {"waveform",
     "Time-reversed transmission peak and band-energy audit.  Keys: "
     "branches=4 taps=32 seed=1 total_energy=1 bandwidth=1",
     run_waveform},
    {"route",
     "Lattice routes to the sink and per-cell relay loads.  Keys: side=101",
     run_route},
    {"tdma",
     "Reuse schedule audit against its interference bound.  Keys: "
     "bandwidth=1 delta=B alpha=3 noise_density=1 k_max=2 cell=1 power=1",
     run_tdma},
    {"scaling",
     "Per-source rate of the three-phase scheme across n.  Keys: bandwidth=1 "
     "delta=B alpha=3 noise_density=1 beta=0.35 gamma=0.3 power=1 "
     "log10_n_min=6 log10_n_max=12 points_per_decade=2",
     run_scaling},
    {"lifetime",
     "Battery lifetime of the scheme vs plain forwarding.  Keys: bandwidth=1 "
     "delta=B alpha=3 noise_density=1 beta=0.35 gamma=0.3 e0=1 c2=0.25 "
     "lambda_scale=0.001 log10_n_min=6 log10_n_max=12 points_per_decade=1",
     run_lifetime},
};

}  // namespace

std::vector<std::string> experiment_names() {
    std::vector<std::string> names;
    for (const auto& e : kExperiments) names.push_back(e.name);
    return names;
}

std::string experiment_help(const std::string& name) {
    for (const auto& e : kExperiments)
        if (name == e.name) return e.help;
    throw std::invalid_argument("unknown experiment: " + name);
}

int run_experiment(const std::string& name, const ExperimentConfig& config,
                   const std::string& out_path, std::ostream& log) {
    const ExperimentEntry* entry = nullptr;
    for (const auto& e : kExperiments)
        if (name == e.name) entry = &e;
    if (entry == nullptr) {
        log << "error: unknown experiment '" << name << "'\n";
        return 2;
    }
    CsvTable table;
    try {
        table = entry->run(config);
    } catch (const std::invalid_argument& e) {
        log << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        log << "error: " << e.what() << "\n";
        return 1;
    }
    try {
        if (out_path == "-") {
            std::cout << render_csv(table);
            std::cout.flush();
            if (!std::cout) throw IoError("stdout write failed");
        } else {
            write_csv_atomic(table, out_path);
        }
    } catch (const std::exception& e) {
        log << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

}  // namespace aggsim

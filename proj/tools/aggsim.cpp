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

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "aggsim/agg_protocol.hpp"
#include "aggsim/harness.hpp"
#include "aggsim/kernels.hpp"
#include "json.hpp"

namespace {

void print_usage(std::ostream& out) {
    out << "usage: aggsim <experiment> [--key value]... [--config FILE] [--out PATH]\n"
        << "       aggsim partition [--n N] [--beta B] [--gamma G] [--out PATH]\n"
        << "       aggsim list\n"
        << "\n"
        << "Runs one experiment and writes a CSV table (default: stdout);\n"
        << "`partition` writes the cluster geometry and rate breakdown as JSON.\n"
        << "Config precedence: built-in defaults < --config file < --key flags.\n"
        << "Environment: AGGSIM_KERNEL=scalar|avx2|auto, AGGSIM_THREADS=N\n"
        << "(thread count never changes output bytes).\n"
        << "\n"
        << "experiments:\n";
    for (const auto& name : aggsim::experiment_names())
        out << "  " << name << "\n    " << aggsim::experiment_help(name) << "\n";
}

// Geometry inspector: how one (n, beta, gamma) choice carves the network,
// and the per-phase rates that result.
int run_partition_dump(const aggsim::ExperimentConfig& cfg,
                       const std::string& out_path) {
    cfg.require_keys({"n", "beta", "gamma", "bandwidth", "delta", "alpha",
                      "noise_density", "power"});
    aggsim::ChannelParams p;
    p.bandwidth = cfg.get_double("bandwidth", 1.0);
    p.delta = cfg.get_double("delta", 1.0);
    p.alpha = cfg.get_double("alpha", 3.0);
    p.noise_density = cfg.get_double("noise_density", 1.0);
    if (!(p.bandwidth > 0.0) || !(p.delta > 0.0) || p.delta > p.bandwidth)
        throw std::invalid_argument("partition: need 0 < delta <= bandwidth");
    if (!(p.alpha > 2.0)) throw std::invalid_argument("partition: alpha must be > 2");
    if (!(p.noise_density > 0.0))
        throw std::invalid_argument("partition: noise_density must be > 0");
    const double power = cfg.get_double("power", 1.0);

    const aggsim::Partition part = aggsim::make_partition(
        cfg.get_double("n", 1e8), cfg.get_double("beta", 0.35),
        cfg.get_double("gamma", 0.30));

    nlohmann::json j;
    j["n"] = part.n;
    j["beta"] = part.beta;
    j["gamma"] = part.gamma;
    j["d"] = part.d;
    j["R"] = part.big_r;
    j["d_prime"] = part.d_prime;
    j["clusters"] = part.clusters;
    j["n1"] = part.n1;
    j["n3"] = part.n3;
    j["valid"] = part.valid;
    if (part.valid) {
        const aggsim::RateBreakdown rb = aggsim::achievable_rate(p, part, power);
        j["rates"] = {{"gather", rb.lambda_gather},
                      {"transport", rb.lambda_transport},
                      {"deliver", rb.lambda_deliver},
                      {"achievable", rb.achievable},
                      {"inter_cluster", rb.r_inter},
                      {"genie_ceiling", rb.genie}};
    }

    const std::string body = j.dump(2) + "\n";
    if (out_path == "-") {
        std::cout << body;
        return std::cout ? 0 : 3;
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    out << body;
    out.flush();
    if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return 3;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty() || args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
        print_usage(args.empty() ? std::cerr : std::cout);
        return args.empty() ? 2 : 0;
    }
    if (args[0] == "list") {
        for (const auto& name : aggsim::experiment_names()) std::cout << name << "\n";
        return 0;
    }

    const std::string experiment = args[0];
    std::string out_path = "-";
    aggsim::ExperimentConfig config;
    try {
        for (std::size_t i = 1; i < args.size(); ++i) {
            const std::string& a = args[i];
            if (a.rfind("--", 0) != 0) {
                std::cerr << "error: expected --key, got '" << a << "'\n";
                return 2;
            }
            std::string key = a.substr(2);
            std::string value;
            const std::size_t eq = key.find('=');
            if (eq != std::string::npos) {
                value = key.substr(eq + 1);
                key = key.substr(0, eq);
            } else {
                if (i + 1 >= args.size()) {
                    std::cerr << "error: missing value for --" << key << "\n";
                    return 2;
                }
                value = args[++i];
            }
            if (key == "config")
                config.load_file(value);
            else if (key == "out")
                out_path = value;
            else
                config.set(key, value);
        }
        // Touch the kernel table up front so an invalid AGGSIM_KERNEL fails
        // loudly instead of mid-experiment.
        (void)aggsim::kernels::active();
        if (experiment == "partition") return run_partition_dump(config, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    return aggsim::run_experiment(experiment, config, out_path, std::cerr);
}

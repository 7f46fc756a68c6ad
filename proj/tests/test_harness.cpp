#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include "aggsim/harness.hpp"
#include "doctest.h"

using namespace aggsim;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(bool(in));
    std::ostringstream body;
    body << in.rdbuf();
    return body.str();
}

bool file_exists(const std::string& path) {
    return bool(std::ifstream(path));
}

}  // namespace

TEST_CASE("config stores, converts, and rejects") {
    ExperimentConfig cfg;
    CHECK_FALSE(cfg.has("trials"));
    cfg.set("trials", "25");
    cfg.set("range", "2.5");
    cfg.set("label", "fast");
    CHECK(cfg.has("trials"));
    CHECK(cfg.get_int("trials", 0) == 25);
    CHECK(cfg.get_double("range", 0.0) == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(cfg.get_string("label", "") == "fast");
    // Fallbacks only apply to absent keys.
    CHECK(cfg.get_int("missing", 7) == 7);
    CHECK(cfg.get_double("missing", 1.25) == doctest::Approx(1.25));
    CHECK(cfg.get_string("missing", "d") == "d");

    cfg.set("bad", "12x");
    CHECK_THROWS_AS(cfg.get_int("bad", 0), std::invalid_argument);
    CHECK_THROWS_AS(cfg.get_double("bad", 0.0), std::invalid_argument);
    cfg.set("frac", "2.5");
    CHECK_THROWS_AS(cfg.get_int("frac", 0), std::invalid_argument);
    CHECK_THROWS_AS(ExperimentConfig().set("", "v"), std::invalid_argument);

    ExperimentConfig schema;
    schema.set("alpha", "3");
    schema.set("beta", "0.3");
    CHECK_NOTHROW(schema.require_keys({"alpha", "beta", "gamma"}));
    CHECK_THROWS_AS(schema.require_keys({"alpha"}), std::invalid_argument);
}

TEST_CASE("config file parsing: comments, blanks, whitespace") {
    const std::string path = "/tmp/aggsim_harness_cfg.txt";
    {
        std::ofstream out(path, std::ios::trunc);
        out << "# full-line comment\n"
            << "\n"
            << "  trials = 12   # inline comment\n"
            << "range=0.5\n"
            << "\t seed =  9 \n";
    }
    ExperimentConfig cfg;
    cfg.load_file(path);
    CHECK(cfg.get_int("trials", 0) == 12);
    CHECK(cfg.get_double("range", 0.0) == doctest::Approx(0.5));
    CHECK(cfg.get_int("seed", 0) == 9);
    CHECK(cfg.values().size() == 3);

    {
        std::ofstream out(path, std::ios::trunc);
        out << "this line has no equals sign\n";
    }
    ExperimentConfig bad;
    CHECK_THROWS_AS(bad.load_file(path), std::invalid_argument);
    CHECK_THROWS_AS(bad.load_file("/tmp/aggsim_no_such_config.txt"),
                    std::invalid_argument);
    std::remove(path.c_str());
}

TEST_CASE("number formatting round-trips cleanly") {
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(123.0) == "123");
    CHECK(format_number(-7.0) == "-7");
    CHECK(format_number(1e14) == "100000000000000");
    // Integral but past the %lld window: falls through to %.17g, which picks
    // fixed notation here because the exponent is below the precision.
    CHECK(format_number(1e16) == "10000000000000000");
    CHECK(format_number(0.1) == "0.10000000000000001");
    CHECK(format_number(std::nan("")) == "nan");
    CHECK(format_number(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(format_number(-std::numeric_limits<double>::infinity()) == "-inf");
    // Round trip: parse the emitted form back to the identical double.
    for (double v : {0.1, 1.0 / 3.0, 2.5e-17, 9.815e300}) {
        CHECK(std::stod(format_number(v)) == v);
    }
}

TEST_CASE("atomic CSV writes are stable byte-for-byte") {
    CsvTable t;
    t.add_meta("experiment", "demo");
    t.add_meta("alpha", 3.0);
    t.add_meta("ratio", 0.1);
    t.columns = {"i", "value"};
    t.rows.push_back({0.0, 1.5});
    t.rows.push_back({1.0, -0.0});

    const std::string path = "/tmp/aggsim_harness_table.csv";
    write_csv_atomic(t, path);
    CHECK(file_exists(path));
    CHECK_FALSE(file_exists(path + ".tmp"));
    const std::string first = slurp(path);
    CHECK(first ==
          "# experiment=demo\n# alpha=3\n# ratio=0.10000000000000001\n"
          "i,value\n0,1.5\n1,0\n");
    write_csv_atomic(t, path);
    CHECK(slurp(path) == first);

    CsvTable ragged = t;
    ragged.rows.push_back({2.0});
    CHECK_THROWS_AS(write_csv_atomic(ragged, path), std::logic_error);
    // The failed write must not clobber the previous table.
    CHECK(slurp(path) == first);
    std::remove(path.c_str());
}

TEST_CASE("experiment registry") {
    const auto names = experiment_names();
    REQUIRE(names.size() == 6);
    CHECK(names[0] == "mc-x");
    for (const auto& n : names) CHECK_FALSE(experiment_help(n).empty());
    CHECK_THROWS_AS(experiment_help("nope"), std::invalid_argument);
}

TEST_CASE("run_experiment maps failures to distinct exit codes") {
    std::ostringstream log;
    ExperimentConfig empty;
    CHECK(run_experiment("no-such-experiment", empty, "/tmp/x.csv", log) == 2);

    ExperimentConfig typo;
    typo.set("trails", "10");  // misspelled key must be rejected, not ignored
    CHECK(run_experiment("mc-x", typo, "/tmp/x.csv", log) == 2);

    ExperimentConfig badval;
    badval.set("side", "100");  // traffic grids need an odd side
    CHECK(run_experiment("route", badval, "/tmp/x.csv", log) == 2);

    ExperimentConfig tiny;
    tiny.set("nodes", "2");
    tiny.set("trials", "3");
    CHECK(run_experiment("mc-x", tiny, "/tmp/no_such_dir_aggsim/x.csv", log) == 3);

    const std::string out = "/tmp/aggsim_harness_mcx.csv";
    REQUIRE(run_experiment("mc-x", tiny, out, log) == 0);
    const std::string body = slurp(out);
    CHECK(body.find("# experiment=mc-x\n") != std::string::npos);
    CHECK(body.find("# trials=3\n") != std::string::npos);
    CHECK(body.find("trial,x\n") != std::string::npos);
    std::remove(out.c_str());
}

TEST_CASE("results are byte-identical across worker counts") {
    const char* saved = std::getenv("AGGSIM_THREADS");
    const std::string saved_copy = saved ? saved : "";

    ExperimentConfig tiny;
    tiny.set("nodes", "3");
    tiny.set("trials", "8");
    tiny.set("seed", "42");

    std::ostringstream log;
    const std::string out1 = "/tmp/aggsim_harness_t1.csv";
    const std::string out5 = "/tmp/aggsim_harness_t5.csv";
    ::setenv("AGGSIM_THREADS", "1", 1);
    REQUIRE(run_experiment("mc-x", tiny, out1, log) == 0);
    ::setenv("AGGSIM_THREADS", "5", 1);
    REQUIRE(run_experiment("mc-x", tiny, out5, log) == 0);

    if (saved)
        ::setenv("AGGSIM_THREADS", saved_copy.c_str(), 1);
    else
        ::unsetenv("AGGSIM_THREADS");

    CHECK(slurp(out1) == slurp(out5));
    std::remove(out1.c_str());
    std::remove(out5.c_str());
}

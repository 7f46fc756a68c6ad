#pragma once

#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace aggsim {

// Flat string key=value configuration. Every experiment declares its full
// key schema; unknown keys are rejected up front so typos cannot silently
// fall back to defaults.
class ExperimentConfig {
  public:
    void set(const std::string& key, const std::string& value);

    // Merges `key=value` lines from a file; '#' starts a comment.
    void load_file(const std::string& path);

    // Throws std::invalid_argument naming the first key outside `allowed`.
    void require_keys(const std::vector<std::string>& allowed) const;

    bool has(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key, double fallback) const;
    long long get_int(const std::string& key, long long fallback) const;

    const std::map<std::string, std::string>& values() const { return values_; }

  private:
    std::map<std::string, std::string> values_;
};

// Tabular result with `# key=value` provenance headers. Numbers render via
// %.17g (integral values as plain integers), so emitted files are
// bit-reproducible for identical inputs.
struct CsvTable {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    void add_meta(const std::string& key, const std::string& value);
    void add_meta(const std::string& key, double value);
};

// Shortest round-trip decimal form: integers plain, else %.17g.
std::string format_number(double v);

// Writes to a temp file in the target directory, then renames into place,
// so readers never observe a partially written table.
void write_csv_atomic(const CsvTable& table, const std::string& path);

// Names of the registered experiments, in CLI order.
std::vector<std::string> experiment_names();

// One-line usage summary of an experiment's keys and defaults.
std::string experiment_help(const std::string& name);

// Runs one experiment and writes its table to out_path ("-" for stdout).
// Exit codes: 0 success, 1 internal computation failure, 2 bad experiment
// name / unknown key / malformed value, 3 output I/O failure.
int run_experiment(const std::string& name, const ExperimentConfig& config,
                   const std::string& out_path, std::ostream& log);

}  // namespace aggsim

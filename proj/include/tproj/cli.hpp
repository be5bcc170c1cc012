// Command front end: parse a JSON run configuration, assemble the problem,
// execute a driver or an audit suite, and write traces/reports. Exit codes:
// 0 success (run converged / audit passed), 2 completed with a negative
// verdict (diverged, empty intersection, failed audit), 1 configuration
// error.
#pragma once

#include <optional>
#include <string>

#include <json.hpp>

namespace tproj::cli {

struct Options {
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed;
    std::optional<long> max_iter;
    std::optional<double> tol;      // overrides the residual tolerance
    std::optional<std::string> format;  // "csv" (default) or "json"
};

nlohmann::json load_json_file(const std::string& path);

int cmd_run(const nlohmann::json& config, const Options& opts);
int cmd_certify(const nlohmann::json& config, const Options& opts);
int cmd_crosscheck(const nlohmann::json& config, const Options& opts);
int cmd_oracle(const nlohmann::json& config, const Options& opts);

}  // namespace tproj::cli

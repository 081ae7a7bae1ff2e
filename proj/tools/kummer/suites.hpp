#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace kummer::cli {

struct Check {
    std::string name;
    bool passed;
    std::string provenance;  // how the expected side was obtained
    std::string detail;
};

// Unset fields take the per-suite defaults listed in suite_defaults().
struct SuiteOptions {
    std::optional<std::uint64_t> pmax;
    std::optional<std::uint64_t> nmax;
    std::optional<std::size_t> samples;
    std::uint64_t seed = 1;
};

const std::vector<std::string>& suite_names();
std::string suite_defaults(const std::string& suite);

// Throws PreconditionError for an unknown suite.
std::vector<Check> run_suite(const std::string& suite, const SuiteOptions& options);

std::size_t failures(const std::vector<Check>& checks);
nlohmann::json checks_json(const std::string& suite, const std::vector<Check>& checks);

}  // namespace kummer::cli

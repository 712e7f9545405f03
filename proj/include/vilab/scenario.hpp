#ifndef VILAB_SCENARIO_HPP
#define VILAB_SCENARIO_HPP

#include <string>
#include <vector>

#include "vilab/groups.hpp"
#include "vilab/weights.hpp"

namespace vilab {

// One executed query of a scenario. `expected` (with its source: "reference"
// for an outcome fixed by the underlying theory, "computed" for one
// established by this workbench's own oracles) is compared against the
// verdict; a mismatch fails the scenario.
struct QueryRecord {
    std::string query;
    std::string verdict;
    std::string expected;
    std::string source;
    bool pass = false;
    bool indeterminate = false;
    nlohmann::json certificate;
    double elapsed_ms = 0.0;  // text output only, never serialized to JSON
};

struct Report {
    std::string scenario;
    std::string ring;
    nlohmann::json group;
    std::vector<QueryRecord> queries;

    bool pass() const;
    bool indeterminate() const;
    nlohmann::json to_json() const;  // byte-identical across runs
    std::string to_text() const;
};

std::vector<std::string> scenario_names();
Report run_scenario(const std::string& name, const Caps& caps = {});

// generator source used by scenarios and the CLI: diagonal groups sieve the
// square ring, rooted kinds use the classical families, block unipotent
// groups use their invariant minors
std::vector<Poly> default_generators(const GroupSpec& H, const RingCtx& ctx, int sieve_max_deg = 8);

// uGen pairs for the coverage probe of the supported group kinds
std::vector<CoveragePair> coverage_pairs(const GroupSpec& H, const RingCtx& ctx);

}  // namespace vilab

#endif

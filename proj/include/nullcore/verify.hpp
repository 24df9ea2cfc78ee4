#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "nullcore/graph.hpp"

namespace nullcore {

struct SuiteConfig {
    std::string suite = "all";  // trees, bipartite, subdivisions, perturbations, unicyclic, all
    std::size_t max_n = 12;
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

struct Tally {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t unmet = 0;  // hypothesis did not apply to the sampled graph
};

struct Counterexample {
    std::string suite;
    std::string check;
    std::size_t trial = 0;
    Graph graph;
    nlohmann::json detail;
};

struct SuiteResult {
    std::map<std::string, Tally> tallies;  // keyed "suite/check"
    std::vector<Counterexample> counterexamples;

    bool ok() const { return counterexamples.empty(); }
};

const std::vector<std::string> &suite_names();

// Throws std::invalid_argument for an unknown suite or max_n / trials of zero.
// Trials run on up to config.threads threads; results are merged by trial index.
SuiteResult run_suite(const SuiteConfig &config);

// Thread count from NULLCORE_THREADS, defaulting to the hardware concurrency.
unsigned default_thread_count();

nlohmann::json to_json(const SuiteResult &r);

}  // namespace nullcore

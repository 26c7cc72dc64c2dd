#pragma once

#include <iostream>
#include <optional>
#include <string>

#include "endocable/report.hpp"
#include "endocable/search.hpp"

namespace endocable::cli {

struct Options {
    std::size_t cap;
    unsigned long long seed = 0;
    int threads = 1;
    long long budget_nodes = -1;
    double budget_seconds = -1.0;
    bool extended = false;
    std::string output_path;      // empty: stream to `out`
    std::ostream* out = &std::cout;

    Options();
    Budget budget() const { return Budget{budget_nodes, budget_seconds}; }
};

struct CommandResult {
    Report report;
    int exit_code = 0;
};

/// ENDOCABLE_CAP overrides the default closure cap when set.
std::size_t closure_cap_from_env();

struct CableSelector {
    enum class Kind { Scalar, Central, PhiZ } kind = Kind::Scalar;
    long long scalar = 1;
    int z = 0;
    int iterate = 1;
};

CommandResult cmd_analyze(const std::string& path, const Options& opts);
CommandResult cmd_retract(const std::string& path, const Options& opts);
CommandResult cmd_cable(const std::string& path, const CableSelector& sel,
                        const Options& opts);
CommandResult cmd_verify_identities(const std::string& path, const Options& opts);
CommandResult cmd_verify_theorem(const std::string& name, int n,
                                 const Options& opts);
CommandResult cmd_search(const std::string& model_path, const std::string& mode,
                         const Options& opts);
CommandResult cmd_enumerate(int n, bool up_to_iso, const std::string& diagonal,
                            const Options& opts);
CommandResult cmd_oracle_hol(long long p, int v, const Options& opts);
CommandResult cmd_oracle_t2(int v, const Options& opts);

}  // namespace endocable::cli

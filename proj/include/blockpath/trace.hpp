#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "blockpath/pattern.hpp"

namespace blockpath {

// One decision a proof-guided finder took. `sets` holds the named vertex
// sets the step relies on (host labels); `anchor` names the structural fact
// the step uses (degree pigeonhole, partition dichotomy, ...).
struct TraceStep {
    std::string step;
    std::string branch;
    std::map<std::string, std::vector<int>> sets;
    std::string anchor;
    std::vector<int> path_so_far;
};

struct ProofTrace {
    std::vector<TraceStep> steps;
    bool has_witness = false;
    std::string terminal;  // terminal claim when no witness applies

    TraceStep& add(const std::string& step, const std::string& branch, const std::string& anchor);
    nlohmann::ordered_json to_json() const;
};

// A proof step's stated guarantee failed at runtime. Carries the trace so
// the failure can be dumped and studied; never swallowed.
struct InternalInconsistency : std::runtime_error {
    ProofTrace trace;
    InternalInconsistency(const std::string& msg, ProofTrace t)
        : std::runtime_error(msg), trace(std::move(t)) {}
};

}  // namespace blockpath

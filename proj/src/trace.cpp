#include "blockpath/trace.hpp"

namespace blockpath {

TraceStep& ProofTrace::add(const std::string& step, const std::string& branch, const std::string& anchor) {
    steps.push_back(TraceStep{step, branch, {}, anchor, {}});
    return steps.back();
}

nlohmann::ordered_json ProofTrace::to_json() const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& s : steps) {
        nlohmann::ordered_json js;
        js["step"] = s.step;
        js["branch"] = s.branch;
        nlohmann::ordered_json sets;
        for (const auto& [name, vs] : s.sets) sets[name] = vs;
        js["sets"] = sets;
        js["anchor"] = s.anchor;
        js["path_so_far"] = s.path_so_far;
        arr.push_back(js);
    }
    nlohmann::ordered_json out;
    out["steps"] = arr;
    out["outcome"] = has_witness ? "witness" : terminal;
    return out;
}

}  // namespace blockpath

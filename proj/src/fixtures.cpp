#include "blockpath/fixtures.hpp"

#include <sstream>

namespace blockpath {

Digraph transitive_tournament(int n) {
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) arcs.emplace_back(i, j);
    return Digraph(n, arcs, Mode::oriented);
}

Digraph directed_cycle(int n) {
    if (n < 3)
        throw GraphError(GraphError::Kind::not_applicable, "directed cycle needs order >= 3");
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
    return Digraph(n, arcs, Mode::oriented);
}

Digraph rotational_tournament(int n, const std::vector<int>& offsets) {
    std::vector<Arc> arcs;
    for (int v = 0; v < n; ++v)
        for (int o : offsets) {
            if (o <= 0 || o >= n)
                throw GraphError(GraphError::Kind::not_applicable, "offset out of range");
            arcs.emplace_back(v, (v + o) % n);
        }
    return Digraph(n, arcs, Mode::oriented);
}

namespace {

// parses "name(a,b,c)" into name + args; plain names get no args
bool split_call(const std::string& s, std::string& name, std::vector<int>& args) {
    auto open = s.find('(');
    if (open == std::string::npos) {
        name = s;
        return true;
    }
    if (s.back() != ')') return false;
    name = s.substr(0, open);
    std::string inner = s.substr(open + 1, s.size() - open - 2);
    std::istringstream is(inner);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            args.push_back(std::stoi(tok));
        } catch (...) {
            return false;
        }
    }
    return true;
}

}  // namespace

Digraph fixture(const std::string& name) {
    std::string base;
    std::vector<int> args;
    if (!split_call(name, base, args))
        throw GraphError(GraphError::Kind::unknown_fixture, "cannot parse fixture name: " + name);

    if (base == "c3" && args.empty()) return directed_cycle(3);
    if (base == "regular5" && args.empty()) return rotational_tournament(5, {1, 2});
    if (base == "paley7" && args.empty()) return rotational_tournament(7, {1, 2, 4});
    if (base == "tt" && args.size() == 1) return transitive_tournament(args[0]);
    if (base == "directed_cycle" && args.size() == 1) return directed_cycle(args[0]);
    if (base == "rotational" && args.size() >= 2)
        return rotational_tournament(args[0], std::vector<int>(args.begin() + 1, args.end()));
    throw GraphError(GraphError::Kind::unknown_fixture, "unknown fixture: " + name);
}

}  // namespace blockpath

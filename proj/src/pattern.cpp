#include "blockpath/pattern.hpp"

#include <numeric>
#include <sstream>

namespace blockpath {

int BlockPattern::length() const {
    return std::accumulate(blocks.begin(), blocks.end(), 0);
}

int BlockPattern::order() const {
    return length() + 1;
}

Direction BlockPattern::arc_direction(int arc_index) const {
    int b = 0;
    int acc = 0;
    while (b < static_cast<int>(blocks.size()) && arc_index >= acc + blocks[b]) acc += blocks[b++];
    if (b >= static_cast<int>(blocks.size()))
        throw std::out_of_range("arc index beyond pattern length");
    return b % 2 == 0 ? first : opposite(first);
}

bool BlockPattern::is_antidirected() const {
    for (int b : blocks)
        if (b != 1) return false;
    return true;
}

BlockPattern pattern(std::vector<int> blocks, Direction first) {
    if (blocks.empty())
        throw GraphError(GraphError::Kind::not_applicable, "pattern needs at least one block");
    for (int b : blocks)
        if (b < 1)
            throw GraphError(GraphError::Kind::not_applicable, "zero-length block");
    BlockPattern p;
    p.blocks = std::move(blocks);
    p.first = first;
    return p;
}

BlockPattern flip(const BlockPattern& p) {
    BlockPattern q = p;
    q.first = opposite(p.first);
    return q;
}

BlockPattern mirror(const BlockPattern& p) {
    BlockPattern q;
    q.blocks.assign(p.blocks.rbegin(), p.blocks.rend());
    // direction of the original last block, flipped by the reversed traversal
    Direction last = p.blocks.size() % 2 == 1 ? p.first : opposite(p.first);
    q.first = opposite(last);
    return q;
}

BlockPattern three_block(int k, int l, int r) {
    return pattern({k, l, r}, Direction::forward);
}

BlockPattern two_block(int k, int l) {
    return pattern({k, l}, Direction::forward);
}

BlockPattern directed_path_pattern(int len) {
    return pattern({len}, Direction::forward);
}

std::string to_string(const BlockPattern& p) {
    std::ostringstream os;
    for (size_t i = 0; i < p.blocks.size(); ++i) {
        if (i) os << ',';
        os << p.blocks[i];
    }
    os << (p.first == Direction::forward ? "/fwd" : "/bwd");
    return os.str();
}

BlockPattern pattern_from_string(const std::string& blocks_csv, const std::string& first) {
    std::vector<int> blocks;
    std::istringstream is(blocks_csv);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            blocks.push_back(std::stoi(tok));
        } catch (...) {
            throw GraphError(GraphError::Kind::not_applicable, "bad block list: " + blocks_csv);
        }
    }
    Direction dir;
    if (first == "fwd" || first == "forward")
        dir = Direction::forward;
    else if (first == "bwd" || first == "backward")
        dir = Direction::backward;
    else
        throw GraphError(GraphError::Kind::not_applicable, "bad direction: " + first);
    return pattern(std::move(blocks), dir);
}

}  // namespace blockpath

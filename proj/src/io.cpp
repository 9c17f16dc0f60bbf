#include "blockpath/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "blockpath/fixtures.hpp"

namespace blockpath {

std::string serialize_edge_list(const Digraph& d) {
    std::ostringstream os;
    os << "dg " << d.order() << ' ' << d.arc_count() << ' ' << to_string(d.mode()) << '\n';
    for (const auto& [u, v] : d.arcs()) os << u << ' ' << v << '\n';
    return os.str();
}

Digraph parse_edge_list(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int n = -1, m = -1;
    Mode mode = Mode::oriented;
    bool header_seen = false;
    std::vector<Arc> arcs;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (!header_seen) {
            std::string tag, mode_str;
            if (!(ls >> tag)) continue;  // blank line before header
            if (tag != "dg" || !(ls >> n >> m >> mode_str) || n < 0 || m < 0)
                throw ParseError(ParseError::Kind::malformed_header, "line " + std::to_string(lineno) + ": expected 'dg <n> <m> <mode>'");
            try {
                mode = mode_from_string(mode_str);
            } catch (const GraphError&) {
                throw ParseError(ParseError::Kind::malformed_header, "line " + std::to_string(lineno) + ": unknown mode '" + mode_str + "'");
            }
            header_seen = true;
            continue;
        }
        int u, v;
        if (!(ls >> u)) continue;  // blank
        if (!(ls >> v))
            throw ParseError(ParseError::Kind::bad_line, "line " + std::to_string(lineno) + ": expected 'u v'");
        arcs.emplace_back(u, v);
    }
    if (!header_seen)
        throw ParseError(ParseError::Kind::malformed_header, "missing 'dg' header");
    if (static_cast<int>(arcs.size()) != m)
        throw ParseError(ParseError::Kind::arc_count_mismatch,
                         "declared " + std::to_string(m) + " arcs, found " + std::to_string(arcs.size()));
    try {
        return Digraph(n, arcs, mode);
    } catch (const GraphError& e) {
        throw ParseError(ParseError::Kind::mode_violation, std::string("invalid arc set: ") + e.what());
    }
}

std::string serialize_digraph6(const Digraph& d) {
    int n = d.order();
    std::string s = "&";
    s += static_cast<char>(n + 63);  // N(n) for n <= 62
    int nbits = n * n;
    int nchars = (nbits + 5) / 6;
    int bit = 0;
    for (int c = 0; c < nchars; ++c) {
        int val = 0;
        for (int b = 5; b >= 0; --b, ++bit) {
            if (bit < nbits) {
                int i = bit / n, j = bit % n;
                if (i != j && d.has_arc(i, j)) val |= 1 << b;
            }
        }
        s += static_cast<char>(val + 63);
    }
    return s;
}

Digraph parse_digraph6(const std::string& text, Mode mode) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty() || s[0] != '&')
        throw ParseError(ParseError::Kind::bad_digraph6, "missing '&' header");
    if (s.size() < 2)
        throw ParseError(ParseError::Kind::bad_digraph6, "truncated digraph6 string");
    int n = static_cast<int>(static_cast<unsigned char>(s[1])) - 63;
    if (n < 0 || n > kMaxOrder)
        throw ParseError(ParseError::Kind::bad_digraph6, "unsupported order in digraph6 header");
    int nbits = n * n;
    int nchars = (nbits + 5) / 6;
    if (static_cast<int>(s.size()) != 2 + nchars)
        throw ParseError(ParseError::Kind::bad_digraph6,
                         "expected " + std::to_string(2 + nchars) + " characters, got " + std::to_string(s.size()));
    std::vector<uint64_t> out(n, 0);
    int bit = 0;
    for (int c = 0; c < nchars; ++c) {
        int val = static_cast<int>(static_cast<unsigned char>(s[2 + c])) - 63;
        if (val < 0 || val > 63)
            throw ParseError(ParseError::Kind::bad_digraph6, "character out of range at position " + std::to_string(2 + c));
        for (int b = 5; b >= 0; --b, ++bit) {
            if (bit >= nbits) {
                if ((val >> b) & 1)
                    throw ParseError(ParseError::Kind::bad_digraph6, "nonzero padding bits");
                continue;
            }
            if ((val >> b) & 1) {
                int i = bit / n, j = bit % n;
                if (i == j)
                    throw ParseError(ParseError::Kind::bad_digraph6, "nonzero diagonal entry");
                out[i] |= 1ull << j;
            }
        }
    }
    Digraph d = Digraph::from_out_masks(n, out, mode);
    if (mode == Mode::oriented && d.has_digon())
        throw ParseError(ParseError::Kind::mode_violation, "digon present but oriented mode requested");
    return d;
}

Digraph parse_any(const std::string& text) {
    size_t i = text.find_first_not_of(" \t\r\n");
    if (i == std::string::npos)
        throw ParseError(ParseError::Kind::malformed_header, "empty input");
    if (text[i] == '&') return parse_digraph6(text.substr(i));
    return parse_edge_list(text);
}

Digraph load_digraph_file(const std::string& path) {
    if (path.rfind("fixture:", 0) == 0) return fixture(path.substr(8));
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return parse_any(ss.str());
    }
    std::ifstream f(path);
    if (!f)
        throw ParseError(ParseError::Kind::malformed_header, "cannot open file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_any(ss.str());
}

}  // namespace blockpath

#include "blockpath/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <tuple>

#include "blockpath/enumerate.hpp"
#include "blockpath/gseq.hpp"
#include "blockpath/io.hpp"
#include "blockpath/rng.hpp"

namespace blockpath {

std::string to_string(CampaignKind k) {
    switch (k) {
        case CampaignKind::theorem_t31: return "theorem_t31";
        case CampaignKind::theorem_t33: return "theorem_t33";
        case CampaignKind::lemma_l23: return "lemma_l23";
        case CampaignKind::tournament_paths: return "tournament_paths";
        case CampaignKind::conjecture_c32: return "conjecture_c32";
        case CampaignKind::bound_probe: return "bound_probe";
    }
    return "?";
}

CampaignKind campaign_kind_from_string(const std::string& s) {
    if (s == "theorem_t31" || s == "t31") return CampaignKind::theorem_t31;
    if (s == "theorem_t33" || s == "t33") return CampaignKind::theorem_t33;
    if (s == "lemma_l23" || s == "l23") return CampaignKind::lemma_l23;
    if (s == "tournament_paths") return CampaignKind::tournament_paths;
    if (s == "conjecture_c32" || s == "c32") return CampaignKind::conjecture_c32;
    if (s == "bound_probe") return CampaignKind::bound_probe;
    throw GraphError(GraphError::Kind::not_applicable, "unknown campaign kind: " + s);
}

namespace {

int campaign_threshold(const Campaign& c) {
    switch (c.kind) {
        case CampaignKind::theorem_t31: return c.k + 4;
        case CampaignKind::theorem_t33: return 2 * c.k + 1;
        case CampaignKind::lemma_l23: return static_cast<int>(g(c.m, c.i));
        case CampaignKind::conjecture_c32: return c.k + 3;
        default: return 0;
    }
}

// a counterexample must re-verify from its serialization alone
bool reverify_missing(const std::string& dg, int chi, const BlockPattern& p, int cap) {
    Digraph d = parse_edge_list(dg);
    if (chromatic_number(d, cap).chi != chi) return false;
    return !find_pattern(d, p).has_value();
}

struct Runner {
    const Campaign& c;
    ScanReport& r;
    int threshold;

    void record_counterexample(const Digraph& d, int chi, const BlockPattern& p) {
        std::string dg = serialize_edge_list(d);
        if (!reverify_missing(dg, chi, p, c.caps.chromatic))
            throw std::logic_error("counterexample failed re-verification from its serialization");
        r.counterexamples.push_back({std::move(dg), chi, to_string(p)});
    }

    void record_failure(const Digraph& d, const std::string& what, nlohmann::ordered_json trace) {
        r.failures.push_back({serialize_edge_list(d), what, std::move(trace)});
    }

    // first P(1,l,1), l >= k, that fits and matches; nullopt when none
    std::optional<int> sweep_p1l1(const Digraph& d, int k) {
        for (int l = k; l + 3 <= d.order(); ++l)
            if (find_pattern(d, three_block(1, l, 1))) return l;
        return std::nullopt;
    }

    void handle(const Digraph& d) {
        int chi = chromatic_number(d, c.caps.chromatic).chi;
        ++r.chi_hist[chi];
        if (chi < threshold) {
            ++r.skipped;
            return;
        }
        ++r.tested;
        switch (c.kind) {
            case CampaignKind::tournament_paths: {
                auto rep = contains_all_paths_report(d, std::max(7, c.n_max));
                for (const auto& p : rep.missing) record_counterexample(d, chi, p);
                break;
            }
            case CampaignKind::conjecture_c32: {
                if (!sweep_p1l1(d, c.k)) record_counterexample(d, chi, three_block(1, c.k, 1));
                break;
            }
            case CampaignKind::theorem_t31: {
                if (!sweep_p1l1(d, c.k)) record_counterexample(d, chi, three_block(1, c.k, 1));
                ++r.finder_runs;
                try {
                    auto res = find_p1l1_at_least(d, c.k, c.caps.chromatic);
                    const auto& b = res.witness.pattern.blocks;
                    if (b.size() != 3 || b[0] != 1 || b[2] != 1 || b[1] < c.k ||
                        res.witness.pattern.first != Direction::forward || !verify_witness(d, res.witness))
                        record_failure(d, "finder returned a non-conforming witness", res.trace.to_json());
                } catch (const InternalInconsistency& e) {
                    record_failure(d, e.what(), e.trace.to_json());
                }
                break;
            }
            case CampaignKind::theorem_t33: {
                BlockPattern target = three_block(1, c.k, 1);
                if (!find_pattern(d, target)) record_counterexample(d, chi, target);
                if (!d.has_digon()) {
                    ++r.finder_runs;
                    try {
                        auto res = find_p1k1(d, c.k, c.caps.chromatic);
                        if (res.witness.pattern != target || !verify_witness(d, res.witness))
                            record_failure(d, "finder returned a non-conforming witness", res.trace.to_json());
                    } catch (const InternalInconsistency& e) {
                        record_failure(d, e.what(), e.trace.to_json());
                    }
                }
                break;
            }
            case CampaignKind::lemma_l23: {
                int mid = c.m - 1 - c.k - c.i;
                BlockPattern target = c.i == 0 ? two_block(c.k, mid) : three_block(c.k, mid, c.i);
                if (!find_pattern(d, target)) record_counterexample(d, chi, target);
                if (c.i == 0 || !d.has_digon()) {
                    ++r.finder_runs;
                    try {
                        auto res = find_three_block_decomposition(d, c.k, c.i, c.m, c.caps.chromatic);
                        if (res.witness.pattern != target || !verify_witness(d, res.witness))
                            record_failure(d, "finder returned a non-conforming witness", res.trace.to_json());
                    } catch (const InternalInconsistency& e) {
                        record_failure(d, e.what(), e.trace.to_json());
                    }
                }
                break;
            }
            case CampaignKind::bound_probe: {
                if (!c.probe_pattern)
                    throw GraphError(GraphError::Kind::not_applicable, "bound_probe needs a pattern");
                if (c.probe_pattern->order() <= d.order() && !find_pattern(d, *c.probe_pattern))
                    record_counterexample(d, chi, *c.probe_pattern);
                break;
            }
        }
    }
};

}  // namespace

ScanReport run_campaign(const Campaign& c) {
    if (c.kind == CampaignKind::lemma_l23 && !g_in_domain(c.m, c.i))
        throw GraphError(GraphError::Kind::not_applicable, "lemma_l23 campaign needs valid (m,i)");
    if (c.shard >= 0 && (c.source == Source::tournaments || c.sampled))
        throw GraphError(GraphError::Kind::not_applicable, "shards apply to exhaustive digraph scans only");
    auto t0 = std::chrono::steady_clock::now();
    ScanReport r;
    r.campaign = c;
    Runner runner{c, r, campaign_threshold(c)};
    if (c.sampled) {
        SplitMix64 rng(c.seed);
        for (int n = c.n_min; n <= c.n_max; ++n)
            for (uint64_t s = 0; s < c.samples; ++s) {
                Digraph d = c.source == Source::tournaments ? random_tournament(n, rng)
                                                            : random_digraph(n, c.mode, rng);
                runner.handle(d);
            }
    } else if (c.source == Source::tournaments) {
        for (int n = c.n_min; n <= c.n_max; ++n)
            for_each_tournament(n, [&](const Digraph& t) { runner.handle(t); }, c.caps.tournaments);
    } else {
        for (int n = c.n_min; n <= c.n_max; ++n)
            for_each_labeled_digraph(n, c.mode, [&](const Digraph& d) {
                runner.handle(d);
                return true;
            }, c.caps.labeled, c.shard);
    }
    r.ms = static_cast<uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count());
    return r;
}

nlohmann::ordered_json ScanReport::to_json() const {
    nlohmann::ordered_json j;
    j["v"] = 1;
    j["kind"] = to_string(campaign.kind);
    j["k"] = campaign.k;
    if (campaign.kind == CampaignKind::lemma_l23) {
        j["m"] = campaign.m;
        j["i"] = campaign.i;
    }
    j["n"] = campaign.n_max;
    if (campaign.n_min != campaign.n_max) j["n_min"] = campaign.n_min;
    j["mode"] = to_string(campaign.mode);
    j["source"] = campaign.source == Source::tournaments ? "tournaments" : "digraphs";
    j["strategy"] = campaign.sampled ? "sampled" : "exhaustive";
    if (campaign.sampled) j["samples"] = campaign.samples;
    if (campaign.sampled)
        j["seed"] = campaign.seed;
    else
        j["seed"] = nullptr;
    if (campaign.probe_pattern) j["pattern"] = to_string(*campaign.probe_pattern);
    if (campaign.shard >= 0) j["shard"] = campaign.shard;
    j["tested"] = tested;
    j["skipped"] = skipped;
    j["finder_runs"] = finder_runs;
    nlohmann::ordered_json hist;
    for (const auto& [chi, count] : chi_hist) hist[std::to_string(chi)] = count;
    j["chi_hist"] = hist;
    nlohmann::ordered_json cxs = nlohmann::ordered_json::array();
    for (const auto& cx : counterexamples) {
        nlohmann::ordered_json row;
        row["dg"] = cx.dg;
        row["chi"] = cx.chi;
        row["missing"] = cx.missing;
        cxs.push_back(row);
    }
    j["counterexamples"] = cxs;
    nlohmann::ordered_json fls = nlohmann::ordered_json::array();
    for (const auto& f : failures) {
        nlohmann::ordered_json row;
        row["dg"] = f.dg;
        row["error"] = f.error;
        row["trace"] = f.trace;
        fls.push_back(row);
    }
    j["failures"] = fls;
    j["ms"] = ms;
    return j;
}

std::string ScanReport::to_jsonl() const {
    return to_json().dump();
}

ScanReport merge_reports(const std::vector<ScanReport>& shards) {
    if (shards.empty())
        throw GraphError(GraphError::Kind::not_applicable, "nothing to merge");
    ScanReport merged = shards[0];
    merged.campaign.shard = -1;
    merged.tested = 0;
    merged.skipped = 0;
    merged.finder_runs = 0;
    merged.chi_hist.clear();
    merged.counterexamples.clear();
    merged.failures.clear();
    merged.ms = 0;
    for (const auto& s : shards) {
        merged.tested += s.tested;
        merged.skipped += s.skipped;
        merged.finder_runs += s.finder_runs;
        for (const auto& [chi, count] : s.chi_hist) merged.chi_hist[chi] += count;
        merged.counterexamples.insert(merged.counterexamples.end(), s.counterexamples.begin(),
                                      s.counterexamples.end());
        merged.failures.insert(merged.failures.end(), s.failures.begin(), s.failures.end());
        merged.ms += s.ms;
    }
    std::sort(merged.counterexamples.begin(), merged.counterexamples.end(),
              [](const Counterexample& a, const Counterexample& b) {
                  return std::tie(a.dg, a.missing) < std::tie(b.dg, b.missing);
              });
    std::sort(merged.failures.begin(), merged.failures.end(),
              [](const FinderFailure& a, const FinderFailure& b) {
                  return std::tie(a.dg, a.error) < std::tie(b.dg, b.error);
              });
    return merged;
}

std::string campaign_hash(const nlohmann::ordered_json& report) {
    nlohmann::ordered_json echo = report;
    for (const char* key : {"tested", "skipped", "finder_runs", "chi_hist", "counterexamples", "failures", "ms"})
        echo.erase(key);
    std::string s = echo.dump();
    uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

bool store_append(const std::string& path, const ScanReport& report) {
    auto j = report.to_json();
    std::string hash = campaign_hash(j);
    {
        std::ifstream in(path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            try {
                auto existing = nlohmann::ordered_json::parse(line);
                if (campaign_hash(existing) == hash) return false;
            } catch (...) {
                continue;  // corrupt lines are the query path's concern
            }
        }
    }
    std::ofstream out(path, std::ios::app);
    if (!out)
        throw std::runtime_error("cannot open store for append: " + path);
    out << j.dump() << '\n';
    return true;
}

StoreQueryResult store_query(const std::string& path, const StoreFilter& filter) {
    StoreQueryResult res;
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open store: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        nlohmann::ordered_json j;
        try {
            j = nlohmann::ordered_json::parse(line);
        } catch (const std::exception& e) {
            res.corrupt_lines.emplace_back(lineno, e.what());
            continue;
        }
        if (!j.is_object() || !j.contains("v")) {
            res.corrupt_lines.emplace_back(lineno, "not a report object");
            continue;
        }
        if (filter.kind && j.value("kind", std::string()) != *filter.kind) continue;
        if (filter.k && j.value("k", -1) != *filter.k) continue;
        if (filter.n && j.value("n", -1) != *filter.n) continue;
        if (filter.mode && j.value("mode", std::string()) != *filter.mode) continue;
        res.reports.push_back(std::move(j));
    }
    return res;
}

}  // namespace blockpath

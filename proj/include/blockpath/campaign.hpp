#pragma once

#include <optional>

#include "json.hpp"

#include "blockpath/finders.hpp"

namespace blockpath {

enum class CampaignKind {
    theorem_t31,
    theorem_t33,
    lemma_l23,
    tournament_paths,
    conjecture_c32,
    bound_probe,
};

std::string to_string(CampaignKind k);
CampaignKind campaign_kind_from_string(const std::string& s);

enum class Source { digraphs, tournaments };

struct Campaign {
    CampaignKind kind = CampaignKind::conjecture_c32;
    int k = 0;
    int m = 0;   // lemma_l23 only
    int i = -1;  // lemma_l23 only
    int n_min = 1;
    int n_max = 1;
    Mode mode = Mode::oriented;
    Source source = Source::digraphs;
    bool sampled = false;
    uint64_t samples = 0;
    uint64_t seed = 0;
    std::optional<BlockPattern> probe_pattern;  // bound_probe only
    int shard = -1;                             // first pair-state digit, exhaustive digraph scans only

    struct Caps {
        int labeled = 6;
        int tournaments = 8;
        int chromatic = 16;
    } caps;
};

struct Counterexample {
    std::string dg;       // edge-list serialization
    int chi = 0;
    std::string missing;  // pattern "K,L,R/fwd"
};

struct FinderFailure {
    std::string dg;
    std::string error;
    nlohmann::ordered_json trace;
};

struct ScanReport {
    Campaign campaign;
    uint64_t tested = 0;
    uint64_t skipped = 0;
    uint64_t finder_runs = 0;
    std::map<int, uint64_t> chi_hist;
    std::vector<Counterexample> counterexamples;
    std::vector<FinderFailure> failures;
    uint64_t ms = 0;

    nlohmann::ordered_json to_json() const;
    std::string to_jsonl() const;  // single line
};

ScanReport run_campaign(const Campaign& c);

// Deterministic merge of shard reports: counts summed, rows sorted.
ScanReport merge_reports(const std::vector<ScanReport>& shards);

// FNV-1a over the campaign echo (report content minus results and ms).
std::string campaign_hash(const nlohmann::ordered_json& report);

struct StoreFilter {
    std::optional<std::string> kind;
    std::optional<int> k;
    std::optional<int> n;
    std::optional<std::string> mode;
};

struct StoreQueryResult {
    std::vector<nlohmann::ordered_json> reports;
    std::vector<std::pair<int, std::string>> corrupt_lines;  // (line number, message)
};

// Append-only JSONL store. Returns false when a report with the same
// campaign hash is already present (the line is not duplicated).
bool store_append(const std::string& path, const ScanReport& report);
StoreQueryResult store_query(const std::string& path, const StoreFilter& filter = {});

}  // namespace blockpath

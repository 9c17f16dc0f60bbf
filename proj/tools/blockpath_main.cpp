#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"

#include "blockpath/campaign.hpp"
#include "blockpath/enumerate.hpp"
#include "blockpath/fixtures.hpp"
#include "blockpath/gseq.hpp"
#include "blockpath/io.hpp"

using namespace blockpath;

namespace {

constexpr int kExitFound = 0;
constexpr int kExitNotFound = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconsistency = 3;

void print_witness(const PathWitness& w) {
    std::cout << "pattern " << to_string(w.pattern) << " witness";
    for (int v : w.vertices) std::cout << ' ' << v;
    std::cout << '\n';
}

int run(int argc, char** argv) {
    CLI::App app{"three-block path search in digraphs"};
    app.require_subcommand(1);

    // chi FILE
    auto* chi_cmd = app.add_subcommand("chi", "exact chromatic number with certificate");
    std::string chi_file;
    chi_cmd->add_option("file", chi_file, "edge-list or digraph6 file, '-' for stdin, fixture:NAME")->required();

    // find --pattern K,L,R --first fwd|bwd [--all] FILE
    auto* find_cmd = app.add_subcommand("find", "search for a block pattern");
    std::string find_pattern_csv, find_first = "fwd", find_file;
    bool find_all = false;
    find_cmd->add_option("--pattern", find_pattern_csv, "comma-separated block lengths")->required();
    find_cmd->add_option("--first", find_first, "fwd|bwd (default fwd)");
    find_cmd->add_flag("--all", find_all, "list every witness (host order <= 8)");
    find_cmd->add_option("file", find_file)->required();

    // prove --theorem t31|t33|l23|origins --k K [--m M --i I] [--trace] FILE
    auto* prove_cmd = app.add_subcommand("prove", "run a proof-guided finder");
    std::string theorem, prove_file;
    int prove_k = 1, prove_m = 0, prove_i = -1;
    bool want_trace = false;
    prove_cmd->add_option("--theorem", theorem, "t31|t33|l23|origins")->required();
    prove_cmd->add_option("--k", prove_k)->required();
    prove_cmd->add_option("--m", prove_m);
    prove_cmd->add_option("--i", prove_i);
    prove_cmd->add_flag("--trace", want_trace, "emit the JSON trace");
    prove_cmd->add_option("file", prove_file)->required();

    // enum --tournaments|--digraphs --n N [--mode M] [--format d6|edgelist]
    auto* enum_cmd = app.add_subcommand("enum", "stream digraphs or tournaments");
    bool enum_tournaments = false, enum_digraphs = false, enum_dedupe = false;
    int enum_n = 1;
    std::string enum_mode = "oriented", enum_format = "d6";
    enum_cmd->add_flag("--tournaments", enum_tournaments);
    enum_cmd->add_flag("--digraphs", enum_digraphs);
    enum_cmd->add_flag("--dedupe", enum_dedupe, "one representative per isomorphism class");
    enum_cmd->add_option("--n", enum_n)->required();
    enum_cmd->add_option("--mode", enum_mode);
    enum_cmd->add_option("--format", enum_format, "d6 (default) or edgelist");

    // scan --campaign KIND --k K --n-max N [...]
    auto* scan_cmd = app.add_subcommand("scan", "run a verification campaign");
    std::string scan_kind, scan_mode = "oriented", scan_store, scan_pattern_csv, scan_first = "fwd";
    int scan_k = 1, scan_n_max = 4, scan_n_min = -1, scan_m = 0, scan_i = -1, scan_shard = -1;
    uint64_t scan_samples = 0, scan_seed = 0;
    bool scan_tournaments = false;
    scan_cmd->add_option("--campaign", scan_kind, "t31|t33|l23|tournament_paths|c32|bound_probe")->required();
    scan_cmd->add_option("--k", scan_k);
    scan_cmd->add_option("--m", scan_m);
    scan_cmd->add_option("--i", scan_i);
    scan_cmd->add_option("--n-max", scan_n_max)->required();
    scan_cmd->add_option("--n-min", scan_n_min);
    scan_cmd->add_option("--mode", scan_mode);
    scan_cmd->add_option("--samples", scan_samples);
    scan_cmd->add_option("--seed", scan_seed);
    scan_cmd->add_option("--store", scan_store);
    scan_cmd->add_option("--shard", scan_shard);
    scan_cmd->add_flag("--tournaments", scan_tournaments, "enumerate tournaments instead of labeled digraphs");
    scan_cmd->add_option("--pattern", scan_pattern_csv, "bound_probe target blocks");
    scan_cmd->add_option("--first", scan_first);

    // bounds --m M
    auto* bounds_cmd = app.add_subcommand("bounds", "published upper bounds for three-block paths");
    int bounds_m = 4;
    bounds_cmd->add_option("--m", bounds_m)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            app.exit(e);
            return kExitFound;
        }
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }

    if (chi_cmd->parsed()) {
        Digraph d = load_digraph_file(chi_file);
        auto cert = chromatic_number(d);
        std::cout << "chi " << cert.chi << '\n';
        std::cout << "coloring";
        for (int c : cert.coloring) std::cout << ' ' << c;
        std::cout << '\n';
        if (cert.clique_is_evidence) {
            std::cout << "clique";
            for (int v : cert.clique) std::cout << ' ' << v;
            std::cout << '\n';
        } else {
            std::cout << "lower_bound exhaustive(" << cert.chi - 1 << "-coloring infeasible)\n";
        }
        return kExitFound;
    }

    if (find_cmd->parsed()) {
        Digraph d = load_digraph_file(find_file);
        BlockPattern p = pattern_from_string(find_pattern_csv, find_first);
        if (find_all) {
            auto all = find_all_patterns(d, p);
            for (const auto& w : all) print_witness(w);
            std::cout << "count " << all.size() << '\n';
            return all.empty() ? kExitNotFound : kExitFound;
        }
        auto w = find_pattern(d, p);
        if (!w) {
            std::cout << "none\n";
            return kExitNotFound;
        }
        print_witness(*w);
        return kExitFound;
    }

    if (prove_cmd->parsed()) {
        Digraph d = load_digraph_file(prove_file);
        FinderResult res;
        if (theorem == "t31")
            res = find_p1l1_at_least(d, prove_k);
        else if (theorem == "t33")
            res = find_p1k1(d, prove_k);
        else if (theorem == "origins")
            res = find_p1k1_via_origins(d, prove_k);
        else if (theorem == "l23") {
            if (prove_m < 4 || prove_i < 0) {
                std::cerr << "l23 needs --m and --i\n";
                return kExitUsage;
            }
            res = find_three_block_decomposition(d, prove_k, prove_i, prove_m);
        } else {
            std::cerr << "unknown theorem: " << theorem << '\n';
            return kExitUsage;
        }
        print_witness(res.witness);
        if (want_trace) std::cout << res.trace.to_json().dump(2) << '\n';
        return kExitFound;
    }

    if (enum_cmd->parsed()) {
        if (enum_tournaments == enum_digraphs) {
            std::cerr << "choose exactly one of --tournaments / --digraphs\n";
            return kExitUsage;
        }
        auto emit = [&](const Digraph& d) {
            if (enum_format == "edgelist")
                std::cout << serialize_edge_list(d);
            else
                std::cout << serialize_digraph6(d) << '\n';
        };
        if (enum_tournaments) {
            for_each_tournament(enum_n, emit);
        } else {
            Mode mode = mode_from_string(enum_mode);
            if (enum_dedupe)
                for (const auto& d : enumerate_digraphs_deduped(enum_n, mode)) emit(d);
            else
                for_each_labeled_digraph(enum_n, mode, [&](const Digraph& d) {
                    emit(d);
                    return true;
                });
        }
        return kExitFound;
    }

    if (scan_cmd->parsed()) {
        Campaign c;
        c.kind = campaign_kind_from_string(scan_kind);
        c.k = scan_k;
        c.m = scan_m;
        c.i = scan_i;
        c.n_max = scan_n_max;
        c.n_min = scan_n_min > 0 ? scan_n_min : scan_n_max;
        c.mode = mode_from_string(scan_mode);
        c.source = scan_tournaments ? Source::tournaments : Source::digraphs;
        c.shard = scan_shard;
        if (scan_samples > 0) {
            c.sampled = true;
            c.samples = scan_samples;
            c.seed = scan_seed;
            if (const char* env = std::getenv("BLOCKPATH_SEED")) c.seed = std::strtoull(env, nullptr, 10);
        }
        if (!scan_pattern_csv.empty()) c.probe_pattern = pattern_from_string(scan_pattern_csv, scan_first);
        ScanReport rep = run_campaign(c);
        std::cout << rep.to_jsonl() << '\n';
        if (!scan_store.empty()) {
            if (!store_append(scan_store, rep))
                std::cerr << "store: duplicate campaign hash, not appended\n";
        }
        return rep.counterexamples.empty() && rep.failures.empty() ? kExitFound : kExitNotFound;
    }

    if (bounds_cmd->parsed()) {
        std::cout << "g_extreme " << g_extreme(bounds_m) << '\n';
        std::cout << "burr " << 1LL * (bounds_m - 1) * (bounds_m - 1) << '\n';
        std::cout << "f_upper " << f_upper_bound(bounds_m) << '\n';
        return kExitFound;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const InternalInconsistency& e) {
        std::cerr << "internal-inconsistency: " << e.what() << '\n';
        std::cerr << e.trace.to_json().dump(2) << '\n';
        return kExitInconsistency;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

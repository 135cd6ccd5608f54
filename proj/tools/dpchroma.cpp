// Command-line front end: exact chromatic polynomials, DP color function
// minimization, gap and cone-equality scans, and the verification suites.
//
// Exit codes: 0 success / all checks pass, 1 check failure, 2 parse or
// capacity error.

#include "dpchroma/chromatic.hpp"
#include "dpchroma/corpus.hpp"
#include "dpchroma/counting.hpp"
#include "dpchroma/dp_function.hpp"
#include "dpchroma/lemma_checks.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace {

using dpchroma::BigInt;
using dpchroma::CheckReport;
using dpchroma::DPCover;
using dpchroma::DpOptions;
using dpchroma::Graph;
using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;

constexpr std::uint64_t kSuiteSeed = 0x64702d636f6cULL;

struct GraphInput {
    std::shared_ptr<const Graph> graph;
    std::string spec;
    std::vector<long long> labels;  // only for file inputs
};

GraphInput load_graph(const std::string& spec) {
    GraphInput in;
    in.spec = spec;
    if (std::filesystem::exists(spec)) {
        std::ifstream f(spec);
        if (!f) throw dpchroma::ParseError("cannot open " + spec);
        std::stringstream buf;
        buf << f.rdbuf();
        auto parsed = dpchroma::parse_edge_list(buf.str());
        in.labels = std::move(parsed.labels);
        in.graph = std::make_shared<const Graph>(std::move(parsed.graph));
    } else {
        in.graph = std::make_shared<const Graph>(dpchroma::make_named_graph(spec));
    }
    return in;
}

struct FoldRange {
    int lo = 0;
    int hi = 0;
};

FoldRange parse_fold_range(const std::string& text) {
    FoldRange r;
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoi(text);
        } else {
            r.lo = std::stoi(text.substr(0, dots));
            r.hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw dpchroma::ParseError("bad --m value \"" + text + "\"; expected k or lo..hi");
    }
    if (r.lo < 1 || r.hi < r.lo) throw dpchroma::ParseError("bad --m range " + text);
    return r;
}

json graph_json(const Graph& g) {
    json j;
    j["n"] = g.vertex_count();
    j["edges"] = json::array();
    for (const auto& e : g.edges()) j["edges"].push_back({e.u, e.v});
    return j;
}

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
    return buf;
}

struct Output {
    std::string path;     // empty = stdout
    std::string format;   // json | csv
};

void emit(const Output& out, const json& meta, const json& result, const std::string& csv) {
    std::string text;
    if (out.format == "csv") {
        text = csv;
    } else {
        json whole;
        whole["meta"] = meta;
        whole["result"] = result;
        text = whole.dump(2) + "\n";
    }
    if (out.path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out.path);
        if (!f) throw dpchroma::Error("cannot write " + out.path);
        f << text;
    }
}

json meta_json(const std::string& command, const GraphInput& in) {
    json meta;
    meta["tool"] = "dpchroma";
    meta["command"] = command;
    meta["graph_spec"] = in.spec;
    meta["timestamp"] = iso_timestamp();
    if (!in.labels.empty()) {
        bool identity = true;
        for (std::size_t i = 0; i < in.labels.size(); ++i)
            if (in.labels[i] != static_cast<long long>(i)) identity = false;
        if (!identity) meta["label_map"] = in.labels;
    }
    return meta;
}

int run_chrompoly(const GraphInput& in, const Output& out, const std::string& command) {
    const Graph& g = *in.graph;
    const auto whitney = dpchroma::whitney_expansion(g);
    const auto delcontr = dpchroma::deletion_contraction(g);
    const bool agree = whitney == delcontr;

    json result;
    result["graph"] = graph_json(g);
    result["whitney"] = json::parse(dpchroma::polynomial_to_json(whitney));
    result["deletion_contraction"] = json::parse(dpchroma::polynomial_to_json(delcontr));
    result["methods_agree"] = agree;

    bool report_pass = true;
    if (g.is_connected()) {
        const CheckReport report = dpchroma::coefficient_report(g);
        result["coefficient_report"] = json::parse(dpchroma::report_to_json(report));
        report_pass = report.passed();
    } else {
        result["coefficient_report"] = {{"skipped", true}, {"reason", "graph is disconnected"}};
    }

    std::string csv = "i,coeff\n";
    for (int i = 0; i <= whitney.degree(); ++i)
        csv += std::to_string(i) + "," + dpchroma::to_decimal(whitney.coeff(i)) + "\n";
    emit(out, meta_json(command, in), result, csv);
    return agree && report_pass ? kExitOk : kExitCheckFailed;
}

int run_dpmin(const GraphInput& in, FoldRange range, const DpOptions& options, const Output& out,
              const std::string& command) {
    json rows = json::array();
    std::string csv = "m,P_DP,covers_examined\n";
    for (int m = range.lo; m <= range.hi; ++m) {
        const auto v = dpchroma::dp_color_function(in.graph, m, options);
        rows.push_back(json::parse(dpchroma::dp_value_to_json(v)));
        csv += std::to_string(m) + "," + dpchroma::to_decimal(v.value) + "," +
               std::to_string(v.covers_examined) + "\n";
    }
    json result;
    result["graph"] = graph_json(*in.graph);
    result["reduced"] = options.reduce;
    result["rows"] = std::move(rows);
    emit(out, meta_json(command, in), result, csv);
    return kExitOk;
}

int run_gap(const GraphInput& in, FoldRange range, const DpOptions& options, const Output& out,
            const std::string& command) {
    const auto report = dpchroma::gap_table(in.graph, range.lo, range.hi, options);
    json result = json::parse(dpchroma::gap_report_to_json(report));
    result["graph"] = graph_json(*in.graph);
    std::string csv = "m,P,P_DP,gap\n";
    for (const auto& row : report.rows) {
        if (row.skipped) continue;
        csv += std::to_string(row.fold) + "," + dpchroma::to_decimal(row.chromatic) + "," +
               dpchroma::to_decimal(row.dp) + "," + dpchroma::to_decimal(row.gap) + "\n";
    }
    emit(out, meta_json(command, in), result, csv);
    for (const auto& row : report.rows)
        if (!row.skipped && row.gap < 0) return kExitCheckFailed;
    return kExitOk;
}

int run_cone(const GraphInput& in, FoldRange range, const DpOptions& options, const Output& out,
             const std::string& command) {
    const auto report = dpchroma::cone_scan(in.graph, range.lo, range.hi, options);
    json result = json::parse(dpchroma::cone_report_to_json(report));
    result["graph"] = graph_json(*in.graph);
    result["cone"] = graph_json(dpchroma::cone(*in.graph));
    std::string csv = "m,P,P_DP,equal\n";
    for (const auto& row : report.rows) {
        if (row.skipped) continue;
        csv += std::to_string(row.fold) + "," + dpchroma::to_decimal(row.chromatic) + "," +
               dpchroma::to_decimal(row.dp) + "," + (row.equal ? "1" : "0") + "\n";
    }
    emit(out, meta_json(command, in), result, csv);
    return kExitOk;
}

// ---- verify suites ----------------------------------------------------

struct SuiteTarget {
    std::string name;
    std::shared_ptr<const Graph> graph;
};

std::vector<SuiteTarget> suite_targets(const std::string& graph_spec) {
    std::vector<SuiteTarget> targets;
    if (!graph_spec.empty()) {
        auto in = load_graph(graph_spec);
        targets.push_back({graph_spec, in.graph});
        return targets;
    }
    for (auto& [name, g] : dpchroma::builtin_verify_corpus())
        targets.push_back({name, std::make_shared<const Graph>(std::move(g))});
    return targets;
}

json report_entry(const std::string& target, int fold, const CheckReport& report) {
    json j;
    j["graph"] = target;
    if (fold > 0) j["m"] = fold;
    j["report"] = json::parse(dpchroma::report_to_json(report));
    return j;
}

int run_verify(const std::string& suite, const std::string& graph_spec, FoldRange range, int covers,
               const DpOptions& options, const Output& out, const std::string& command) {
    json entries = json::array();
    json skipped = json::array();
    bool all_pass = true;
    dpchroma::SplitMix64 rng(kSuiteSeed);

    auto note_skip = [&](const std::string& target, const std::string& why) {
        skipped.push_back({{"graph", target}, {"reason", why}});
    };

    if (suite == "coefficients") {
        for (const auto& t : suite_targets(graph_spec)) {
            if (t.graph->edge_count() > dpchroma::kMaxSubsetEdges) {
                note_skip(t.name, "edge count beyond the subset-expansion limit");
                continue;
            }
            const auto report = dpchroma::coefficient_report(*t.graph);
            all_pass = all_pass && report.passed();
            entries.push_back(report_entry(t.name, 0, report));
        }
    } else if (suite == "lemma-formulas2") {
        for (const auto& t : suite_targets(graph_spec)) {
            if (!t.graph->is_connected() || dpchroma::girth(*t.graph) == dpchroma::kGirthInfinity) {
                note_skip(t.name, "needs a connected graph of finite girth");
                continue;
            }
            if (t.graph->edge_count() > 12) {
                note_skip(t.name, "edge count beyond the exhaustive subset budget");
                continue;
            }
            for (int m = range.lo; m <= range.hi; ++m) {
                auto canonical = dpchroma::canonical_cover(t.graph, m);
                auto report = dpchroma::intersection_bounds_report(canonical);
                all_pass = all_pass && report.passed();
                entries.push_back(report_entry(t.name + " canonical", m, report));
                bool sample_pass = true;
                for (int i = 0; i < covers; ++i) {
                    auto c = dpchroma::random_full_cover(t.graph, m, rng);
                    sample_pass = sample_pass && dpchroma::intersection_bounds_report(c).passed();
                }
                all_pass = all_pass && sample_pass;
                CheckReport summary;
                summary.name = "bad-set-intersection-bounds";
                summary.check("all three statements over " + std::to_string(covers) + " random covers",
                              "pass", sample_pass ? "pass" : "fail", sample_pass);
                entries.push_back(report_entry(t.name + " random", m, summary));
            }
        }
    } else if (suite == "lemma-three") {
        for (const auto& t : suite_targets(graph_spec)) {
            const int apex = dpchroma::find_apex(*t.graph);
            const int n = t.graph->vertex_count();
            const int s = t.graph->edge_count() - (n - 1);
            if (apex < 0 || n < 4 || s < 3) {
                note_skip(t.name, "needs a cone with >= 4 vertices and >= 3 base edges");
                continue;
            }
            for (int m = range.lo; m <= range.hi; ++m) {
                auto canonical = dpchroma::canonical_cover(t.graph, m);
                auto report = dpchroma::cone_subset_sums_report(canonical, apex);
                all_pass = all_pass && report.passed();
                entries.push_back(report_entry(t.name + " canonical", m, report));
                bool sample_pass = true;
                for (int i = 0; i < covers; ++i) {
                    auto c = dpchroma::random_star_cover(t.graph, m, apex, rng, /*require_twist=*/false);
                    auto r = dpchroma::cone_subset_sums_report(c, apex);
                    sample_pass = sample_pass && r.passed();
                }
                all_pass = all_pass && sample_pass;
                CheckReport summary;
                summary.name = "cone-subset-sum-bounds";
                summary.check("all five statements over " + std::to_string(covers) + " random covers",
                              "pass", sample_pass ? "pass" : "fail", sample_pass);
                entries.push_back(report_entry(t.name + " random", m, summary));
            }
        }
    } else if (suite == "lemma-lower") {
        for (const auto& t : suite_targets(graph_spec)) {
            // targets here are base graphs G; the check builds cone(G) itself
            if (t.graph->edge_count() < 3 || t.graph->vertex_count() < 3) {
                note_skip(t.name, "cone lower bound needs >= 3 base edges");
                continue;
            }
            // corpus sweeps stick to cones cheap enough for per-cover
            // inclusion-exclusion at the hypothesis threshold
            if (graph_spec.empty() && t.graph->edge_count() + t.graph->vertex_count() > 10) {
                note_skip(t.name, "cone too large for the default sweep; target it with --graph");
                continue;
            }
            try {
                const int m = range.lo == range.hi && range.lo > 1
                                  ? range.lo
                                  : dpchroma::cone_lower_bound_threshold(*t.graph);
                const auto report = dpchroma::cone_lower_bound_report(t.graph, m, covers, kSuiteSeed);
                all_pass = all_pass && report.passed();
                entries.push_back(report_entry(t.name, m, report));
            } catch (const dpchroma::CapacityError& e) {
                note_skip(t.name, e.what());
            }
        }
    } else if (suite == "oracles") {
        // randomized equivalence of the three counting routes
        auto corpus = suite_targets(graph_spec);
        std::vector<SuiteTarget> small;
        for (auto& t : corpus)
            if (t.graph->vertex_count() <= 6) small.push_back(t);
        if (small.empty()) throw dpchroma::ValidationError("oracle suite needs graphs with n <= 6");
        int brute_checked = 0, ie_checked = 0, mismatches = 0;
        for (int i = 0; i < covers; ++i) {
            const auto& t = small[rng.below(small.size())];
            const int m = 1 + rng.below_int(4);
            const auto c = dpchroma::random_full_cover(t.graph, m, rng);
            const BigInt fast = dpchroma::count_colorings(c);
            const BigInt brute = dpchroma::brute_force_count(c);
            ++brute_checked;
            if (fast != brute) ++mismatches;
            if (t.graph->edge_count() <= 10 && ie_checked < std::max(100, covers / 5)) {
                ++ie_checked;
                if (dpchroma::inclusion_exclusion_count(c) != fast) ++mismatches;
            }
        }
        CheckReport summary;
        summary.name = "counting-oracle-equivalence";
        summary.check("count_colorings = brute_force_count on " + std::to_string(brute_checked) + " covers",
                      "0 mismatches", std::to_string(mismatches) + " mismatches", mismatches == 0);
        summary.check("inclusion_exclusion_count spot checks", std::to_string(ie_checked) + " covers",
                      mismatches == 0 ? "agree" : "disagree", mismatches == 0);
        all_pass = all_pass && summary.passed();
        entries.push_back(report_entry("random corpus", 0, summary));
    } else if (suite == "upper-bound") {
        for (const auto& t : suite_targets(graph_spec)) {
            if (!t.graph->is_connected()) {
                note_skip(t.name, "needs a connected graph");
                continue;
            }
            const auto report = dpchroma::upper_bound_report(t.graph, range.lo, range.hi, options);
            all_pass = all_pass && report.passed();
            entries.push_back(report_entry(t.name, 0, report));
        }
    } else {
        throw dpchroma::ParseError("unknown suite \"" + suite +
                                   "\"; expected coefficients, lemma-formulas2, lemma-three, "
                                   "lemma-lower, oracles or upper-bound");
    }

    json result;
    result["suite"] = suite;
    result["pass"] = all_pass;
    result["targets"] = std::move(entries);
    result["skipped"] = std::move(skipped);

    GraphInput pseudo;
    pseudo.spec = graph_spec.empty() ? "builtin corpus" : graph_spec;
    std::string csv = "suite,pass\n" + suite + "," + (all_pass ? "1" : "0") + "\n";
    emit(out, meta_json(command, pseudo), result, csv);
    return all_pass ? kExitOk : kExitCheckFailed;
}

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact chromatic polynomial and DP color function toolkit"};
    app.require_subcommand(1);

    std::string graph_spec;
    std::string m_text = "2..4";
    std::uint64_t budget = dpchroma::kDefaultBudget;
    int jobs = 1;
    bool no_reduce = false;
    std::string out_path;
    std::string format = "json";
    std::string cache_dir;
    int covers = 50;
    std::string suite;

    auto add_common = [&](CLI::App* cmd, bool needs_graph) {
        if (needs_graph)
            cmd->add_option("--graph", graph_spec, "graph spec (C4, K5, P6, W4, cone:C4, glue:3) or edge-list file")
                ->required();
        else
            cmd->add_option("--graph", graph_spec, "restrict the suite to one graph spec or file");
        cmd->add_option("--m", m_text, "fold size k or range lo..hi");
        cmd->add_option("--budget", budget, "orbit-count budget for cover enumeration");
        cmd->add_option("--jobs", jobs, "worker threads for the minimization")->check(CLI::PositiveNumber);
        cmd->add_option("--out", out_path, "output file (default stdout)");
        cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--cache", cache_dir, "results cache directory (env DPCHROMA_CACHE overrides)");
    };

    auto* cmd_chrompoly = app.add_subcommand("chrompoly", "chromatic polynomial by two methods plus coefficient checks");
    add_common(cmd_chrompoly, true);

    auto* cmd_dpmin = app.add_subcommand("dpmin", "exact DP color function by exhaustive cover minimization");
    add_common(cmd_dpmin, true);
    cmd_dpmin->add_flag("--no-reduce", no_reduce, "disable conjugation orbit reduction");

    auto* cmd_gap = app.add_subcommand("gap", "P(G,m) - P_DP(G,m) table with fitted exponent");
    add_common(cmd_gap, true);

    auto* cmd_cone = app.add_subcommand("cone", "equality scan of P_DP versus P for the cone of the graph");
    add_common(cmd_cone, true);

    std::string corpus_name = "small";
    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite over a graph or the builtin corpus");
    cmd_verify->add_option("suite", suite,
                           "coefficients | lemma-formulas2 | lemma-three | lemma-lower | oracles | upper-bound")
        ->required();
    add_common(cmd_verify, false);
    cmd_verify->add_option("--covers", covers, "random covers per target (or total for oracles)");
    cmd_verify->add_option("--corpus", corpus_name, "builtin corpus to sweep when no --graph is given")
        ->check(CLI::IsMember({"small"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;  // keep --help at 0
    }

    try {
        if (const char* env = std::getenv("DPCHROMA_CACHE"); env && *env) cache_dir = env;

        DpOptions options;
        options.budget = budget;
        options.jobs = jobs;
        options.reduce = !no_reduce;
        options.cache_dir = cache_dir;

        Output out{out_path, format};
        const std::string command = join_args(argc, argv);
        const FoldRange range = parse_fold_range(m_text);

        if (cmd_chrompoly->parsed()) return run_chrompoly(load_graph(graph_spec), out, command);
        if (cmd_dpmin->parsed()) return run_dpmin(load_graph(graph_spec), range, options, out, command);
        if (cmd_gap->parsed()) return run_gap(load_graph(graph_spec), range, options, out, command);
        if (cmd_cone->parsed()) return run_cone(load_graph(graph_spec), range, options, out, command);
        if (cmd_verify->parsed()) return run_verify(suite, graph_spec, range, covers, options, out, command);
        return kExitBadInput;
    } catch (const dpchroma::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const dpchroma::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const dpchroma::CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
}

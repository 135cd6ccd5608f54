// Acceptance suite: runs every numbered criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exit code 0 iff all pass.

#include "dpchroma/chromatic.hpp"
#include "dpchroma/corpus.hpp"
#include "dpchroma/counting.hpp"
#include "dpchroma/dp_function.hpp"
#include "dpchroma/lemma_checks.hpp"

#include "json.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace dpchroma;
using json = nlohmann::json;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

struct Criterion {
    int id;
    std::string name;
    double time_limit_s;
    std::function<void(Outcome&)> run;
};

std::shared_ptr<const Graph> named(const std::string& spec) {
    return std::make_shared<const Graph>(make_named_graph(spec));
}

IntPolynomial complete_poly(int n) {
    IntPolynomial p = IntPolynomial::constant(1);
    for (int i = 0; i < n; ++i) p = p * IntPolynomial({BigInt(-i), BigInt(1)});
    return p;
}

IntPolynomial cycle_poly(int n) {
    const IntPolynomial m1({BigInt(-1), BigInt(1)});
    IntPolynomial p = IntPolynomial::constant(1);
    for (int i = 0; i < n; ++i) p = p * m1;
    return n % 2 == 0 ? p + m1 : p - m1;
}

IntPolynomial tree_poly(int n) {
    IntPolynomial p({BigInt(0), BigInt(1)});
    for (int i = 0; i < n - 1; ++i) p = p * IntPolynomial({BigInt(-1), BigInt(1)});
    return p;
}

// --- criterion bodies ---------------------------------------------------

void closed_form_agreement(Outcome& out) {
    int checks = 0;
    auto both = [&](const Graph& g, const IntPolynomial& expect, const std::string& what) {
        const IntPolynomial w = whitney_expansion(g);
        const IntPolynomial d = deletion_contraction(g);
        out.require(w == d, what + ": methods disagree");
        for (int m = 0; m <= 10; ++m) {
            out.require(w.evaluate(m) == expect.evaluate(m), what + " at m=" + std::to_string(m));
            ++checks;
        }
    };
    for (int n = 1; n <= 5; ++n) both(make_named_graph("K" + std::to_string(n)), complete_poly(n), "K" + std::to_string(n));
    for (int n = 3; n <= 8; ++n) both(make_named_graph("C" + std::to_string(n)), cycle_poly(n), "C" + std::to_string(n));
    SplitMix64 rng(20260808);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + rng.below_int(9);
        both(random_tree(rng, n), tree_poly(n), "tree n=" + std::to_string(n));
    }
    for (const auto& g : connected_graph_corpus(5)) {
        const IntPolynomial pg = whitney_expansion(g);
        const IntPolynomial pc = whitney_expansion(cone(g));
        const IntPolynomial dc = deletion_contraction(cone(g));
        out.require(pc == dc, "cone methods disagree");
        for (int m = 0; m <= 10; ++m) {
            out.require(pc.evaluate(m) == m * pg.evaluate(m - 1), "cone identity at m=" + std::to_string(m));
            ++checks;
        }
    }
    out.detail = std::to_string(checks) + " evaluations";
}

void coefficient_structure(Outcome& out) {
    int graphs = 0;
    for (const auto& g : connected_graph_corpus(6)) {
        ++graphs;
        if (!coefficient_report(g).passed()) out.require(false, "failed on a graph with n=" + std::to_string(g.vertex_count()));
    }
    out.detail = std::to_string(graphs) + " connected graphs";
}

void cubic_coefficient_identity(Outcome& out) {
    for (const char* spec : {"K4", "cone:C4", "cone:C5"}) {
        const Graph m = make_named_graph(spec);
        const SubgraphClassification cls = classify_spanning_subgraphs(m);
        const BigInt coeff = -whitney_expansion(m).coeff(m.vertex_count() - 3);
        out.require(BigInt(cls.a3) == coeff,
                    std::string(spec) + ": a3=" + std::to_string(cls.a3) + " vs coeff " + to_decimal(coeff));
    }
    out.detail = "K4, cone(C4), cone(C5)";
}

void counting_oracles(Outcome& out) {
    SplitMix64 rng(424242);
    const auto corpus = connected_graph_corpus(6);
    int brute_checked = 0, ie_checked = 0;
    while (brute_checked < 500) {
        const auto& base = corpus[rng.below(corpus.size())];
        auto g = std::make_shared<const Graph>(base);
        const int m = 1 + rng.below_int(4);
        const DPCover c = random_full_cover(g, m, rng);
        const BigInt fast = count_colorings(c);
        if (fast != brute_force_count(c)) out.require(false, "backtracking vs brute mismatch");
        ++brute_checked;
        if (ie_checked < 120 && base.edge_count() <= 10) {
            if (inclusion_exclusion_count(c) != fast) out.require(false, "inclusion-exclusion mismatch");
            ++ie_checked;
        }
    }
    out.require(ie_checked >= 100, "too few inclusion-exclusion checks");
    out.detail = std::to_string(brute_checked) + " brute + " + std::to_string(ie_checked) + " IE checks";
}

void intersection_bounds(Outcome& out) {
    SplitMix64 rng(515151);
    for (const char* spec : {"C4", "C5", "glue:3"}) {
        auto g = named(spec);
        if (!intersection_bounds_report(canonical_cover(g, 3)).passed())
            out.require(false, std::string(spec) + " canonical");
        for (int trial = 0; trial < 20; ++trial)
            if (!intersection_bounds_report(random_full_cover(g, 3, rng)).passed())
                out.require(false, std::string(spec) + " random cover");
    }
    out.detail = "canonical + 20 random covers each of C4, C5, glue-cycles(3) at m=3";
}

void chordal_and_odd_equality(Outcome& out) {
    std::vector<std::pair<std::string, Graph>> targets;
    int trees = 0;
    for (const auto& g : connected_graph_corpus(6))
        if (g.edge_count() == g.vertex_count() - 1) {
            targets.emplace_back("tree n=" + std::to_string(g.vertex_count()), g);
            ++trees;
        }
    for (const char* spec : {"K2", "K3", "K4", "C5", "C7"}) targets.emplace_back(spec, make_named_graph(spec));
    for (const auto& [name, g] : targets) {
        auto shared = std::make_shared<const Graph>(g);
        const IntPolynomial p = whitney_expansion(g);
        for (int m = 2; m <= 4; ++m) {
            const DPValue v = dp_color_function(shared, m);
            out.require(v.value == p.evaluate(m), name + " at m=" + std::to_string(m));
        }
    }
    out.detail = std::to_string(trees) + " trees plus K2..K4, C5, C7 at m in [2,4]";
}

void even_girth_strictness(Outcome& out) {
    const GapReport r = gap_table(named("C4"), 2, 6);
    for (const auto& row : r.rows) {
        out.require(!row.skipped, "row skipped at m=" + std::to_string(row.fold));
        if (row.skipped) continue;
        out.require(row.gap > 0, "gap not positive at m=" + std::to_string(row.fold));
        out.require(row.gap == row.fold, "gap != m at m=" + std::to_string(row.fold));
    }
    out.require(r.fitted_exponent.has_value(), "no fitted exponent");
    if (r.fitted_exponent)
        out.require(*r.fitted_exponent >= 0.9 && *r.fitted_exponent <= 1.1,
                    "exponent " + std::to_string(*r.fitted_exponent) + " outside [0.9, 1.1]");
    std::ostringstream d;
    d << "gap(m) = m on [2,6], exponent " << (r.fitted_exponent ? *r.fitted_exponent : 0.0);
    out.detail = d.str();
}

void glued_cycles_band(Outcome& out) {
    DpOptions options;
    options.jobs = 2;
    const GapReport r = gap_table(named("glue:3"), 3, 6, options);
    double lo = 0, hi = 0;
    bool first = true;
    for (const auto& row : r.rows) {
        out.require(!row.skipped, "row skipped at m=" + std::to_string(row.fold));
        if (row.skipped) continue;
        out.require(row.gap > 0, "gap not positive at m=" + std::to_string(row.fold));
        const double ratio = row.gap.convert_to<double>() / std::pow(row.fold, 3);
        if (first) {
            lo = hi = ratio;
            first = false;
        } else {
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
    }
    out.require(!first && lo > 0, "no ratios computed");
    if (lo > 0) out.require(hi / lo <= 3.0, "band ratio " + std::to_string(hi / lo) + " exceeds 3");
    std::ostringstream d;
    d << "gap/m^3 in [" << lo << ", " << hi << "], ratio " << (lo > 0 ? hi / lo : 0.0);
    out.detail = d.str();
}

void cone_subset_sums(Outcome& out) {
    SplitMix64 rng(616161);
    auto w4 = named("W4");
    for (int fold : {3, 4}) {
        bool saw_zero_twist = false, saw_positive_twist = false;
        int covers = 0;
        auto check = [&](const DPCover& c) {
            const long long x = twist_stats(c, 4).total;
            (x == 0 ? saw_zero_twist : saw_positive_twist) = true;
            if (!cone_subset_sums_report(c, 4).passed())
                out.require(false, "failed at fold " + std::to_string(fold) + " with x_H=" + std::to_string(x));
            ++covers;
        };
        check(canonical_cover(w4, fold));
        for (int trial = 0; trial < 49; ++trial) check(random_star_cover(w4, fold, 4, rng, false));
        while (!saw_positive_twist) check(random_star_cover(w4, fold, 4, rng, true));
        out.require(covers >= 50, "fewer than 50 covers at fold " + std::to_string(fold));
        out.require(saw_zero_twist && saw_positive_twist, "twist classes not both present");
    }
    out.detail = "50+ covers of W4 at folds 3 and 4, twisted and untwisted";
}

void cone_lower_bound(Outcome& out) {
    auto c4 = named("C4");
    const int threshold = cone_lower_bound_threshold(*c4);
    const CheckReport r = cone_lower_bound_report(c4, threshold, 50, 20260808);
    int checked = 0;
    for (const auto& e : r.entries)
        if (!e.skipped) {
            ++checked;
            if (!e.pass) out.require(false, e.statement);
        }
    out.require(checked >= 10, "fewer than 10 covers actually checked");
    out.detail = std::to_string(checked) + " twisted covers of W4 at m=" + std::to_string(threshold);
}

void cone_scan_properties(Outcome& out) {
    DpOptions big_budget;
    big_budget.budget = kDefaultBudget * 10;
    for (const char* spec : {"K3", "P4", "C4"}) {
        auto g = named(spec);
        const ConeReport a = cone_scan(g, 2, 4);
        const ConeReport b = cone_scan(g, 2, 4, big_budget);
        const bool chordal_cone = std::string(spec) != "C4";
        for (std::size_t i = 0; i < a.rows.size(); ++i) {
            const auto& row = a.rows[i];
            out.require(!row.skipped, std::string(spec) + " row skipped");
            if (row.skipped) continue;
            out.require(row.dp <= row.chromatic, std::string(spec) + ": P_DP > P at m=" + std::to_string(row.fold));
            if (chordal_cone) out.require(row.equal, std::string(spec) + ": not equal at m=" + std::to_string(row.fold));
            if (!b.rows[i].skipped)
                out.require(row.dp == b.rows[i].dp,
                            std::string(spec) + ": value changed under a larger budget at m=" + std::to_string(row.fold));
        }
    }
    out.detail = "cones of K3, P4, C4 over m in [2,4], budget-stable";
}

std::string run_cli(const std::string& args, int& exit_code) {
    const std::string cmd = std::string(DPCHROMA_BIN) + " " + args + " 2>/dev/null";
    std::string output;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return output;
    }
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), got);
    const int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return output;
}

void determinism_across_jobs(Outcome& out) {
    int code1 = -1, code8 = -1;
    const std::string out1 = run_cli("dpmin --graph C4 --m 2..5 --jobs 1", code1);
    const std::string out8 = run_cli("dpmin --graph C4 --m 2..5 --jobs 8", code8);
    out.require(code1 == 0, "--jobs 1 run failed");
    out.require(code8 == 0, "--jobs 8 run failed");
    if (code1 == 0 && code8 == 0) {
        const std::string r1 = json::parse(out1).at("result").dump();
        const std::string r8 = json::parse(out8).at("result").dump();
        out.require(r1 == r8, "result blocks differ between --jobs 1 and --jobs 8");
        out.detail = "result blocks byte-identical (" + std::to_string(r1.size()) + " bytes)";
    }
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "closed-form agreement (K_n, C_n, trees, cones), m in [0,10]", 10.0, closed_form_agreement},
        {2, "coefficient structure on every connected graph with n <= 6", 60.0, coefficient_structure},
        {3, "a3 equals the cubic-coefficient magnitude for K4, cone(C4), cone(C5)", 60.0, cubic_coefficient_identity},
        {4, "counting oracle equivalence on 500 random covers (n <= 6, m <= 4)", 120.0, counting_oracles},
        {5, "bad-set intersection bounds, exhaustive, C4/C5/glue-cycles(3) at m=3", 120.0, intersection_bounds},
        {6, "chordal and odd-cycle equality of the DP color function, m in [2,4]", 600.0, chordal_and_odd_equality},
        {7, "even-girth strictness at C4: gap(m) = m on [2,6], exponent in [0.9,1.1]", 30.0, even_girth_strictness},
        {8, "glued-cycles tightness: gap/m^3 band ratio <= 3 on [3,6]", 900.0, glued_cycles_band},
        {9, "cone subset-sum bounds on 50+ covers of W4 at folds 3 and 4", 300.0, cone_subset_sums},
        {10, "cone lower bound on 50 twisted covers of W4 at the hypothesis threshold", 600.0, cone_lower_bound},
        {11, "cone scans: bounded rows, chordal equality, budget-stable values", 600.0, cone_scan_properties},
        {12, "byte-identical dpmin results across --jobs 1 and --jobs 8", 120.0, determinism_across_jobs},
    };

    int failures = 0;
    for (auto& c : criteria) {
        Outcome out;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(out);
        } catch (const std::exception& e) {
            out.require(false, std::string("exception: ") + e.what());
        }
        const double elapsed =
            std::chrono::duration_cast<std::chrono::duration<double>>(std::chrono::steady_clock::now() - start)
                .count();
        if (elapsed > c.time_limit_s)
            out.require(false, "took " + std::to_string(elapsed) + "s, limit " + std::to_string(c.time_limit_s) + "s");
        if (!out.pass) ++failures;
        std::printf("[%s] %02d %s (%.2fs)%s%s\n", out.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), elapsed,
                    out.detail.empty() ? "" : " -- ", out.detail.c_str());
        std::fflush(stdout);
    }
    if (failures) std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    else std::printf("all %zu criteria passed\n", criteria.size());
    return failures == 0 ? 0 : 1;
}

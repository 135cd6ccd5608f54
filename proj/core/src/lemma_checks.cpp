#include "dpchroma/lemma_checks.hpp"

#include "dpchroma/chromatic.hpp"
#include "dpchroma/counting.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

namespace dpchroma {

namespace {

// is the mask exactly the edge set of one cycle of the given length
bool is_cycle_edge_set(const Graph& g, EdgeMask mask, int length) {
    if (popcount(mask) != length) return false;
    std::map<int, int> degree;
    for (EdgeMask bits = mask; bits != 0; bits &= bits - 1) {
        const Edge& e = g.edge(std::countr_zero(bits));
        ++degree[e.u];
        ++degree[e.v];
    }
    if (static_cast<int>(degree.size()) != length) return false;
    for (const auto& [v, d] : degree)
        if (d != 2) return false;
    // connected single cycle: touched vertices form one component
    return component_count(g, mask) == g.vertex_count() - length + 1;
}

} // namespace

CheckReport intersection_bounds_report(const DPCover& cover) {
    const Graph& g = cover.g();
    if (!g.is_connected()) throw ValidationError("intersection bounds require a connected graph");
    const int girth_value = girth(g);
    if (girth_value == kGirthInfinity)
        throw ValidationError("intersection bounds require finite girth");
    const int s = g.edge_count();
    if (s > kMaxInclusionExclusionEdges)
        throw CapacityError("exhaustive subset check enumerates 2^s subsets; s=" + std::to_string(s) +
                            " exceeds the limit of " + std::to_string(kMaxInclusionExclusionEdges));

    const int n = g.vertex_count();
    const BigInt m = cover.fold;

    // worst observations per statement
    struct Worst {
        bool seen = false;
        bool ok = true;
        BigInt value;
    };
    std::vector<Worst> equal_small(static_cast<std::size_t>(girth_value));  // k = 1..g-1
    Worst girth_upper, girth_equal, large_upper;

    auto observe_equal = [](Worst& w, const BigInt& got, const BigInt& want) {
        const bool ok = got == want;
        if (!w.seen || (w.ok && !ok)) {
            w.seen = true;
            w.ok = ok;
            w.value = got;
        } else if (!ok && !w.ok) {
            w.value = std::max(w.value, got);
        }
    };
    auto observe_upper = [](Worst& w, const BigInt& got) {
        if (!w.seen || got > w.value) {
            w.seen = true;
            w.value = got;
        }
    };

    for (EdgeMask mask = 1; mask < (EdgeMask{1} << s); ++mask) {
        const int k = popcount(mask);
        const BigInt value = bad_intersection_count(cover, mask);
        if (k <= girth_value - 1) {
            observe_equal(equal_small[static_cast<std::size_t>(k)], value,
                          big_pow(m, static_cast<unsigned>(n - k)));
        } else if (k == girth_value) {
            observe_upper(girth_upper, value);
            if (!is_cycle_edge_set(g, mask, girth_value))
                observe_equal(girth_equal, value, big_pow(m, static_cast<unsigned>(n - girth_value)));
        } else {
            observe_upper(large_upper, value);
        }
    }

    CheckReport report;
    report.name = "bad-set-intersection-bounds";
    for (int k = 1; k <= girth_value - 1 && k <= s; ++k) {
        const Worst& w = equal_small[static_cast<std::size_t>(k)];
        const BigInt want = big_pow(m, static_cast<unsigned>(n - k));
        report.check("(i) size-" + std::to_string(k) + " intersections = m^(n-k)", to_decimal(want),
                     w.seen ? to_decimal(w.value) : "no subsets", !w.seen || w.ok);
    }
    if (s >= girth_value) {
        const BigInt upper = big_pow(m, static_cast<unsigned>(n - girth_value + 1));
        report.check("(ii) size-g intersections <= m^(n-g+1)", to_decimal(upper),
                     girth_upper.seen ? to_decimal(girth_upper.value) : "no subsets",
                     !girth_upper.seen || girth_upper.value <= upper);
        const BigInt want = big_pow(m, static_cast<unsigned>(n - girth_value));
        report.check("(ii) non-cycle size-g intersections = m^(n-g)", to_decimal(want),
                     girth_equal.seen ? to_decimal(girth_equal.value) : "no subsets",
                     !girth_equal.seen || girth_equal.ok);
        if (s >= girth_value + 1) {
            report.check("(iii) size>=g+1 intersections <= m^(n-g)", to_decimal(want),
                         large_upper.seen ? to_decimal(large_upper.value) : "no subsets",
                         !large_upper.seen || large_upper.value <= want);
        }
    }
    return report;
}

CheckReport cone_subset_sums_report(const DPCover& cover, int apex) {
    const Graph& g = cover.g();
    if (apex < 0) apex = find_apex(g);
    if (apex < 0) throw ValidationError("no apex vertex: graph is not a cone");
    const int n = g.vertex_count();
    const int edge_total = g.edge_count();
    const int s = edge_total - (n - 1);  // edges not at the apex
    if (n < 4 || s < 3)
        throw ValidationError("cone subset sums need |V(M)| >= 4 and at least 3 non-apex edges");

    const TwistStats twist = twist_stats(cover, apex);  // also enforces star normalization
    const SubgraphClassification cls = classify_spanning_subgraphs(g);
    const BigInt m = cover.fold;
    const BigInt x = twist.total;

    CheckReport report;
    report.name = "cone-subset-sum-bounds";
    report.notes.push_back("x_H = " + to_decimal(x) + ", t = " + std::to_string(cls.triangles) +
                           ", p3..p6 = " + std::to_string(cls.p3) + "," + std::to_string(cls.p4) + "," +
                           std::to_string(cls.p5) + "," + std::to_string(cls.p6));

    if (n + s > kConeSubsetExactLimit) {
        report.skip("subset sums", "not checked: |V(M)| + |E(G)| = " + std::to_string(n + s) +
                                       " exceeds the exact-enumeration limit of " +
                                       std::to_string(kConeSubsetExactLimit));
        return report;
    }
    if (edge_total > kMaxInclusionExclusionEdges)
        throw CapacityError("cone subset sums enumerate 2^s subsets; s=" + std::to_string(edge_total) +
                            " exceeds the limit of " + std::to_string(kMaxInclusionExclusionEdges));

    std::vector<BigInt> sums(static_cast<std::size_t>(edge_total) + 1, BigInt(0));
    for (EdgeMask mask = 1; mask < (EdgeMask{1} << edge_total); ++mask)
        sums[static_cast<std::size_t>(popcount(mask))] += bad_intersection_count(cover, mask);

    const auto mp = [&](int e) { return big_pow(m, static_cast<unsigned>(e)); };

    {
        const BigInt bound = cls.triangles * mp(n - 2) - x * mp(n - 3) + cls.p3 * mp(n - 3);
        report.check("(i) sum over size-3 subsets <= t m^(n-2) - x m^(n-3) + p3 m^(n-3)", to_decimal(bound),
                     to_decimal(sums[3]), sums[3] <= bound);
    }
    {
        const BigInt bound = cls.p4 * mp(n - 3) - 2 * cls.p4 * x * mp(n - 4);
        report.check("(ii) sum over size-4 subsets >= p4 m^(n-3) - 2 p4 x m^(n-4)", to_decimal(bound),
                     to_decimal(sums[4]), sums[4] >= bound);
    }
    {
        const BigInt bound = cls.p5 * mp(n - 3) + (binomial(n + s, 5) - cls.p5) * mp(n - 4);
        report.check("(iii) sum over size-5 subsets <= p5 m^(n-3) + (C(n+s,5) - p5) m^(n-4)", to_decimal(bound),
                     to_decimal(sums[5]), sums[5] <= bound);
    }
    {
        const BigInt bound = cls.p6 * mp(n - 3) - 2 * cls.p6 * x * mp(n - 4);
        report.check("(iv) sum over size-6 subsets >= p6 m^(n-3) - 2 p6 x m^(n-4)", to_decimal(bound),
                     to_decimal(sums[6]), sums[6] >= bound);
    }
    for (int k = 7; k <= edge_total; ++k) {
        const BigInt bound = binomial(n + s, k) * mp(n - 4);
        report.check("(v) sum over size-" + std::to_string(k) + " subsets <= C(n+s," + std::to_string(k) +
                         ") m^(n-4)",
                     to_decimal(bound), to_decimal(sums[static_cast<std::size_t>(k)]),
                     sums[static_cast<std::size_t>(k)] <= bound);
    }
    return report;
}

} // namespace dpchroma

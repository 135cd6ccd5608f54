#include "dpchroma/dp_function.hpp"

#include "dpchroma/chromatic.hpp"
#include "dpchroma/counting.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <condition_variable>
#include <deque>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace dpchroma {

namespace {

constexpr std::uint64_t kNoOrdinal = ~std::uint64_t{0};

struct SearchBest {
    bool has = false;
    BigInt value;
    std::uint64_t ordinal = kNoOrdinal;
    DPCover cover;

    // lexicographic (value, ordinal) minimum keeps the merge deterministic
    void offer(const BigInt& v, std::uint64_t ord, const DPCover& c) {
        if (!has || v < value || (v == value && ord < ordinal)) {
            has = true;
            value = v;
            ordinal = ord;
            cover = c;
        }
    }
};

// counting route fixed once per (graph, fold); both routes are exact
bool use_backtracking(const Graph& g, int fold) {
    const BigInt space = big_pow(fold, static_cast<unsigned>(g.vertex_count()));
    return space <= 2'000'000 || g.edge_count() > kMaxInclusionExclusionEdges;
}

BigInt count_route(const DPCover& c, bool backtracking) {
    return backtracking ? count_colorings(c) : inclusion_exclusion_count(c);
}

DPValue minimize_serial(CoverEnumerator& covers, int fold, bool backtracking, bool reduced) {
    SearchBest best;
    std::uint64_t produced = 0;
    while (auto item = covers.next()) {
        ++produced;
        const BigInt v = count_route(item->cover, backtracking);
        best.offer(v, item->ordinal, item->cover);
        if (best.value == 0) break;
    }
    DPValue out;
    out.fold = fold;
    out.value = best.value;
    out.witness = best.cover;
    out.reduced = reduced;
    out.covers_examined = best.value == 0 ? best.ordinal + 1 : produced;
    return out;
}

DPValue minimize_parallel(CoverEnumerator& covers, int fold, bool backtracking, bool reduced, int jobs) {
    std::mutex mu;
    std::condition_variable cv_put, cv_get;
    std::deque<RankedCover> queue;
    bool done_producing = false;
    std::uint64_t produced = 0;
    std::uint64_t zero_ordinal = kNoOrdinal;  // smallest known ordinal with count 0
    SearchBest best;
    std::exception_ptr failure;
    constexpr std::size_t kQueueCap = 1024;

    auto worker = [&]() {
        for (;;) {
            RankedCover item;
            {
                std::unique_lock<std::mutex> lock(mu);
                cv_get.wait(lock, [&] { return !queue.empty() || done_producing || failure; });
                if (failure) return;
                if (queue.empty()) return;  // done producing
                item = std::move(queue.front());
                queue.pop_front();
                cv_put.notify_one();
                // a smaller-ordinal zero can never be hidden past this point
                if (zero_ordinal != kNoOrdinal && item.ordinal > zero_ordinal) continue;
            }
            try {
                const BigInt v = count_route(item.cover, backtracking);
                std::lock_guard<std::mutex> lock(mu);
                best.offer(v, item.ordinal, item.cover);
                if (v == 0 && item.ordinal < zero_ordinal) zero_ordinal = item.ordinal;
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!failure) failure = std::current_exception();
                cv_get.notify_all();
                cv_put.notify_all();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);

    try {
        while (auto item = covers.next()) {
            std::unique_lock<std::mutex> lock(mu);
            cv_put.wait(lock, [&] { return queue.size() < kQueueCap || failure; });
            if (failure) break;
            if (zero_ordinal != kNoOrdinal && item->ordinal > zero_ordinal) break;
            ++produced;
            queue.push_back(std::move(*item));
            cv_get.notify_one();
        }
    } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
    }
    {
        std::lock_guard<std::mutex> lock(mu);
        done_producing = true;
    }
    cv_get.notify_all();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    DPValue out;
    out.fold = fold;
    out.value = best.value;
    out.witness = best.cover;
    out.reduced = reduced;
    out.covers_examined = best.value == 0 ? best.ordinal + 1 : produced;
    return out;
}

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string cache_file(const std::string& dir, const std::string& key) {
    std::ostringstream name;
    name << std::hex << fnv1a(key);
    return (std::filesystem::path(dir) / (name.str() + ".json")).string();
}

std::string cache_key(const Graph& g, int fold, bool reduced) {
    return refined_canonical_key(g) + "|m=" + std::to_string(fold) + "|reduced=" + (reduced ? "1" : "0");
}

std::optional<DPValue> cache_load(const std::string& dir, std::shared_ptr<const Graph> g, int fold,
                                  bool reduced) {
    const std::string key = cache_key(*g, fold, reduced);
    std::ifstream in(cache_file(dir, key));
    if (!in) return std::nullopt;
    try {
        nlohmann::json j = nlohmann::json::parse(in);
        if (j.value("key", "") != key) return std::nullopt;
        DPValue v;
        v.fold = fold;
        v.reduced = reduced;
        v.value = parse_decimal(j.at("value").get<std::string>());
        v.covers_examined = j.at("covers_examined").get<std::uint64_t>();
        v.witness = cover_from_json(std::move(g), j.at("witness").dump());
        // a stale or corrupt entry must never change results
        if (count_colorings_auto(v.witness) != v.value) return std::nullopt;
        return v;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void cache_store(const std::string& dir, const Graph& g, const DPValue& v) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) return;  // cache is best effort
    const std::string key = cache_key(g, v.fold, v.reduced);
    nlohmann::json j;
    j["key"] = key;
    j["value"] = to_decimal(v.value);
    j["covers_examined"] = v.covers_examined;
    j["witness"] = nlohmann::json::parse(cover_to_json(v.witness));
    std::ofstream out(cache_file(dir, key));
    out << j.dump(2) << "\n";
}

} // namespace

DPValue dp_color_function(std::shared_ptr<const Graph> g, int fold, const DpOptions& options) {
    if (!g) throw ValidationError("no graph");
    if (fold < 1) throw ValidationError("fold size must be >= 1");
    if (!g->is_connected())
        throw ValidationError(
            "graph is disconnected: compute the DP color function per component and multiply");

    if (!options.cache_dir.empty())
        if (auto hit = cache_load(options.cache_dir, g, fold, options.reduce)) return *hit;

    CoverEnumerator covers(g, fold, options.reduce, options.budget);
    const bool backtracking = use_backtracking(*g, fold);
    DPValue out = options.jobs > 1 ? minimize_parallel(covers, fold, backtracking, options.reduce, options.jobs)
                                   : minimize_serial(covers, fold, backtracking, options.reduce);
    if (!options.cache_dir.empty()) cache_store(options.cache_dir, *g, out);
    return out;
}

GapReport gap_table(std::shared_ptr<const Graph> g, int fold_lo, int fold_hi, const DpOptions& options) {
    if (!g) throw ValidationError("no graph");
    if (fold_lo < 1 || fold_lo > fold_hi) throw ValidationError("bad fold range");
    GapReport report;
    report.n = g->vertex_count();
    report.girth_value = girth(*g);
    const IntPolynomial p = deletion_contraction(*g);
    for (int m = fold_lo; m <= fold_hi; ++m) {
        GapRow row;
        row.fold = m;
        row.chromatic = p.evaluate(m);
        try {
            const DPValue v = dp_color_function(g, m, options);
            row.dp = v.value;
            row.gap = row.chromatic - row.dp;
        } catch (const CapacityError& e) {
            row.skipped = true;
            row.note = e.what();
        }
        report.rows.push_back(std::move(row));
    }

    // least-squares slope of log(gap) against log(m) over the top half of
    // the positive rows; the smallest folds are polluted by lower-order terms
    std::vector<std::pair<double, double>> points;
    for (const auto& row : report.rows)
        if (!row.skipped && row.gap > 0)
            points.emplace_back(std::log(static_cast<double>(row.fold)),
                                std::log(row.gap.convert_to<double>()));
    if (points.size() >= 3) {
        const std::size_t keep = (points.size() + 1) / 2;
        std::vector<std::pair<double, double>> top(points.end() - static_cast<std::ptrdiff_t>(keep),
                                                   points.end());
        double sx = 0, sy = 0;
        for (auto [xx, yy] : top) {
            sx += xx;
            sy += yy;
        }
        const double mx = sx / static_cast<double>(top.size());
        const double my = sy / static_cast<double>(top.size());
        double num = 0, den = 0;
        for (auto [xx, yy] : top) {
            num += (xx - mx) * (yy - my);
            den += (xx - mx) * (xx - mx);
        }
        if (den > 0) report.fitted_exponent = num / den;
    }
    return report;
}

ConeReport cone_scan(std::shared_ptr<const Graph> g, int fold_lo, int fold_hi, const DpOptions& options) {
    if (!g) throw ValidationError("no graph");
    if (fold_lo < 1 || fold_lo > fold_hi) throw ValidationError("bad fold range");
    auto m_graph = std::make_shared<const Graph>(cone(*g));
    const IntPolynomial p = deletion_contraction(*m_graph);
    ConeReport report;
    for (int m = fold_lo; m <= fold_hi; ++m) {
        ConeRow row;
        row.fold = m;
        row.chromatic = p.evaluate(m);
        try {
            const DPValue v = dp_color_function(m_graph, m, options);
            row.dp = v.value;
            row.equal = row.dp == row.chromatic;
        } catch (const CapacityError& e) {
            row.skipped = true;
            row.note = e.what();
        }
        report.rows.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        bool all_equal = !report.rows[i].skipped && report.rows[i].equal;
        for (std::size_t j = i + 1; j < report.rows.size() && all_equal; ++j)
            if (!report.rows[j].skipped && !report.rows[j].equal) all_equal = false;
        if (all_equal) {
            report.first_equal_onset = report.rows[i].fold;
            break;
        }
    }
    return report;
}

int cone_lower_bound_threshold(const Graph& g) {
    const SubgraphClassification cls = classify_spanning_subgraphs(cone(g));
    const long long lim = 2 * (cls.p4 + cls.p6);
    return static_cast<int>(std::max(1LL, lim));
}

CheckReport cone_lower_bound_report(std::shared_ptr<const Graph> g, int fold, int samples,
                                    std::uint64_t seed, int max_checks) {
    if (!g) throw ValidationError("no graph");
    if (fold < 1) throw ValidationError("fold size must be >= 1");
    auto m_graph = std::make_shared<const Graph>(cone(*g));
    const int apex = g->vertex_count();
    const int n = m_graph->vertex_count();
    const int s = g->edge_count();
    if (n < 4 || s < 3)
        throw ValidationError("cone lower bound needs |V(M)| >= 4 and at least 3 base edges");
    // exact counting needs one feasible route: small assignment space for
    // backtracking or few enough edges for inclusion-exclusion
    if (m_graph->edge_count() > kMaxInclusionExclusionEdges &&
        big_pow(fold, static_cast<unsigned>(n)) > 2'000'000)
        throw CapacityError("no exact counting route for a cone with " +
                            std::to_string(m_graph->edge_count()) + " edges at fold " + std::to_string(fold) +
                            "; inclusion-exclusion is limited to " +
                            std::to_string(kMaxInclusionExclusionEdges) + " edges");

    const SubgraphClassification cls = classify_spanning_subgraphs(*m_graph);
    const BigInt m = fold;
    const auto mp = [&](int e) { return big_pow(m, static_cast<unsigned>(e)); };
    const BigInt bound = mp(n) - (n + s) * mp(n - 1) + (binomial(n + s, 2) - cls.triangles) * mp(n - 2) -
                         cls.a3 * mp(n - 3) + mp(n - 3) -
                         2 * (cls.p4 + cls.p6 + big_pow(2, static_cast<unsigned>(s - 1))) * mp(n - 4);

    CheckReport report;
    report.name = "cone-count-lower-bound";
    const long long hypothesis = 2 * (cls.p4 + cls.p6);
    const bool met = fold >= hypothesis;
    report.notes.push_back("hypothesis m >= 2(p4+p6) = " + std::to_string(hypothesis) +
                           (met ? " met" : " NOT met (informational run)"));
    report.notes.push_back("bound = " + to_decimal(bound));

    SplitMix64 rng(seed ^ 0x636f6e65ULL);
    const int limit = max_checks > 0 ? std::min(max_checks, samples) : samples;
    for (int i = 0; i < samples; ++i) {
        if (i >= limit) {
            report.skip("cover " + std::to_string(i), "not checked: budget limited to " +
                                                          std::to_string(limit) + " covers");
            continue;
        }
        const DPCover c = random_star_cover(m_graph, fold, apex, rng, /*require_twist=*/true);
        const TwistStats twist = twist_stats(c, apex);
        const BigInt actual = count_colorings_auto(c);
        report.check("cover " + std::to_string(i) + " (x_H=" + std::to_string(twist.total) + ") count >= bound",
                     to_decimal(bound), to_decimal(actual), actual >= bound);
    }
    return report;
}

CheckReport upper_bound_report(std::shared_ptr<const Graph> g, int fold_lo, int fold_hi,
                               const DpOptions& options) {
    if (!g) throw ValidationError("no graph");
    if (fold_lo < 1 || fold_lo > fold_hi) throw ValidationError("bad fold range");
    const IntPolynomial p = deletion_contraction(*g);
    CheckReport report;
    report.name = "dp-at-most-chromatic";
    for (int m = fold_lo; m <= fold_hi; ++m) {
        const BigInt chromatic = p.evaluate(m);
        try {
            const DPValue v = dp_color_function(g, m, options);
            report.check("P_DP(G," + std::to_string(m) + ") <= P(G," + std::to_string(m) + ")",
                         to_decimal(chromatic), to_decimal(v.value), v.value <= chromatic);
        } catch (const CapacityError& e) {
            report.skip("P_DP(G," + std::to_string(m) + ") <= P(G," + std::to_string(m) + ")", e.what());
        }
    }
    return report;
}

std::string dp_value_to_json(const DPValue& v) {
    nlohmann::json j;
    j["m"] = v.fold;
    j["value"] = to_decimal(v.value);
    j["covers_examined"] = v.covers_examined;
    j["reduced"] = v.reduced;
    j["witness"] = nlohmann::json::parse(cover_to_json(v.witness));
    return j.dump();
}

std::string gap_report_to_json(const GapReport& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["girth"] = r.girth_value == kGirthInfinity ? nlohmann::json() : nlohmann::json(r.girth_value);
    j["rows"] = nlohmann::json::array();
    for (const auto& row : r.rows) {
        nlohmann::json x;
        x["m"] = row.fold;
        if (row.skipped) {
            x["skipped"] = true;
            x["note"] = row.note;
        } else {
            x["P"] = to_decimal(row.chromatic);
            x["P_DP"] = to_decimal(row.dp);
            x["gap"] = to_decimal(row.gap);
        }
        j["rows"].push_back(std::move(x));
    }
    j["fitted_exponent"] = r.fitted_exponent ? nlohmann::json(*r.fitted_exponent) : nlohmann::json();
    return j.dump();
}

std::string cone_report_to_json(const ConeReport& r) {
    nlohmann::json j;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : r.rows) {
        nlohmann::json x;
        x["m"] = row.fold;
        if (row.skipped) {
            x["skipped"] = true;
            x["note"] = row.note;
        } else {
            x["P"] = to_decimal(row.chromatic);
            x["P_DP"] = to_decimal(row.dp);
            x["equal"] = row.equal;
        }
        j["rows"].push_back(std::move(x));
    }
    j["first_equal_onset"] = r.first_equal_onset ? nlohmann::json(*r.first_equal_onset) : nlohmann::json();
    return j.dump();
}

} // namespace dpchroma

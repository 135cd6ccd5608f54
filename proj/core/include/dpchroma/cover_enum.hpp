#pragma once

#include "dpchroma/bigint.hpp"
#include "dpchroma/cover.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace dpchroma {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct RankedCover {
    /// Dense position in the deterministic enumeration sequence.
    std::uint64_t ordinal = 0;
    DPCover cover;
};

/// Deterministic stream of normalized covers of a connected graph: spanning
/// tree edges carry the identity, each cotree edge ranges over all fold!
/// permutations. Digit order is by ascending twist, ties lexicographic, so
/// mildly twisted covers come first; the tuple sequence is the mixed-radix
/// odometer over that digit order with the lowest cotree edge most
/// significant.
///
/// With reduce_by_conjugation set, yields exactly one representative per
/// orbit of simultaneous conjugation (sigma_1,...,sigma_k) ->
/// (pi sigma_1 pi^-1, ..., pi sigma_k pi^-1): the representative is the
/// tuple that is lexicographically least (one-line notation order) in its
/// orbit, which is equivalent to sigma_j being minimal under conjugation by
/// the pointwise stabilizer of sigma_1..sigma_{j-1} for every level j.
/// Counting is constant on orbits (a tested invariant), so minimizing over
/// representatives equals minimizing over all covers.
class CoverEnumerator {
public:
    /// Throws ValidationError when the graph is disconnected, CapacityError
    /// when fold! or the a-priori cover count ((fold!)^k unreduced,
    /// (fold!)^k / fold! reduced, k the cotree rank) exceeds the budget.
    CoverEnumerator(std::shared_ptr<const Graph> g, int fold,
                    bool reduce_by_conjugation, std::uint64_t budget = kDefaultBudget);

    std::optional<RankedCover> next();

    const std::vector<int>& cotree_edges() const noexcept { return cotree_; }
    BigInt unreduced_total() const;
    bool reduced() const noexcept { return reduce_; }

private:
    struct Level {
        std::vector<int> candidates;             // indices into perms_
        std::vector<std::vector<int>> stabs;     // stabilizer per candidate (reduce_ only)
        int pos = 0;
    };

    void build_level(std::size_t depth);
    DPCover assemble() const;

    std::shared_ptr<const Graph> graph_;
    int fold_;
    bool reduce_;
    EdgeMask tree_ = 0;
    std::vector<int> cotree_;
    std::vector<Perm> perms_;                    // twist-then-lex digit order
    std::vector<int> full_group_;                // indices 0..fold!-1
    std::vector<Level> levels_;
    std::uint64_t ordinal_ = 0;
    bool exhausted_ = false;
    bool started_ = false;
};

} // namespace dpchroma

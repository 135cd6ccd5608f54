#include "dpchroma/cover_enum.hpp"

#include <algorithm>
#include <numeric>

namespace dpchroma {

namespace {

// true when sigma is the lexicographically least element of its orbit under
// conjugation by the listed group elements; collects the stabilizer when
// a non-null out pointer is given
bool lex_min_under(const Perm& sigma, const std::vector<Perm>& table, const std::vector<int>& group,
                   std::vector<int>* stabilizer_out) {
    const int m = sigma.size();
    std::vector<int> conj(static_cast<std::size_t>(m));
    for (int gi : group) {
        const Perm& pi = table[static_cast<std::size_t>(gi)];
        for (int j = 0; j < m; ++j) conj[static_cast<std::size_t>(pi.image(j))] = pi.image(sigma.image(j));
        int cmp = 0;
        for (int j = 0; j < m; ++j) {
            if (conj[static_cast<std::size_t>(j)] != sigma.image(j)) {
                cmp = conj[static_cast<std::size_t>(j)] < sigma.image(j) ? -1 : 1;
                break;
            }
        }
        if (cmp < 0) {
            if (stabilizer_out) stabilizer_out->clear();
            return false;
        }
        if (cmp == 0 && stabilizer_out) stabilizer_out->push_back(gi);
    }
    return true;
}

} // namespace

CoverEnumerator::CoverEnumerator(std::shared_ptr<const Graph> g, int fold, bool reduce_by_conjugation,
                                 std::uint64_t budget)
    : graph_(std::move(g)), fold_(fold), reduce_(reduce_by_conjugation) {
    if (!graph_) throw ValidationError("enumerator has no graph");
    if (fold_ < 1) throw ValidationError("fold size must be >= 1");
    if (!graph_->is_connected()) throw ValidationError("cover enumeration requires a connected graph");

    tree_ = spanning_tree(*graph_);
    for (int i = 0; i < graph_->edge_count(); ++i)
        if (!(tree_ & (EdgeMask{1} << i))) cotree_.push_back(i);

    const int k = static_cast<int>(cotree_.size());
    const BigInt fold_factorial = factorial(fold_);
    const BigInt total = big_pow(fold_factorial, static_cast<unsigned>(k));
    const BigInt after_reduction = k == 0 ? BigInt(1) : big_pow(fold_factorial, static_cast<unsigned>(k - 1));
    const BigInt gate = reduce_ ? after_reduction : total;
    if (gate > budget || (k > 0 && fold_factorial > budget))
        throw CapacityError("cover enumeration needs " + to_decimal(total) + " covers (" +
                            to_decimal(after_reduction) + " after conjugation reduction) at fold " +
                            std::to_string(fold_) + "; budget is " + std::to_string(budget));

    if (k > 0) {
        perms_ = all_perms(fold_, budget);
        // twist-ascending digit order, ties lexicographic: mildly twisted
        // covers stream first
        std::stable_sort(perms_.begin(), perms_.end(),
                         [](const Perm& a, const Perm& b) { return a.twist() < b.twist(); });
        full_group_.resize(perms_.size());
        std::iota(full_group_.begin(), full_group_.end(), 0);
    }
}

BigInt CoverEnumerator::unreduced_total() const {
    return big_pow(factorial(fold_), static_cast<unsigned>(cotree_.size()));
}

void CoverEnumerator::build_level(std::size_t depth) {
    Level level;
    if (!reduce_) {
        level.candidates.resize(perms_.size());
        std::iota(level.candidates.begin(), level.candidates.end(), 0);
    } else {
        const std::vector<int>& group =
            depth == 0 ? full_group_
                       : levels_[depth - 1].stabs[static_cast<std::size_t>(levels_[depth - 1].pos)];
        for (std::size_t pi = 0; pi < perms_.size(); ++pi) {
            std::vector<int> stab;
            if (lex_min_under(perms_[pi], perms_, group, &stab)) {
                level.candidates.push_back(static_cast<int>(pi));
                level.stabs.push_back(std::move(stab));
            }
        }
    }
    levels_.push_back(std::move(level));
}

DPCover CoverEnumerator::assemble() const {
    DPCover c = canonical_cover(graph_, fold_);
    for (std::size_t d = 0; d < levels_.size(); ++d) {
        const Level& level = levels_[d];
        c.sigma[static_cast<std::size_t>(cotree_[d])] =
            perms_[static_cast<std::size_t>(level.candidates[static_cast<std::size_t>(level.pos)])];
    }
    return c;
}

std::optional<RankedCover> CoverEnumerator::next() {
    if (exhausted_) return std::nullopt;
    const std::size_t k = cotree_.size();

    if (!started_) {
        started_ = true;
        if (k == 0) {
            exhausted_ = true;
            return RankedCover{0, canonical_cover(graph_, fold_)};
        }
        while (levels_.size() < k) build_level(levels_.size());
        return RankedCover{ordinal_++, assemble()};
    }
    if (k == 0) return std::nullopt;

    // odometer: advance the deepest level, rebuilding deeper levels as the
    // stabilizer chain changes
    for (;;) {
        Level& last = levels_.back();
        if (static_cast<std::size_t>(last.pos) + 1 < last.candidates.size()) {
            ++last.pos;
            while (levels_.size() < k) build_level(levels_.size());
            return RankedCover{ordinal_++, assemble()};
        }
        levels_.pop_back();
        if (levels_.empty()) {
            exhausted_ = true;
            return std::nullopt;
        }
    }
}

} // namespace dpchroma

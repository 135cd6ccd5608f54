#pragma once

#include "dpchroma/errors.hpp"

#include <compare>
#include <cstdint>
#include <vector>

namespace dpchroma {

/// Permutation of {0, ..., m-1} in one-line notation: image(i) is where i
/// goes.
///
/// Composition convention, used everywhere in this library:
/// compose(a, b) applies a first and b second, so
/// compose(a, b).image(x) == b.image(a.image(x)).
/// conjugate(sigma, pi) is the permutation that applies pi-inverse, then
/// sigma, then pi; equivalently conjugate(sigma, pi).image(pi.image(j)) ==
/// pi.image(sigma.image(j)) for all j.
class Perm {
public:
    Perm() = default;

    /// Validating constructor: images must be a bijection on {0,...,m-1}.
    explicit Perm(std::vector<int> images);

    static Perm identity(int m);

    /// For internal hot paths; the caller guarantees bijectivity.
    static Perm unchecked(std::vector<int> images);

    int size() const noexcept { return static_cast<int>(images_.size()); }
    int image(int x) const { return images_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& images() const noexcept { return images_; }

    bool is_identity() const noexcept;

    /// Number of non-fixed points; 0 iff identity.
    int twist() const noexcept;

    friend auto operator<=>(const Perm&, const Perm&) = default;

private:
    std::vector<int> images_;
};

Perm compose(const Perm& first, const Perm& second);
Perm inverse(const Perm& p);
Perm conjugate(const Perm& sigma, const Perm& pi);

/// Lexicographic rank of the one-line notation among all m! permutations.
std::uint64_t lex_rank(const Perm& p);
Perm from_lex_rank(int m, std::uint64_t rank);

/// All permutations of {0,...,m-1} in lexicographic one-line order.
/// Throws CapacityError when m! would exceed max_count.
std::vector<Perm> all_perms(int m, std::uint64_t max_count);

} // namespace dpchroma

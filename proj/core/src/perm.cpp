#include "dpchroma/perm.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace dpchroma {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
    const int m = size();
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    for (int x : images_) {
        if (x < 0 || x >= m || seen[static_cast<std::size_t>(x)])
            throw ValidationError("permutation images are not a bijection on {0..m-1}");
        seen[static_cast<std::size_t>(x)] = 1;
    }
}

Perm Perm::identity(int m) {
    std::vector<int> img(static_cast<std::size_t>(m));
    std::iota(img.begin(), img.end(), 0);
    return unchecked(std::move(img));
}

Perm Perm::unchecked(std::vector<int> images) {
    Perm p;
    p.images_ = std::move(images);
    return p;
}

bool Perm::is_identity() const noexcept {
    for (int i = 0; i < size(); ++i)
        if (images_[static_cast<std::size_t>(i)] != i) return false;
    return true;
}

int Perm::twist() const noexcept {
    int moved = 0;
    for (int i = 0; i < size(); ++i)
        if (images_[static_cast<std::size_t>(i)] != i) ++moved;
    return moved;
}

Perm compose(const Perm& first, const Perm& second) {
    const int m = first.size();
    std::vector<int> img(static_cast<std::size_t>(m));
    for (int x = 0; x < m; ++x) img[static_cast<std::size_t>(x)] = second.image(first.image(x));
    return Perm::unchecked(std::move(img));
}

Perm inverse(const Perm& p) {
    const int m = p.size();
    std::vector<int> img(static_cast<std::size_t>(m));
    for (int x = 0; x < m; ++x) img[static_cast<std::size_t>(p.image(x))] = x;
    return Perm::unchecked(std::move(img));
}

Perm conjugate(const Perm& sigma, const Perm& pi) {
    const int m = sigma.size();
    std::vector<int> img(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) img[static_cast<std::size_t>(pi.image(j))] = pi.image(sigma.image(j));
    return Perm::unchecked(std::move(img));
}

std::uint64_t lex_rank(const Perm& p) {
    const int m = p.size();
    std::uint64_t rank = 0;
    std::uint64_t fact = 1;
    for (int i = 2; i <= m; ++i) fact *= static_cast<std::uint64_t>(i);
    // factorial number system: count smaller unused images position by position
    std::vector<char> used(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i) {
        fact /= static_cast<std::uint64_t>(m - i);
        int smaller = 0;
        for (int x = 0; x < p.image(i); ++x)
            if (!used[static_cast<std::size_t>(x)]) ++smaller;
        rank += static_cast<std::uint64_t>(smaller) * fact;
        used[static_cast<std::size_t>(p.image(i))] = 1;
    }
    return rank;
}

Perm from_lex_rank(int m, std::uint64_t rank) {
    std::vector<int> pool(static_cast<std::size_t>(m));
    std::iota(pool.begin(), pool.end(), 0);
    std::uint64_t fact = 1;
    for (int i = 2; i < m; ++i) fact *= static_cast<std::uint64_t>(i);
    std::vector<int> img;
    img.reserve(static_cast<std::size_t>(m));
    for (int i = m; i >= 1; --i) {
        const std::uint64_t d = rank / fact;
        rank %= fact;
        img.push_back(pool[static_cast<std::size_t>(d)]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
        if (i > 1) fact /= static_cast<std::uint64_t>(i - 1);
    }
    return Perm::unchecked(std::move(img));
}

std::vector<Perm> all_perms(int m, std::uint64_t max_count) {
    if (m < 1) throw ValidationError("permutation degree must be >= 1");
    std::uint64_t total = 1;
    for (int i = 2; i <= m; ++i) {
        total *= static_cast<std::uint64_t>(i);
        if (total > max_count)
            throw CapacityError("permutation table for m=" + std::to_string(m) +
                                " has m! > " + std::to_string(max_count) + " entries");
    }
    std::vector<Perm> out;
    out.reserve(total);
    std::vector<int> img(static_cast<std::size_t>(m));
    std::iota(img.begin(), img.end(), 0);
    do {
        out.push_back(Perm::unchecked(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

} // namespace dpchroma

#include "braidrep/permutation.hpp"

#include "braidrep/errors.hpp"

namespace braidrep {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images))
{
    std::vector<bool> seen(images_.size() + 1, false);
    for (auto v : images_) {
        if (v < 1 || v > images_.size() || seen[v])
            throw InvalidParameter("permutation: images are not a bijection of 1..n");
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::uint32_t n)
{
    std::vector<std::uint32_t> im(n);
    for (std::uint32_t i = 0; i < n; ++i) im[i] = i + 1;
    return Permutation(std::move(im));
}

Permutation Permutation::transposition(std::uint32_t i, std::uint32_t j, std::uint32_t n)
{
    if (i < 1 || j < 1 || i > n || j > n)
        throw InvalidParameter("transposition outside 1.." + std::to_string(n));
    auto p = identity(n);
    std::swap(p.images_[i - 1], p.images_[j - 1]);
    return p;
}

Permutation Permutation::inverse() const
{
    std::vector<std::uint32_t> im(images_.size());
    for (std::uint32_t i = 0; i < images_.size(); ++i) im[images_[i] - 1] = i + 1;
    return Permutation(std::move(im));
}

bool Permutation::is_identity() const
{
    for (std::uint32_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i + 1) return false;
    return true;
}

Permutation perm_compose(const Permutation& p, const Permutation& q)
{
    if (p.degree() != q.degree())
        throw InvalidParameter("perm_compose: degree " + std::to_string(p.degree()) + " vs " +
                               std::to_string(q.degree()));
    std::vector<std::uint32_t> im(p.degree());
    for (std::uint32_t i = 1; i <= p.degree(); ++i) im[i - 1] = p(q(i));
    return Permutation(std::move(im));
}

Permutation perm_of_transposition(std::uint32_t i, std::uint32_t n)
{
    return Permutation::transposition(i, i + 1, n);
}

std::string to_string(const Permutation& p)
{
    std::string out;
    std::vector<bool> done(p.degree() + 1, false);
    for (std::uint32_t i = 1; i <= p.degree(); ++i) {
        if (done[i] || p(i) == i) continue;
        out += '(';
        for (auto j = i; !done[j]; j = p(j)) {
            if (j != i) out += ' ';
            out += std::to_string(j);
            done[j] = true;
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

} // namespace braidrep

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "braidrep/errors.hpp"
#include "braidrep/permutation.hpp"

using namespace braidrep;

TEST(Permutation, Examples)
{
    auto t = perm_of_transposition(1, 3);
    EXPECT_EQ(t.images(), (std::vector<std::uint32_t>{2, 1, 3}));
    EXPECT_TRUE(perm_compose(t, t).is_identity());
    auto p = Permutation(std::vector<std::uint32_t>{3, 1, 2});
    EXPECT_EQ(perm_compose(Permutation::identity(3), p), p);
    EXPECT_EQ(perm_compose(p, Permutation::identity(3)), p);
    EXPECT_EQ(to_string(t), "(1 2)");
    EXPECT_EQ(to_string(Permutation::identity(4)), "()");
    EXPECT_EQ(to_string(p), "(1 3 2)");
}

TEST(Permutation, ComposeIsFunctional)
{
    // (p o q)(i) = p(q(i))
    Permutation p(std::vector<std::uint32_t>{2, 3, 1});
    Permutation q(std::vector<std::uint32_t>{1, 3, 2});
    auto pq = perm_compose(p, q);
    for (std::uint32_t i = 1; i <= 3; ++i) EXPECT_EQ(pq(i), p(q(i)));
}

TEST(Permutation, Errors)
{
    EXPECT_THROW(Permutation(std::vector<std::uint32_t>{1, 1, 2}), InvalidParameter);
    EXPECT_THROW(Permutation(std::vector<std::uint32_t>{0, 1}), InvalidParameter);
    EXPECT_THROW(perm_compose(Permutation::identity(2), Permutation::identity(3)), InvalidParameter);
    EXPECT_THROW(perm_of_transposition(3, 3), InvalidParameter);
}

TEST(Permutation, GroupAxiomsRandom)
{
    std::mt19937_64 rng(7);
    auto random_perm = [&](std::uint32_t n) {
        std::vector<std::uint32_t> v(n);
        std::iota(v.begin(), v.end(), 1u);
        std::shuffle(v.begin(), v.end(), rng);
        return Permutation(v);
    };
    for (int k = 0; k < 1000; ++k) {
        auto a = random_perm(6), b = random_perm(6), c = random_perm(6);
        ASSERT_EQ(perm_compose(perm_compose(a, b), c), perm_compose(a, perm_compose(b, c)));
        ASSERT_TRUE(perm_compose(a, a.inverse()).is_identity());
        ASSERT_TRUE(perm_compose(a.inverse(), a).is_identity());
    }
}

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "regdec/errors.hpp"
#include "regdec/regular_partition.hpp"
#include "regdec/weyl.hpp"

using namespace regdec;
using namespace testing_helpers;

TEST(SimpleReflection, Examples) {
    const auto a2 = system('A', 2);
    EXPECT_EQ(simple_reflection(a2, 1, Root({0, 1})), Root({1, 1}));
    EXPECT_EQ(simple_reflection(a2, 1, Root({1, 0})), Root({-1, 0}));

    const auto a3 = system('A', 3);
    EXPECT_EQ(simple_reflection(a3, 3, Root({-1, -1, 0})), Root({-1, -1, -1}));
}

TEST(SimpleReflection, Errors) {
    const auto a2 = system('A', 2);
    EXPECT_THROW(simple_reflection(a2, 0, Root({1, 0})), InvalidArgument);
    EXPECT_THROW(simple_reflection(a2, 3, Root({1, 0})), InvalidArgument);
    EXPECT_THROW(simple_reflection(a2, 1, Root({2, 0})), InvalidArgument);
}

TEST(SimpleReflection, InvolutionPermutingRoots) {
    for (auto [f, n] : std::vector<std::pair<char, int>>{{'A', 4}, {'B', 3}, {'C', 3}, {'D', 4}, {'G', 2}, {'F', 4}, {'E', 6}}) {
        const auto rs = system(f, n);
        for (int i = 1; i <= n; ++i) {
            const auto perm = reflection_permutation(rs, i);
            std::set<RootIndex> image(perm.begin(), perm.end());
            EXPECT_EQ(static_cast<int>(image.size()), rs.size());
            for (RootIndex r = 0; r < rs.size(); ++r) EXPECT_EQ(perm[static_cast<std::size_t>(perm[static_cast<std::size_t>(r)])], r);
            EXPECT_EQ(perm[static_cast<std::size_t>(i - 1)], rs.neg(i - 1));
        }
    }
}

TEST(ApplyWord, EmptyWordIsIdentity) {
    const auto rs = system('A', 2);
    const auto p = finest_partition(rs, Orientation::row);
    EXPECT_EQ(apply_word(rs, WeylWord{}, p), p);
}

TEST(ApplyWord, AdjacentReflectionsSwapRowBlocks) {
    for (int n = 2; n <= 4; ++n) {
        const auto rs = system('A', n);
        const auto p = finest_partition(rs, Orientation::row);
        for (int k = 1; k <= n; ++k) {
            const auto q = apply_word(rs, WeylWord{{k}}, p);
            for (int b = 0; b <= n; ++b) {
                int expected = b;
                if (b == k - 1) expected = k;
                if (b == k) expected = k - 1;
                EXPECT_EQ(q.blocks[static_cast<std::size_t>(b)], p.blocks[static_cast<std::size_t>(expected)]) << n << k << b;
            }
        }
    }
}

TEST(ApplyWord, RightmostLetterActsFirst) {
    const auto rs = system('A', 3);
    const Root r({1, 0, 0});
    const auto perm = word_permutation(rs, WeylWord{{2, 1}});
    const Root expected = simple_reflection(rs, 2, simple_reflection(rs, 1, r));
    EXPECT_EQ(rs.root(perm[static_cast<std::size_t>(*rs.index_of(r))]), expected);
}

TEST(ApplyWord, PreservesRegularity) {
    const auto rs = system('A', 3);
    const auto p = a3_example(rs);
    for (const auto& w : std::vector<WeylWord>{{{1}}, {{2}}, {{3}}, {{1, 2, 3}}, {{3, 1, 2, 1}}})
        EXPECT_TRUE(is_regular_partition(rs, apply_word(rs, w, p)));
}

TEST(WeylGroup, OrderOfAnByEnumeration) {
    std::uint64_t fact = 1;
    for (int n = 1; n <= 5; ++n) {
        fact *= static_cast<std::uint64_t>(n + 1);
        const auto rs = system('A', n);
        EXPECT_EQ(weyl_group_elements(rs).size(), fact);
        EXPECT_EQ(weyl_group_order(rs.type()), fact);
    }
}

TEST(WeylGroup, OrdersOfOtherTypes) {
    EXPECT_EQ(weyl_group_elements(system('B', 3)).size(), 48u);
    EXPECT_EQ(weyl_group_elements(system('G', 2)).size(), 12u);
    EXPECT_EQ(weyl_group_elements(system('D', 4)).size(), 192u);
    EXPECT_EQ(weyl_group_elements(system('F', 4)).size(), 1152u);
    EXPECT_EQ(weyl_group_order(make_type('E', 8)), 696729600u);
}

TEST(WeylGroup, CapacityGuard) {
    EXPECT_THROW(weyl_group_elements(system('E', 8)), CapacityError);
    EXPECT_THROW(weyl_group_elements(system('A', 4), 100), CapacityError);
}

TEST(Equivalence, Parsing) {
    EXPECT_TRUE(parse_equivalence("none").none());
    const auto e = parse_equivalence("sign,renumber");
    EXPECT_TRUE(e.renumber && e.sign && !e.weyl);
    EXPECT_EQ(to_string(e), "renumber,sign");
    EXPECT_EQ(to_string(parse_equivalence("weyl,sign,renumber")), "renumber,sign,weyl");
    EXPECT_THROW(parse_equivalence("renumber,foo"), InvalidArgument);
    EXPECT_THROW(parse_equivalence(""), InvalidArgument);
}

TEST(Canonicalize, RowAndColumnAgreeModuloSign) {
    const auto rs = system('A', 2);
    const auto row = finest_partition(rs, Orientation::row);
    const auto col = finest_partition(rs, Orientation::column);
    const auto e = parse_equivalence("renumber,sign");
    EXPECT_EQ(canonicalize(rs, row, e), canonicalize(rs, col, e));
    EXPECT_NE(canonicalize(rs, row, parse_equivalence("renumber")),
              canonicalize(rs, col, parse_equivalence("renumber")));
}

TEST(Canonicalize, WeylImageOfRowFinest) {
    const auto rs = system('A', 3);
    const auto row = finest_partition(rs, Orientation::row);
    const auto e = parse_equivalence("renumber,weyl");
    EXPECT_EQ(canonicalize(rs, row, e), canonicalize(rs, apply_word(rs, WeylWord{{1}}, row), e));
}

TEST(Canonicalize, NoneKeepsBlockOrder) {
    const auto rs = system('A', 2);
    const auto row = finest_partition(rs, Orientation::row);
    EXPECT_EQ(canonicalize(rs, row, Equivalence{}), row);
    BlockPartition swapped{{row.blocks[1], row.blocks[0], row.blocks[2]}};
    EXPECT_EQ(canonicalize(rs, swapped, Equivalence{}), swapped);
    EXPECT_EQ(canonicalize(rs, swapped, parse_equivalence("renumber")),
              canonicalize(rs, row, parse_equivalence("renumber")));
}

TEST(Canonicalize, OrbitOfRowFinestModuloRenumberIsOnePoint) {
    for (int n = 2; n <= 4; ++n) {
        const auto rs = system('A', n);
        const auto row = finest_partition(rs, Orientation::row);
        const auto key = canonical_key(rs, row, parse_equivalence("renumber"));
        for (const auto& w : weyl_group_elements(rs)) {
            const auto img = permute_roots(row, w);
            EXPECT_EQ(canonical_key(rs, img, parse_equivalence("renumber")), key);
        }
    }
}

TEST(Canonicalize, IsIdempotentAndOrderIndependent) {
    const auto rs = system('A', 3);
    const auto p = a3_example(rs);
    for (const char* spec : {"renumber", "renumber,sign", "renumber,sign,weyl", "weyl", "sign"}) {
        const auto e = parse_equivalence(spec);
        const auto c = canonicalize(rs, p, e);
        EXPECT_EQ(canonicalize(rs, c, e), c) << spec;
        EXPECT_EQ(as_sets(rs, c).size(), 3u);
    }
}

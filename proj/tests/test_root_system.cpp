#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "regdec/errors.hpp"

using namespace regdec;
using namespace testing_helpers;

namespace {

struct Expected {
    char family;
    int rank;
    int size;
};

const Expected kAll[] = {
    {'A', 1, 2},  {'A', 2, 6},  {'A', 3, 12}, {'A', 4, 20},  {'A', 6, 42}, {'B', 2, 8},   {'B', 3, 18},
    {'B', 4, 32}, {'C', 3, 18}, {'C', 4, 32}, {'D', 4, 24},  {'D', 5, 40}, {'E', 6, 72},  {'E', 7, 126},
    {'E', 8, 240}, {'F', 4, 48}, {'G', 2, 12},
};

}  // namespace

TEST(RootSystemType, RankRules) {
    EXPECT_NO_THROW(make_type('A', 1));
    EXPECT_THROW(make_type('A', 0), InvalidArgument);
    EXPECT_THROW(make_type('B', 1), InvalidArgument);
    EXPECT_THROW(make_type('C', 2), InvalidArgument);
    EXPECT_THROW(make_type('D', 3), InvalidArgument);
    EXPECT_THROW(make_type('E', 5), InvalidArgument);
    EXPECT_THROW(make_type('E', 9), InvalidArgument);
    EXPECT_THROW(make_type('F', 5), InvalidArgument);
    EXPECT_THROW(make_type('G', 3), InvalidArgument);
    EXPECT_THROW(make_type('H', 3), InvalidArgument);
    try {
        make_type('C', 2);
    } catch (const InvalidArgument& e) {
        EXPECT_NE(std::string(e.what()).find("C"), std::string::npos);
    }
}

TEST(RootSystem, CardinalitiesMatchFormulaAndOracle) {
    for (const auto& e : kAll) {
        const auto rs = system(e.family, e.rank);
        EXPECT_EQ(rs.size(), e.size) << e.family << e.rank;
        const auto roots = oracle::reflection_closure(rs.cartan());
        EXPECT_EQ(static_cast<int>(roots.size()), e.size);
        for (const auto& r : rs.roots()) EXPECT_TRUE(roots.count(r.coeffs()));
    }
}

TEST(RootSystem, SimpleRootsFirstAndNegationLayout) {
    for (const auto& e : kAll) {
        const auto rs = system(e.family, e.rank);
        for (int i = 0; i < rs.rank(); ++i) {
            Coeffs c(static_cast<std::size_t>(rs.rank()), 0);
            c[static_cast<std::size_t>(i)] = 1;
            EXPECT_EQ(rs.root(i).coeffs(), c);
        }
        for (RootIndex i = 0; i < rs.size(); ++i) {
            EXPECT_EQ(rs.neg(rs.neg(i)), i);
            EXPECT_NE(rs.neg(i), i);
            EXPECT_EQ(rs.root(rs.neg(i)), -rs.root(i));
            EXPECT_EQ(rs.is_positive(i), rs.root(i).is_positive());
        }
    }
}

TEST(RootSystem, SumTableAgreesWithLattice) {
    for (const auto& e : kAll) {
        if (e.size > 72) continue;
        const auto rs = system(e.family, e.rank);
        const auto roots = oracle::reflection_closure(rs.cartan());
        for (RootIndex i = 0; i < rs.size(); ++i)
            for (RootIndex j = 0; j < rs.size(); ++j) {
                const auto z = oracle::add(rs.root(i).coeffs(), rs.root(j).coeffs());
                const auto s = rs.sum(i, j);
                ASSERT_EQ(s.has_value(), roots.count(z) > 0);
                if (s) {
                    EXPECT_EQ(rs.root(*s).coeffs(), z);
                    EXPECT_EQ(rs.sum(j, i), s);
                }
            }
    }
}

TEST(RootSystem, G2PositiveRoots) {
    const auto rs = system('G', 2);
    std::set<Coeffs> pos;
    for (auto r : rs.positive().members()) pos.insert(rs.root(r).coeffs());
    EXPECT_EQ(pos, (std::set<Coeffs>{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}}));
}

TEST(RootSystem, RejectsNonRoots) {
    const auto rs = system('A', 2);
    EXPECT_FALSE(rs.index_of(Coeffs{2, 0}));
    EXPECT_FALSE(rs.index_of(Coeffs{1, -1}));
    EXPECT_THROW(rs.require_index({0, 0}), InvalidArgument);
}

TEST(Closure, Examples) {
    const auto a2 = system('A', 2);
    EXPECT_TRUE(is_closed(a2, set_of(a2, {{1, 0}, {0, 1}, {1, 1}})));
    EXPECT_FALSE(is_closed(a2, set_of(a2, {{1, 0}, {0, 1}})));
    EXPECT_TRUE(is_closed(a2, RootSet{}));
    EXPECT_TRUE(is_closed(a2, a2.all()));

    const auto a3 = system('A', 3);
    EXPECT_TRUE(is_closed(a3, a3_example(a3).blocks[2]));
}

TEST(Closure, PositiveAndNegativeHalvesAreClosed) {
    for (const auto& e : kAll) {
        const auto rs = system(e.family, e.rank);
        EXPECT_TRUE(is_closed(rs, rs.positive()));
        EXPECT_TRUE(is_closed(rs, rs.negative()));
    }
}

TEST(Closure, AgreesWithLiteralDefinitionOnAllSubsetsOfA2) {
    const auto rs = system('A', 2);
    const auto roots = oracle::reflection_closure(rs.cartan());
    for (int mask = 0; mask < (1 << rs.size()); ++mask) {
        RootSet s;
        std::set<Coeffs> lit;
        for (int r = 0; r < rs.size(); ++r)
            if (mask >> r & 1) {
                s.insert(r);
                lit.insert(rs.root(r).coeffs());
            }
        EXPECT_EQ(is_closed(rs, s), oracle::closed(roots, lit)) << mask;
    }
}

TEST(SymmetricPart, Examples) {
    const auto a2 = system('A', 2);
    EXPECT_EQ(symmetric_part(a2, a2.all()), a2.all());
    EXPECT_TRUE(symmetric_part(a2, a2.positive()).empty());
    const auto a3 = system('A', 3);
    EXPECT_EQ(symmetric_part(a3, a3_example(a3).blocks[2]), set_of(a3, {{1, 1, 1}, {-1, -1, -1}}));
}

TEST(BetaChain, Bases) {
    const auto a3 = system('A', 3);
    EXPECT_EQ(beta_chain_basis(a3), (std::vector<RootIndex>{idx(a3, {1, 0, 0}), idx(a3, {1, 1, 0}), idx(a3, {1, 1, 1})}));

    const auto d4 = system('D', 4);
    EXPECT_EQ(beta_chain_basis(d4), (std::vector<RootIndex>{idx(d4, {1, 0, 0, 0}), idx(d4, {1, 1, 0, 0}),
                                                             idx(d4, {1, 1, 1, 0}), idx(d4, {1, 1, 0, 1})}));

    const auto e6 = system('E', 6);
    EXPECT_EQ(beta_chain_basis(e6),
              (std::vector<RootIndex>{idx(e6, {1, 0, 0, 0, 0, 0}), idx(e6, {1, 1, 0, 0, 0, 0}),
                                      idx(e6, {1, 1, 1, 0, 0, 0}), idx(e6, {1, 1, 1, 1, 0, 0}),
                                      idx(e6, {1, 1, 1, 0, 1, 0}), idx(e6, {1, 1, 1, 0, 1, 1})}));

    const auto g2 = system('G', 2);
    EXPECT_EQ(beta_chain_basis(g2), (std::vector<RootIndex>{0, 1}));
}

TEST(BetaChain, DifferencesInAnAreInjectiveOntoRoots) {
    for (int n = 1; n <= 6; ++n) {
        const auto rs = system('A', n);
        std::set<RootIndex> seen;
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                if (i == j) continue;
                Coeffs c(static_cast<std::size_t>(n), 0);
                const auto bj = beta_coeffs(n, j);
                const auto bi = beta_coeffs(n, i);
                for (int k = 0; k < n; ++k) c[static_cast<std::size_t>(k)] = bj[static_cast<std::size_t>(k)] - bi[static_cast<std::size_t>(k)];
                const auto r = rs.index_of(c);
                ASSERT_TRUE(r.has_value());
                EXPECT_TRUE(seen.insert(*r).second);
                EXPECT_EQ(beta_difference(rs, *r), (BetaDifference{i, j}));
                EXPECT_EQ(beta_difference_index(rs, {i, j}), *r);
            }
        EXPECT_EQ(static_cast<int>(seen.size()), rs.size());
    }
}

TEST(BetaChain, DifferenceSetNotClosedInBC) {
    for (char f : {'B', 'C'}) {
        for (int n = 2; n <= 4; ++n) {
            if (f == 'C' && n == 2) continue;
            const auto rs = system(f, n);
            RootSet s;
            for (int i = 0; i <= n; ++i)
                for (int j = 0; j <= n; ++j) {
                    if (i == j) continue;
                    auto bj = beta_coeffs(n, j);
                    const auto bi = beta_coeffs(n, i);
                    for (int k = 0; k < n; ++k) bj[static_cast<std::size_t>(k)] -= bi[static_cast<std::size_t>(k)];
                    s.insert(rs.require_index(bj));
                }
            EXPECT_FALSE(is_closed(rs, s)) << f << n;
        }
    }
}

TEST(RootSet, Algebra) {
    RootSet a{1, 3, 5};
    RootSet b{3, 4};
    EXPECT_EQ((a | b).members(), (std::vector<RootIndex>{1, 3, 4, 5}));
    EXPECT_EQ((a & b).members(), (std::vector<RootIndex>{3}));
    EXPECT_EQ((a - b).members(), (std::vector<RootIndex>{1, 5}));
    EXPECT_TRUE(a.intersects(b));
    EXPECT_TRUE(RootSet({3}).is_subset_of(a));
    EXPECT_EQ(a.size(), 3u);
}

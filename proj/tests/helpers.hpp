#pragma once

#include <initializer_list>
#include <set>
#include <vector>

#include "regdec/partition.hpp"
#include "regdec/root_system.hpp"

namespace testing_helpers {

using namespace regdec;

inline RootSystem system(char family, int rank) { return RootSystem(make_type(family, rank)); }

inline RootIndex idx(const RootSystem& rs, Coeffs c) { return rs.require_index(c); }

inline RootSet set_of(const RootSystem& rs, std::initializer_list<Coeffs> roots) {
    RootSet s;
    for (const auto& c : roots) s.insert(rs.require_index(c));
    return s;
}

/// 3-partition of A_3 with simple roots a, b, c:
/// {-b, -b-c, a}, {-c, b, a+b}, and the remaining six roots.
inline BlockPartition a3_example(const RootSystem& rs) {
    BlockPartition p;
    p.blocks.push_back(set_of(rs, {{0, -1, 0}, {0, -1, -1}, {1, 0, 0}}));
    p.blocks.push_back(set_of(rs, {{0, 0, -1}, {0, 1, 0}, {1, 1, 0}}));
    p.blocks.push_back(rs.all() - p.blocks[0] - p.blocks[1]);
    return p;
}

/// Root coefficient sets of a partition, for order-insensitive comparison.
inline std::set<std::set<Coeffs>> as_sets(const RootSystem& rs, const BlockPartition& p) {
    std::set<std::set<Coeffs>> out;
    for (const auto& b : p.blocks) {
        std::set<Coeffs> s;
        for (auto r : b.members()) s.insert(rs.root(r).coeffs());
        out.insert(s);
    }
    return out;
}

/// Every set partition of the block indices 0..m-1.
inline std::vector<std::vector<std::vector<int>>> merge_specs(int m) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<int> label(static_cast<std::size_t>(m), 0);
    auto rec = [&](auto&& self, int pos, int used) -> void {
        if (pos == m) {
            std::vector<std::vector<int>> spec(static_cast<std::size_t>(used));
            for (int i = 0; i < m; ++i) spec[static_cast<std::size_t>(label[static_cast<std::size_t>(i)])].push_back(i);
            out.push_back(spec);
            return;
        }
        for (int b = 0; b <= used; ++b) {
            label[static_cast<std::size_t>(pos)] = b;
            self(self, pos + 1, std::max(used, b + 1));
        }
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace testing_helpers

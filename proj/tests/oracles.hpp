#pragma once

// Brute-force reference implementations. They share no code with the
// library beyond the Cartan matrix and plain coefficient vectors.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "regdec/root_system.hpp"

namespace oracle {

using Coeffs = regdec::Coeffs;

/// Roots by repeated simple reflections on coefficient vectors.
inline std::set<Coeffs> reflection_closure(const regdec::CartanMatrix& a) {
    const int n = a.rank();
    std::set<Coeffs> roots;
    std::vector<Coeffs> todo;
    for (int i = 0; i < n; ++i) {
        Coeffs c(static_cast<std::size_t>(n), 0);
        c[static_cast<std::size_t>(i)] = 1;
        todo.push_back(c);
    }
    while (!todo.empty()) {
        Coeffs c = todo.back();
        todo.pop_back();
        if (!roots.insert(c).second) continue;
        for (int i = 0; i < n; ++i) {
            int pairing = 0;
            for (int j = 0; j < n; ++j) pairing += c[static_cast<std::size_t>(j)] * a(j, i);
            Coeffs d = c;
            d[static_cast<std::size_t>(i)] -= pairing;
            if (!roots.count(d)) todo.push_back(d);
        }
    }
    return roots;
}

inline Coeffs add(const Coeffs& a, const Coeffs& b) {
    Coeffs c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

/// Literal closedness: every sum of two members that is a root is a member.
inline bool closed(const std::set<Coeffs>& roots, const std::set<Coeffs>& s) {
    for (const auto& x : s)
        for (const auto& y : s) {
            const auto z = add(x, y);
            if (roots.count(z) && !s.count(z)) return false;
        }
    return true;
}

/// Literal regularity: all blocks and all unions of two blocks closed.
inline bool regular(const std::set<Coeffs>& roots, const std::vector<std::set<Coeffs>>& blocks) {
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (!closed(roots, blocks[i])) return false;
        for (std::size_t j = i + 1; j < blocks.size(); ++j) {
            auto u = blocks[i];
            u.insert(blocks[j].begin(), blocks[j].end());
            if (!closed(roots, u)) return false;
        }
    }
    return true;
}

/// Calls `visit` with the block labels of every set partition of k items
/// (restricted growth strings).
inline void for_each_set_partition(int k, const std::function<void(const std::vector<int>&, int)>& visit) {
    std::vector<int> label(static_cast<std::size_t>(k), 0);
    std::function<void(int, int)> rec = [&](int pos, int used) {
        if (pos == k) {
            visit(label, used);
            return;
        }
        for (int b = 0; b <= used; ++b) {
            label[static_cast<std::size_t>(pos)] = b;
            rec(pos + 1, std::max(used, b + 1));
        }
    };
    rec(0, 0);
}

inline std::uint64_t count_set_partitions(int k, int blocks) {
    std::uint64_t c = 0;
    for_each_set_partition(k, [&](const std::vector<int>&, int m) { c += m == blocks; });
    return c;
}

inline std::uint64_t count_int_partitions(int total, int min_parts) {
    std::uint64_t c = 0;
    std::function<void(int, int, int)> rec = [&](int left, int max_part, int parts) {
        if (left == 0) {
            c += parts >= min_parts;
            return;
        }
        for (int p = std::min(left, max_part); p >= 1; --p) rec(left - p, p, parts + 1);
    };
    rec(total, total, 0);
    return c;
}

/// Regular set partitions of all roots, each as a sorted list of sorted blocks.
inline std::set<std::vector<std::vector<Coeffs>>> regular_partitions(const std::set<Coeffs>& roots,
                                                                     int min_blocks) {
    const std::vector<Coeffs> list(roots.begin(), roots.end());
    std::set<std::vector<std::vector<Coeffs>>> out;
    for_each_set_partition(static_cast<int>(list.size()), [&](const std::vector<int>& label, int m) {
        if (m < min_blocks) return;
        std::vector<std::set<Coeffs>> blocks(static_cast<std::size_t>(m));
        for (std::size_t r = 0; r < list.size(); ++r) blocks[static_cast<std::size_t>(label[r])].insert(list[r]);
        if (!regular(roots, blocks)) return;
        std::vector<std::vector<Coeffs>> key;
        for (const auto& b : blocks) key.emplace_back(b.begin(), b.end());
        std::sort(key.begin(), key.end());
        out.insert(key);
    });
    return out;
}

}  // namespace oracle

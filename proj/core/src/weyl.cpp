#include "regdec/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "regdec/errors.hpp"

namespace regdec {

namespace {

void check_letter(const RootSystem& rs, int i) {
    if (i < 1 || i > rs.rank())
        throw InvalidArgument("reflection index " + std::to_string(i) + " outside [1.." +
                              std::to_string(rs.rank()) + "]");
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
}

struct PermutationHash {
    std::size_t operator()(const RootPermutation& p) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto x : p) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
        return h;
    }
};

}  // namespace

Root simple_reflection(const RootSystem& rs, int i, const Root& r) {
    check_letter(rs, i);
    if (!rs.index_of(r)) throw InvalidArgument(to_string(r) + " is not a root of " + to_string(rs.type()));
    const auto& a = rs.cartan();
    int pairing = 0;
    for (int j = 0; j < rs.rank(); ++j) pairing += r[static_cast<std::size_t>(j)] * a(j, i - 1);
    Coeffs c = r.coeffs();
    c[static_cast<std::size_t>(i - 1)] -= pairing;
    return Root(std::move(c));
}

RootPermutation reflection_permutation(const RootSystem& rs, int i) {
    check_letter(rs, i);
    RootPermutation perm(static_cast<std::size_t>(rs.size()));
    for (int r = 0; r < rs.size(); ++r)
        perm[static_cast<std::size_t>(r)] = rs.require_index(simple_reflection(rs, i, rs.root(r)).coeffs());
    return perm;
}

RootPermutation word_permutation(const RootSystem& rs, const WeylWord& w) {
    RootPermutation perm(static_cast<std::size_t>(rs.size()));
    for (int r = 0; r < rs.size(); ++r) perm[static_cast<std::size_t>(r)] = r;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        const auto s = reflection_permutation(rs, *it);
        for (auto& x : perm) x = s[static_cast<std::size_t>(x)];
    }
    return perm;
}

BlockPartition apply_word(const RootSystem& rs, const WeylWord& w, const BlockPartition& p) {
    return permute_roots(p, word_permutation(rs, w));
}

std::uint64_t weyl_group_order(RootSystemType t) {
    const int n = t.rank;
    switch (t.family) {
        case Family::A: return factorial(n + 1);
        case Family::B:
        case Family::C: return (std::uint64_t{1} << n) * factorial(n);
        case Family::D: return (std::uint64_t{1} << (n - 1)) * factorial(n);
        case Family::E: return n == 6 ? 51840ull : n == 7 ? 2903040ull : 696729600ull;
        case Family::F: return 1152;
        case Family::G: return 12;
    }
    return 0;
}

std::vector<RootPermutation> weyl_group_elements(const RootSystem& rs, std::uint64_t limit) {
    const auto order = weyl_group_order(rs.type());
    if (order > limit)
        throw CapacityError("Weyl group of " + to_string(rs.type()) + " has " + std::to_string(order) +
                            " elements, above the enumeration limit " + std::to_string(limit));
    std::vector<RootPermutation> gens;
    for (int i = 1; i <= rs.rank(); ++i) gens.push_back(reflection_permutation(rs, i));

    RootPermutation id(static_cast<std::size_t>(rs.size()));
    for (int r = 0; r < rs.size(); ++r) id[static_cast<std::size_t>(r)] = r;

    std::unordered_set<RootPermutation, PermutationHash> seen{id};
    std::vector<RootPermutation> elements{id};
    for (std::size_t head = 0; head < elements.size(); ++head) {
        for (const auto& s : gens) {
            RootPermutation next(elements[head].size());
            for (std::size_t r = 0; r < next.size(); ++r)
                next[r] = s[static_cast<std::size_t>(elements[head][r])];
            if (seen.insert(next).second) elements.push_back(std::move(next));
        }
    }
    return elements;
}

Equivalence parse_equivalence(std::string_view spec) {
    Equivalence e;
    if (spec.empty()) throw InvalidArgument("empty equivalence list (use 'none')");
    if (spec == "none") return e;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        const auto comma = spec.find(',', pos);
        const auto token = spec.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        if (token == "renumber") e.renumber = true;
        else if (token == "sign") e.sign = true;
        else if (token == "weyl") e.weyl = true;
        else throw InvalidArgument("unknown equivalence '" + std::string(token) +
                                   "' (expected renumber, sign, weyl or none)");
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return e;
}

std::string to_string(const Equivalence& e) {
    std::string s;
    auto add = [&](const char* t) {
        if (!s.empty()) s += ",";
        s += t;
    };
    if (e.renumber) add("renumber");
    if (e.sign) add("sign");
    if (e.weyl) add("weyl");
    return s.empty() ? "none" : s;
}

PartitionKey canonical_key(const RootSystem& rs, const BlockPartition& p, const Equivalence& modulo) {
    validate_partition(rs, p);
    if (!modulo.weyl) {
        auto best = make_key(p, modulo.renumber);
        if (modulo.sign) best = std::min(best, make_key(negate(rs, p), modulo.renumber));
        return best;
    }

    const auto order = weyl_group_order(rs.type());
    if (order > kMaxWeylOrder)
        throw CapacityError("Weyl group of " + to_string(rs.type()) + " has " + std::to_string(order) +
                            " elements, above the canonicalization limit " + std::to_string(kMaxWeylOrder));

    // Orbit of the partition under the simple reflections (and -1).
    std::vector<RootPermutation> gens;
    for (int i = 1; i <= rs.rank(); ++i) gens.push_back(reflection_permutation(rs, i));
    if (modulo.sign) {
        RootPermutation minus(static_cast<std::size_t>(rs.size()));
        for (int r = 0; r < rs.size(); ++r) minus[static_cast<std::size_t>(r)] = rs.neg(r);
        gens.push_back(std::move(minus));
    }

    std::set<PartitionKey> seen;
    std::deque<BlockPartition> queue;
    seen.insert(make_key(p, modulo.renumber));
    queue.push_back(p);
    while (!queue.empty()) {
        auto cur = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : gens) {
            auto img = permute_roots(cur, g);
            if (seen.insert(make_key(img, modulo.renumber)).second) queue.push_back(std::move(img));
        }
    }
    return *seen.begin();
}

BlockPartition canonicalize(const RootSystem& rs, const BlockPartition& p, const Equivalence& modulo) {
    return from_key(canonical_key(rs, p, modulo));
}

}  // namespace regdec

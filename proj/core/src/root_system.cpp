#include "regdec/root_system.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "regdec/errors.hpp"

namespace regdec {

namespace {

using IntMatrix = std::vector<std::vector<int>>;

// Symmetric bilinear form on the simple roots, scaled to be integral.
IntMatrix gram_matrix(RootSystemType t) {
    const int n = t.rank;
    IntMatrix g(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    auto link = [&](int i, int j, int v) {
        g[i][j] = v;
        g[j][i] = v;
    };
    switch (t.family) {
        case Family::A:
            for (int i = 0; i < n; ++i) g[i][i] = 2;
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
            break;
        case Family::B:
            for (int i = 0; i < n; ++i) g[i][i] = 2;
            g[n - 1][n - 1] = 1;
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
            break;
        case Family::C:
            for (int i = 0; i < n; ++i) g[i][i] = 2;
            g[n - 1][n - 1] = 4;
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
            link(n - 2, n - 1, -2);
            break;
        case Family::D:
            for (int i = 0; i < n; ++i) g[i][i] = 2;
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
            link(n - 3, n - 1, -1);
            break;
        case Family::E:
            for (int i = 0; i < n; ++i) g[i][i] = 2;
            for (int i = 0; i + 3 < n; ++i) link(i, i + 1, -1);
            link(n - 4, n - 2, -1);
            link(n - 2, n - 1, -1);
            break;
        case Family::F:
            g = {{4, -2, 0, 0}, {-2, 4, -2, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
            break;
        case Family::G:
            g = {{2, -3}, {-3, 6}};
            break;
    }
    return g;
}

}  // namespace

char family_letter(Family f) { return static_cast<char>(f); }

RootSystemType make_type(Family family, int rank) {
    auto reject = [&](const char* rule) {
        throw InvalidArgument(std::string("invalid rank ") + std::to_string(rank) + " for family " +
                              family_letter(family) + ": " + rule);
    };
    switch (family) {
        case Family::A:
            if (rank < 1) reject("A_n requires n >= 1");
            break;
        case Family::B:
            if (rank < 2) reject("B_n requires n >= 2");
            break;
        case Family::C:
            if (rank < 3) reject("C_n requires n >= 3 (C_2 is B_2)");
            break;
        case Family::D:
            if (rank < 4) reject("D_n requires n >= 4");
            break;
        case Family::E:
            if (rank < 6 || rank > 8) reject("E_n requires n in {6,7,8}");
            break;
        case Family::F:
            if (rank != 4) reject("F_n requires n = 4");
            break;
        case Family::G:
            if (rank != 2) reject("G_n requires n = 2");
            break;
    }
    return RootSystemType{family, rank};
}

RootSystemType make_type(char family, int rank) {
    switch (family) {
        case 'A': case 'a': return make_type(Family::A, rank);
        case 'B': case 'b': return make_type(Family::B, rank);
        case 'C': case 'c': return make_type(Family::C, rank);
        case 'D': case 'd': return make_type(Family::D, rank);
        case 'E': case 'e': return make_type(Family::E, rank);
        case 'F': case 'f': return make_type(Family::F, rank);
        case 'G': case 'g': return make_type(Family::G, rank);
        default: break;
    }
    throw InvalidArgument(std::string("unknown root system family '") + family + "'");
}

std::string to_string(RootSystemType t) {
    return std::string(1, family_letter(t.family)) + std::to_string(t.rank);
}

// ---------------------------------------------------------------------------

bool Root::is_positive() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c >= 0; });
}

int Root::height() const { return std::accumulate(coeffs_.begin(), coeffs_.end(), 0); }

Root Root::operator-() const {
    Coeffs c(coeffs_);
    for (auto& x : c) x = -x;
    return Root(std::move(c));
}

Root operator+(const Root& a, const Root& b) {
    Coeffs c(a.coeffs_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
    return Root(std::move(c));
}

std::string to_string(const Root& r) {
    std::string s = "[";
    for (int i = 0; i < r.rank(); ++i) {
        if (i) s += ",";
        s += std::to_string(r[static_cast<std::size_t>(i)]);
    }
    return s + "]";
}

RootSet::RootSet(std::initializer_list<RootIndex> members) {
    for (auto m : members) insert(m);
}

std::vector<RootIndex> RootSet::members() const {
    std::vector<RootIndex> out;
    out.reserve(size());
    for (std::size_t i = bits_._Find_first(); i < kMaxRoots; i = bits_._Find_next(i))
        out.push_back(static_cast<RootIndex>(i));
    return out;
}

// ---------------------------------------------------------------------------

CartanMatrix::CartanMatrix(std::vector<std::vector<int>> entries) : entries_(std::move(entries)) {
    const int n = rank();
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(entries_[i].size()) != n)
            throw InvalidArgument("Cartan matrix must be square");
        if (entries_[i][i] != 2) throw InvalidArgument("Cartan matrix diagonal must be 2");
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (entries_[i][j] > 0) throw InvalidArgument("Cartan matrix off-diagonal must be <= 0");
            if ((entries_[i][j] == 0) != (entries_[j][i] == 0))
                throw InvalidArgument("Cartan matrix zero pattern must be symmetric");
        }
    }
}

CartanMatrix cartan_matrix(RootSystemType t) {
    const auto g = gram_matrix(t);
    const int n = t.rank;
    std::vector<std::vector<int>> a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = 2 * g[i][j] / g[j][j];
    return CartanMatrix(std::move(a));
}

RootSystem::RootSystem(RootSystemType type) : type_(make_type(type.family, type.rank)), cartan_(cartan_matrix(type_)) {
    const int n = type_.rank;

    // Close the simple roots under the simple reflections.
    std::set<Coeffs> seen;
    std::deque<Coeffs> queue;
    for (int i = 0; i < n; ++i) {
        Coeffs c(static_cast<std::size_t>(n), 0);
        c[i] = 1;
        seen.insert(c);
        queue.push_back(std::move(c));
    }
    while (!queue.empty()) {
        Coeffs c = std::move(queue.front());
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            int pairing = 0;
            for (int j = 0; j < n; ++j) pairing += c[j] * cartan_(j, i);
            Coeffs r(c);
            r[i] -= pairing;
            if (seen.insert(r).second) queue.push_back(std::move(r));
        }
    }

    std::vector<Root> positives;
    for (const auto& c : seen) {
        Root r(c);
        if (r.is_positive()) positives.push_back(std::move(r));
    }
    std::sort(positives.begin(), positives.end(), [](const Root& a, const Root& b) {
        if (a.height() != b.height()) return a.height() < b.height();
        return a.coeffs() > b.coeffs();
    });
    if (positives.size() * 2 != seen.size())
        throw Error("root system construction produced an unbalanced root set");

    const std::size_t half = positives.size();
    roots_ = positives;
    for (const auto& r : positives) roots_.push_back(-r);

    neg_.resize(roots_.size());
    for (std::size_t i = 0; i < roots_.size(); ++i) {
        neg_[i] = static_cast<RootIndex>(i < half ? i + half : i - half);
        lookup_.emplace(roots_[i].coeffs(), static_cast<RootIndex>(i));
    }

    const std::size_t N = roots_.size();
    sum_.assign(N * N, -1);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            auto it = lookup_.find((roots_[i] + roots_[j]).coeffs());
            if (it != lookup_.end()) sum_[i * N + j] = static_cast<std::int16_t>(it->second);
        }
}

std::optional<RootIndex> RootSystem::index_of(const Coeffs& c) const {
    auto it = lookup_.find(c);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

RootIndex RootSystem::require_index(const Coeffs& c) const {
    if (static_cast<int>(c.size()) != rank())
        throw InvalidArgument("coefficient vector of length " + std::to_string(c.size()) +
                              " does not match rank " + std::to_string(rank()));
    auto i = index_of(c);
    if (!i) throw InvalidArgument(to_string(Root(c)) + " is not a root of " + to_string(type_));
    return *i;
}

RootSet RootSystem::all() const {
    RootSet s;
    for (int i = 0; i < size(); ++i) s.insert(i);
    return s;
}

RootSet RootSystem::positive() const {
    RootSet s;
    for (int i = 0; i < num_positive(); ++i) s.insert(i);
    return s;
}

RootSet RootSystem::negative() const {
    RootSet s;
    for (int i = num_positive(); i < size(); ++i) s.insert(i);
    return s;
}

bool RootSystem::valid(const RootSet& s) const { return s.is_subset_of(all()); }

RootSystem build_root_system(RootSystemType t) { return RootSystem(t); }

bool is_closed(const RootSystem& rs, const RootSet& s) {
    const auto m = s.members();
    for (std::size_t a = 0; a < m.size(); ++a)
        for (std::size_t b = a + 1; b < m.size(); ++b) {
            auto sum = rs.sum(m[a], m[b]);
            if (sum && !s.contains(*sum)) return false;
        }
    return true;
}

RootSet negate(const RootSystem& rs, const RootSet& s) {
    RootSet out;
    for (auto i : s.members()) out.insert(rs.neg(i));
    return out;
}

RootSet symmetric_part(const RootSystem& rs, const RootSet& s) { return s & negate(rs, s); }

Coeffs beta_coeffs(int rank, int i) {
    Coeffs c(static_cast<std::size_t>(rank), 0);
    for (int k = 0; k < i; ++k) c[k] = 1;
    return c;
}

std::vector<RootIndex> beta_chain_basis(const RootSystem& rs) {
    const int n = rs.rank();
    std::vector<Coeffs> basis;
    switch (rs.type().family) {
        case Family::A:
        case Family::B:
        case Family::C:
        case Family::F:
            for (int i = 1; i <= n; ++i) basis.push_back(beta_coeffs(n, i));
            break;
        case Family::D:
            for (int i = 1; i <= n - 1; ++i) basis.push_back(beta_coeffs(n, i));
            basis.push_back(beta_coeffs(n, n - 2));
            basis.back()[n - 1] = 1;
            break;
        case Family::E: {
            for (int i = 1; i <= n - 2; ++i) basis.push_back(beta_coeffs(n, i));
            Coeffs g = beta_coeffs(n, n - 3);
            g[n - 2] = 1;
            basis.push_back(g);
            g[n - 1] = 1;
            basis.push_back(g);
            break;
        }
        case Family::G:
            basis.push_back({1, 0});
            basis.push_back({0, 1});
            break;
    }
    std::vector<RootIndex> out;
    out.reserve(basis.size());
    for (const auto& c : basis) out.push_back(rs.require_index(c));
    return out;
}

}  // namespace regdec

namespace regdec {

namespace {

void require_type_a(const RootSystem& rs) {
    if (rs.type().family != Family::A)
        throw InvalidArgument("operation requires a type A root system, got " + to_string(rs.type()));
}

}  // namespace

BetaDifference beta_difference(const RootSystem& rs, RootIndex r) {
    require_type_a(rs);
    const auto& c = rs.root(r).coeffs();
    int first = -1;
    int last = -1;
    for (int k = 0; k < rs.rank(); ++k)
        if (c[static_cast<std::size_t>(k)] != 0) {
            if (first < 0) first = k;
            last = k;
        }
    // alpha_{first+1} + ... + alpha_{last+1} = beta_{last+1} - beta_first
    if (rs.is_positive(r)) return {first, last + 1};
    return {last + 1, first};
}

RootIndex beta_difference_index(const RootSystem& rs, BetaDifference d) {
    require_type_a(rs);
    const int n = rs.rank();
    if (d.i < 0 || d.j < 0 || d.i > n || d.j > n || d.i == d.j)
        throw InvalidArgument("beta difference indices must satisfy 0 <= i != j <= n");
    Coeffs c = beta_coeffs(n, d.j);
    const Coeffs b = beta_coeffs(n, d.i);
    for (int k = 0; k < n; ++k) c[static_cast<std::size_t>(k)] -= b[static_cast<std::size_t>(k)];
    return rs.require_index(c);
}

}  // namespace regdec

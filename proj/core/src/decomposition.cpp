#include "regdec/decomposition.hpp"

#include <algorithm>
#include <numeric>

#include "regdec/errors.hpp"

namespace regdec {

namespace {

struct Element {
    std::string label;
    RatMatrix value;
};

void require_type_a(const RootSystem& rs, const char* what) {
    if (rs.type().family != Family::A)
        throw InvalidArgument(std::string(what) + " is defined for sl(n+1), i.e. type A; got " + to_string(rs.type()));
}

std::string root_label(const RootSystem& rs, RootIndex r) {
    if (rs.type().family == Family::A) {
        const auto d = beta_difference(rs, r);
        return "E_{" + std::to_string(d.i + 1) + "," + std::to_string(d.j + 1) + "}";
    }
    return "E" + to_string(rs.root(r));
}

CartanVector unit_vector(int n, int i) {
    CartanVector c(static_cast<std::size_t>(n));
    if (i > 0) c[static_cast<std::size_t>(i - 1)] = 1;
    return c;
}

CartanVector operator-(CartanVector a, const CartanVector& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
    return a;
}

/// Roots -beta_i + beta_j, j != i, i.e. row i+1 of sl(n+1).
RootSet row_roots(const RootSystem& rs, int i) {
    RootSet s;
    for (int j = 0; j <= rs.rank(); ++j)
        if (j != i) s.insert(beta_difference_index(rs, {i, j}));
    return s;
}

RootSet col_roots(const RootSystem& rs, int j) {
    RootSet s;
    for (int i = 0; i <= rs.rank(); ++i)
        if (i != j) s.insert(beta_difference_index(rs, {i, j}));
    return s;
}

/// Keeps a maximal independent subset, dropping zero and dependent vectors.
std::vector<CartanVector> independent(const std::vector<CartanVector>& vs, int n) {
    RationalSpan span(static_cast<std::size_t>(n));
    std::vector<CartanVector> out;
    for (const auto& v : vs)
        if (span.add(v)) out.push_back(v);
    return out;
}

std::optional<VerificationWitness> check_direct_sum(const RootSystem& rs, const RegularDecomposition& d) {
    auto fail = [](std::string reason) {
        VerificationWitness w;
        w.reason = std::move(reason);
        return std::optional<VerificationWitness>(std::move(w));
    };
    if (!(d.type == rs.type())) return fail("decomposition type " + to_string(d.type) + " does not match " + to_string(rs.type()));
    if (d.summands.size() < 2) return fail("a decomposition needs at least two summands");
    const int n = rs.rank();
    RootSet seen;
    RationalSpan cartan(static_cast<std::size_t>(n));
    for (std::size_t s = 0; s < d.summands.size(); ++s) {
        const auto& sub = d.summands[s];
        const std::string name = "summand " + std::to_string(s + 1);
        if (!rs.valid(sub.root_part)) return fail(name + " references roots outside the root system");
        if (seen.intersects(sub.root_part)) return fail(name + " shares a root space with an earlier summand");
        seen |= sub.root_part;
        if (sub.root_part.empty() && sub.cartan_basis.empty()) return fail(name + " is zero");
        for (const auto& c : sub.cartan_basis) {
            if (static_cast<int>(c.size()) != n) return fail(name + " has a Cartan vector of the wrong length");
            if (!cartan.add(c)) return fail(name + " has a Cartan vector dependent on the others");
        }
    }
    if (seen != rs.all()) return fail("root parts do not cover every root");
    if (static_cast<int>(cartan.rank()) != n)
        return fail("Cartan parts span " + std::to_string(cartan.rank()) + " of " + std::to_string(n) + " dimensions");
    return std::nullopt;
}

std::vector<Element> matrix_elements(const RootSystem& rs, const SlBasis& sl, const RegularSubalgebra& s) {
    std::vector<Element> out;
    for (auto r : s.root_part.members()) out.push_back({root_label(rs, r), sl.root_vector(rs, r)});
    for (const auto& c : s.cartan_basis) {
        auto m = sl.cartan_element(c);
        out.push_back({sl.describe(m), std::move(m)});
    }
    return out;
}

std::optional<VerificationWitness> matrix_closure(const SlBasis& sl, const std::vector<Element>& elems) {
    const int d = sl.matrix_dim();
    RationalSpan span(static_cast<std::size_t>(d * d));
    for (const auto& e : elems) span.add(flatten(e.value));
    for (std::size_t a = 0; a < elems.size(); ++a)
        for (std::size_t b = a + 1; b < elems.size(); ++b) {
            if (elems[a].value.is_diagonal() && elems[b].value.is_diagonal()) continue;
            auto br = bracket(elems[a].value, elems[b].value);
            if (span.contains(flatten(br))) continue;
            VerificationWitness w;
            w.left = elems[a].label;
            w.right = elems[b].label;
            w.bracket = sl.describe(br);
            w.escapes_span = true;
            w.reason = "bracket [" + w.left + ", " + w.right + "] = " + w.bracket + " escapes the span";
            return w;
        }
    return std::nullopt;
}

std::optional<VerificationWitness> structural_closure(const RootSystem& rs, const RootSet& roots,
                                                      const std::vector<CartanVector>& cartan) {
    RationalSpan span(static_cast<std::size_t>(rs.rank()));
    for (const auto& c : cartan) span.add(c);
    const auto m = roots.members();
    for (std::size_t a = 0; a < m.size(); ++a)
        for (std::size_t b = a + 1; b < m.size(); ++b) {
            const RootIndex x = m[a];
            const RootIndex y = m[b];
            VerificationWitness w;
            w.left = root_label(rs, x);
            w.right = root_label(rs, y);
            w.escapes_span = true;
            if (auto z = rs.sum(x, y); z && !roots.contains(*z)) {
                w.bracket = root_label(rs, *z);
            } else if (y == rs.neg(x) && !span.contains(cartan_of_root(rs, x))) {
                w.bracket = describe_cartan(rs, cartan_of_root(rs, x));
            } else {
                continue;
            }
            w.reason = "bracket [" + w.left + ", " + w.right + "] lies in " + w.bracket + ", outside the span";
            return w;
        }
    return std::nullopt;
}

template <typename Closure>
VerificationReport verify_with(const RootSystem& rs, const RegularDecomposition& d, Closure&& closure) {
    VerificationReport report;
    report.type = decomposition_type(d);
    if (auto w = check_direct_sum(rs, d)) {
        report.witness = std::move(w);
        return report;
    }
    const int m = d.num_summands();
    for (int i = 0; i < m; ++i)
        if (auto w = closure(d.summands[static_cast<std::size_t>(i)])) {
            w->first = i;
            w->second = i;
            report.witness = std::move(w);
            return report;
        }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            RegularSubalgebra both = d.summands[static_cast<std::size_t>(i)];
            const auto& other = d.summands[static_cast<std::size_t>(j)];
            both.root_part |= other.root_part;
            both.cartan_basis.insert(both.cartan_basis.end(), other.cartan_basis.begin(), other.cartan_basis.end());
            if (auto w = closure(both)) {
                w->first = i;
                w->second = j;
                report.witness = std::move(w);
                return report;
            }
        }
    report.valid = true;
    return report;
}

}  // namespace

DecompositionType decomposition_type(const RegularDecomposition& d) {
    DecompositionType t;
    t.m = d.num_summands();
    for (const auto& s : d.summands)
        if (!s.cartan_basis.empty()) ++t.k;
    return t;
}

bool is_subalgebra(const RootSystem& rs, const RegularSubalgebra& s) {
    require_type_a(rs, "matrix subalgebra check");
    SlBasis sl(rs.rank());
    return !matrix_closure(sl, matrix_elements(rs, sl, s)).has_value();
}

VerificationReport is_regular_decomposition(const RootSystem& rs, const RegularDecomposition& d) {
    if (rs.type().family != Family::A) return verify_structural(rs, d);
    SlBasis sl(rs.rank());
    return verify_with(rs, d, [&](const RegularSubalgebra& s) { return matrix_closure(sl, matrix_elements(rs, sl, s)); });
}

VerificationReport verify_structural(const RootSystem& rs, const RegularDecomposition& d) {
    return verify_with(rs, d, [&](const RegularSubalgebra& s) { return structural_closure(rs, s.root_part, s.cartan_basis); });
}

BlockPartition root_partition(const RegularDecomposition& d) {
    BlockPartition p;
    for (const auto& s : d.summands) p.blocks.push_back(s.root_part);
    return p;
}

RegularDecomposition extend_partition_to_decomposition(const RootSystem& rs, const BlockPartition& p,
                                                       CartanReference ref) {
    require_type_a(rs, "extension of an m-regular partition");
    validate_partition(rs, p);
    if (p.num_blocks() < 3)
        throw InvalidArgument("extension needs m >= 3 blocks; use extend_two_block for two blocks");
    const int n = rs.rank();
    const auto owner = block_assignment(rs, p);

    // Block holding every root of `line`, or -1 when it is split.
    auto owner_of = [&](const RootSet& line) {
        int b = -1;
        for (auto r : line.members()) {
            const int o = owner[static_cast<std::size_t>(r)];
            if (b >= 0 && o != b) return -1;
            b = o;
        }
        return b;
    };
    std::vector<int> line_owner(static_cast<std::size_t>(n) + 1);
    bool rows = true;
    for (int i = 0; i <= n && rows; ++i) rows = (line_owner[static_cast<std::size_t>(i)] = owner_of(row_roots(rs, i))) >= 0;
    if (!rows) {
        for (int j = 0; j <= n; ++j)
            if ((line_owner[static_cast<std::size_t>(j)] = owner_of(col_roots(rs, j))) < 0)
                throw InvalidArgument(
                    "partition is not a union of whole rows or whole columns of sl(n+1), so it is not an "
                    "(m >= 3)-regular partition");
    }

    const int reference = ref == CartanReference::first_row ? 0 : n;
    RegularDecomposition d;
    d.type = rs.type();
    d.summands.resize(p.blocks.size());
    for (std::size_t b = 0; b < p.blocks.size(); ++b) d.summands[b].root_part = p.blocks[b];
    for (int i = 0; i <= n; ++i) {
        if (i == reference) continue;
        // H_{beta_i} for the first-row reference, H_{beta_n - beta_i} for the last.
        CartanVector h = ref == CartanReference::first_row ? unit_vector(n, i) : unit_vector(n, n) - unit_vector(n, i);
        d.summands[static_cast<std::size_t>(line_owner[static_cast<std::size_t>(i)])].cartan_basis.push_back(std::move(h));
    }
    return d;
}

RegularDecomposition extend_two_block(const RootSystem& rs, const RootSet& s1, const RootSet& s2,
                                      const std::optional<TwoBlockCartan>& split) {
    if (s1.empty() || s2.empty()) throw InvalidArgument("both blocks of a two-block partition must be nonempty");
    if (s1.intersects(s2) || (s1 | s2) != rs.all() || !rs.valid(s1) || !rs.valid(s2))
        throw InvalidArgument("the two blocks must partition the root system");
    if (!is_closed(rs, s1)) throw InvalidArgument("first block is not closed");
    if (!is_closed(rs, s2)) throw InvalidArgument("second block is not closed");

    const int n = rs.rank();
    RationalSpan total(static_cast<std::size_t>(n));
    RegularDecomposition d;
    d.type = rs.type();
    for (const RootSet* s : {&s1, &s2}) {
        RegularSubalgebra sub;
        sub.root_part = *s;
        // The algebra generated by E_a, a in the symmetric part, adds H_a.
        RationalSpan local(static_cast<std::size_t>(n));
        for (auto r : symmetric_part(rs, *s).members()) {
            auto h = cartan_of_root(rs, r);
            if (local.add(h)) {
                if (!total.add(h)) throw Error("symmetric parts of the two blocks share Cartan directions");
                sub.cartan_basis.push_back(std::move(h));
            }
        }
        d.summands.push_back(std::move(sub));
    }

    if (split) {
        for (int b = 0; b < 2; ++b)
            for (const auto& v : b == 0 ? split->first : split->second) {
                if (static_cast<int>(v.size()) != n)
                    throw InvalidArgument("Cartan split vector has length " + std::to_string(v.size()));
                if (!total.add(v)) throw InvalidArgument("Cartan split vectors are dependent on the forced Cartan part");
                d.summands[static_cast<std::size_t>(b)].cartan_basis.push_back(v);
            }
        if (static_cast<int>(total.rank()) != n)
            throw InvalidArgument("Cartan split leaves " + std::to_string(n - static_cast<int>(total.rank())) +
                                  " Cartan directions unassigned");
    } else {
        for (int i = 1; i <= n; ++i) {
            auto e = unit_vector(n, i);
            if (total.add(e)) d.summands[0].cartan_basis.push_back(std::move(e));
        }
    }
    return d;
}

namespace {

void require_family_size(const RootSystem& rs, const IntPartition& lambda, const char* what) {
    require_type_a(rs, what);
    if (lambda.total() != rs.rank())
        throw InvalidArgument(std::string(what) + ": lambda " + to_string(lambda) + " must be a partition of n = " +
                              std::to_string(rs.rank()));
    if (lambda.num_parts() < 2)
        throw InvalidArgument(std::string(what) + ": lambda must have k >= 2 parts (k = 1 gives type (2,1))");
}

}  // namespace

RegularDecomposition construct_k1k(const RootSystem& rs, const IntPartition& lambda) {
    require_family_size(rs, lambda, "construct_k1k");
    const int n = rs.rank();
    RegularDecomposition d;
    d.type = rs.type();
    d.summands.push_back({row_roots(rs, 0), {}});
    int i = 1;
    for (int part : lambda.parts()) {
        RegularSubalgebra s;
        for (int end = i + part; i < end; ++i) {
            s.root_part |= row_roots(rs, i);
            s.cartan_basis.push_back(unit_vector(n, i));
        }
        d.summands.push_back(std::move(s));
    }
    return d;
}

RegularDecomposition construct_k1k_beta_form(const RootSystem& rs, const IntPartition& lambda) {
    require_family_size(rs, lambda, "construct_k1k_beta_form");
    const int n = rs.rank();
    RegularDecomposition d;
    d.type = rs.type();
    int i = 0;
    for (int part : lambda.parts()) {
        RegularSubalgebra s;
        for (int end = i + part; i < end; ++i) {
            s.root_part |= row_roots(rs, i);
            s.cartan_basis.push_back(unit_vector(n, n) - unit_vector(n, i));
        }
        d.summands.push_back(std::move(s));
    }
    d.summands.push_back({row_roots(rs, n), {}});
    return d;
}

void check_kk_admissible(const IntPartition& lambda, const CartanVector& x) {
    const int n = lambda.total();
    if (static_cast<int>(x.size()) != n)
        throw InvalidArgument("X has length " + std::to_string(x.size()) + ", expected n = " + std::to_string(n));
    const int l1 = lambda[0];
    bool in_first_span = true;
    for (int i = l1; i < n; ++i) in_first_span = in_first_span && x[static_cast<std::size_t>(i)] == 0;
    if (in_first_span) return;

    int nonzero = -1;
    for (int i = 0; i < n; ++i)
        if (x[static_cast<std::size_t>(i)] != 0) {
            if (nonzero >= 0 || x[static_cast<std::size_t>(i)] != 1)
                throw InvalidArgument("X is neither in span{H_1..H_" + std::to_string(l1) +
                                      "} nor a single H_p");
            nonzero = i;
        }
    const int p = nonzero + 1;
    int start = l1;
    for (int q = 1; q < lambda.num_parts(); ++q) {
        const int part = lambda[static_cast<std::size_t>(q)];
        if (p > start && p <= start + part) {
            if (part > 1) return;
            throw InvalidArgument("X = H_" + std::to_string(p) + " lies in part " + std::to_string(q + 1) +
                                  " with lambda_" + std::to_string(q + 1) + " = 1; H_p requires lambda_q > 1");
        }
        start += part;
    }
    throw InvalidArgument("X = H_" + std::to_string(p) + " is not inside any part q >= 2");
}

RegularDecomposition construct_kk(const RootSystem& rs, const IntPartition& lambda, const CartanVector& x) {
    require_family_size(rs, lambda, "construct_kk");
    check_kk_admissible(lambda, x);
    const int n = rs.rank();
    RegularDecomposition d;
    d.type = rs.type();

    RegularSubalgebra first;
    std::vector<CartanVector> first_cartan;
    for (int i = 0; i <= lambda[0]; ++i) {
        first.root_part |= row_roots(rs, i);
        if (i > 0) first_cartan.push_back(unit_vector(n, i));
    }
    first_cartan.push_back(x);
    first.cartan_basis = independent(first_cartan, n);
    d.summands.push_back(std::move(first));

    int i = lambda[0] + 1;
    for (int q = 1; q < lambda.num_parts(); ++q) {
        RegularSubalgebra s;
        std::vector<CartanVector> cartan;
        for (int end = i + lambda[static_cast<std::size_t>(q)]; i < end; ++i) {
            s.root_part |= row_roots(rs, i);
            cartan.push_back(unit_vector(n, i) - x);
        }
        s.cartan_basis = independent(cartan, n);
        d.summands.push_back(std::move(s));
    }
    return d;
}

RegularDecomposition move_root_vector(const RegularDecomposition& d, RootIndex r, int to) {
    if (to < 0 || to >= d.num_summands()) throw InvalidArgument("target summand out of range");
    RegularDecomposition out = d;
    bool found = false;
    for (auto& s : out.summands)
        if (s.root_part.contains(r)) {
            s.root_part.erase(r);
            found = true;
        }
    if (!found) throw InvalidArgument("root is not in any summand");
    if (d.summands[static_cast<std::size_t>(to)].root_part.contains(r))
        throw InvalidArgument("root already lies in the target summand");
    out.summands[static_cast<std::size_t>(to)].root_part.insert(r);
    return out;
}

namespace {

struct SummandKey {
    std::vector<RootIndex> roots;
    std::vector<std::vector<Rational>> cartan;

    friend bool operator<(const SummandKey& a, const SummandKey& b) {
        if (a.roots != b.roots) return a.roots < b.roots;
        return a.cartan < b.cartan;
    }
    friend bool operator==(const SummandKey&, const SummandKey&) = default;
};

std::vector<SummandKey> decomposition_key(const RootSystem& rs, const RegularDecomposition& d) {
    std::vector<SummandKey> keys;
    for (const auto& s : d.summands) {
        RationalSpan span(static_cast<std::size_t>(rs.rank()));
        for (const auto& c : s.cartan_basis) span.add(c);
        keys.push_back({s.root_part.members(), span.reduced_basis()});
    }
    std::sort(keys.begin(), keys.end());
    return keys;
}

}  // namespace

bool weyl_equivalent(const RootSystem& rs, const RegularDecomposition& a, const RegularDecomposition& b,
                     bool allow_sign) {
    require_type_a(rs, "Weyl equivalence of decompositions");
    if (a.num_summands() != b.num_summands()) return false;
    const int n = rs.rank();
    if (n > 7) throw CapacityError("Weyl equivalence check enumerates (n+1)! permutations; n <= 7 supported");
    const SlBasis sl(n);
    const auto target = decomposition_key(rs, b);

    std::vector<int> sigma(static_cast<std::size_t>(n) + 1);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        for (int sign = 0; sign < (allow_sign ? 2 : 1); ++sign) {
            RegularDecomposition img;
            img.type = a.type;
            for (const auto& s : a.summands) {
                RegularSubalgebra t;
                for (auto r : s.root_part.members()) {
                    auto dlt = beta_difference(rs, sign ? rs.neg(r) : r);
                    t.root_part.insert(beta_difference_index(
                        rs, {sigma[static_cast<std::size_t>(dlt.i)], sigma[static_cast<std::size_t>(dlt.j)]}));
                }
                for (const auto& c : s.cartan_basis) {
                    const auto m = sl.cartan_element(c);
                    RatMatrix pm(n + 1);
                    for (int k = 0; k <= n; ++k) pm(sigma[static_cast<std::size_t>(k)], sigma[static_cast<std::size_t>(k)]) = m(k, k);
                    t.cartan_basis.push_back(sl.cartan_coords(pm));
                }
                img.summands.push_back(std::move(t));
            }
            if (decomposition_key(rs, img) == target) return true;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return false;
}

}  // namespace regdec

#include "regdec/partition_graph.hpp"

#include <set>

#include "regdec/errors.hpp"

namespace regdec {

void validate_graph(const PartitionGraph& g, int rank) {
    if (g.num_vertices < 1) throw InvalidArgument("graph needs at least one vertex");
    std::vector<int> seen(static_cast<std::size_t>(rank) + 1, 0);
    auto check_vertex = [&](int v) {
        if (v < 1 || v > g.num_vertices)
            throw InvalidArgument("graph vertex " + std::to_string(v) + " outside [1.." +
                                  std::to_string(g.num_vertices) + "]");
    };
    auto check_label = [&](int l) {
        if (l < 1 || l > rank)
            throw InvalidArgument("graph label " + std::to_string(l) + " outside [1.." + std::to_string(rank) + "]");
        if (seen[static_cast<std::size_t>(l)]++)
            throw InvalidArgument("graph label " + std::to_string(l) + " used more than once");
    };
    for (const auto& l : g.loops) {
        check_vertex(l.vertex);
        check_label(l.label);
    }
    for (const auto& e : g.edges) {
        check_vertex(e.plus);
        check_vertex(e.minus);
        if (e.plus == e.minus) throw InvalidArgument("graph edge joins vertex " + std::to_string(e.plus) + " to itself");
        check_label(e.label);
    }
    for (int l = 1; l <= rank; ++l)
        if (!seen[static_cast<std::size_t>(l)])
            throw InvalidArgument("graph label " + std::to_string(l) + " is missing");
}

PartitionGraph build_partition_graph(const RootSystem& rs, const BlockPartition& p,
                                     const std::vector<RootIndex>& basis) {
    validate_partition(rs, p);
    const auto owner = block_assignment(rs, p);
    PartitionGraph g;
    g.num_vertices = p.num_blocks();
    for (std::size_t l = 0; l < basis.size(); ++l) {
        const int plus = owner[static_cast<std::size_t>(basis[l])] + 1;
        const int minus = owner[static_cast<std::size_t>(rs.neg(basis[l]))] + 1;
        const int label = static_cast<int>(l) + 1;
        if (plus == minus) g.loops.push_back({plus, label});
        else g.edges.push_back({plus, minus, label});
    }
    return g;
}

GraphReport check_graph_properties(const PartitionGraph& g) {
    GraphReport r;
    const int m = g.num_vertices;

    std::set<int> loop_vertices;
    for (const auto& l : g.loops) loop_vertices.insert(l.vertex);
    r.a1_single_loop_vertex = loop_vertices.size() <= 1;

    std::vector<bool> touched(static_cast<std::size_t>(m) + 1, false);
    for (int v : loop_vertices) touched[static_cast<std::size_t>(v)] = true;
    for (const auto& e : g.edges) touched[static_cast<std::size_t>(e.plus)] = touched[static_cast<std::size_t>(e.minus)] = true;
    r.a2_no_isolated_vertex = true;
    for (int v = 1; v <= m; ++v) r.a2_no_isolated_vertex = r.a2_no_isolated_vertex && touched[static_cast<std::size_t>(v)];

    // +1 / -1 once a sign is seen at a vertex, 0 before.
    std::vector<int> sign_at(static_cast<std::size_t>(m) + 1, 0);
    r.a3_consistent_signs = true;
    auto note = [&](int v, int s) {
        auto& cur = sign_at[static_cast<std::size_t>(v)];
        if (cur != 0 && cur != s) r.a3_consistent_signs = false;
        cur = s;
    };
    for (const auto& e : g.edges) {
        note(e.plus, +1);
        note(e.minus, -1);
    }

    auto incident = [](const GraphEdge& e, int v) { return e.plus == v || e.minus == v; };
    r.a4_edges_intersect = true;
    for (std::size_t a = 0; a < g.edges.size(); ++a)
        for (std::size_t b = a + 1; b < g.edges.size(); ++b) {
            const auto& e = g.edges[a];
            if (!incident(g.edges[b], e.plus) && !incident(g.edges[b], e.minus)) r.a4_edges_intersect = false;
        }

    r.a5_loops_at_hub = true;
    for (int v : loop_vertices)
        for (const auto& e : g.edges)
            if (!incident(e, v)) r.a5_loops_at_hub = false;

    for (int h = 1; h <= m && !r.star_shaped; ++h) {
        bool ok = true;
        for (const auto& l : g.loops) ok = ok && l.vertex == h;
        bool all_plus = true;
        bool all_minus = true;
        for (const auto& e : g.edges) {
            ok = ok && incident(e, h);
            all_plus = all_plus && e.plus == h;
            all_minus = all_minus && e.minus == h;
        }
        ok = ok && (all_plus || all_minus);
        for (int v = 1; v <= m && ok; ++v) {
            if (v == h) continue;
            bool has_edge = false;
            for (const auto& e : g.edges) has_edge = has_edge || incident(e, v);
            ok = has_edge;
        }
        if (ok) {
            r.star_shaped = true;
            r.hub = h;
            r.hub_carries_plus = all_plus;
        }
    }
    return r;
}

BlockPartition reconstruct_from_graph(const RootSystem& rs, const PartitionGraph& g) {
    if (rs.type().family != Family::A)
        throw InvalidArgument("graph reconstruction is defined for type A only, got " + to_string(rs.type()));
    const int n = rs.rank();
    validate_graph(g, n);
    if (g.num_vertices < 3)
        throw InvalidArgument("graph reconstruction needs m >= 3 vertices, got " + std::to_string(g.num_vertices));
    const auto report = check_graph_properties(g);
    if (!report.all_pass() || !report.star_shaped)
        throw InvalidArgument("graph violates the structural properties A1-A5 of a regular partition graph");

    const int hub = *report.hub;
    // Blocks (1-based vertices) holding +beta_l and -beta_l; index 0 unused.
    std::vector<int> plus_at(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> minus_at(static_cast<std::size_t>(n) + 1, 0);
    std::vector<bool> is_loop(static_cast<std::size_t>(n) + 1, false);
    for (const auto& l : g.loops) {
        plus_at[static_cast<std::size_t>(l.label)] = minus_at[static_cast<std::size_t>(l.label)] = l.vertex;
        is_loop[static_cast<std::size_t>(l.label)] = true;
    }
    for (const auto& e : g.edges) {
        plus_at[static_cast<std::size_t>(e.label)] = e.plus;
        minus_at[static_cast<std::size_t>(e.label)] = e.minus;
    }

    // With the hub holding the '+' ends, the root beta_j - beta_i belongs to
    // the block of -beta_i: a loop beta_i puts it at the hub, otherwise the
    // closure of the pair unions forces it to the '-' end of edge beta_i.
    // A hub holding the '-' ends is the mirror image: use the block of beta_j.
    auto place = [&](BetaDifference d) -> int {
        if (d.i == 0) return plus_at[static_cast<std::size_t>(d.j)];
        if (d.j == 0) return minus_at[static_cast<std::size_t>(d.i)];
        if (report.hub_carries_plus) {
            if (is_loop[static_cast<std::size_t>(d.i)]) return hub;
            return minus_at[static_cast<std::size_t>(d.i)];
        }
        if (is_loop[static_cast<std::size_t>(d.j)]) return hub;
        return plus_at[static_cast<std::size_t>(d.j)];
    };

    BlockPartition p;
    p.blocks.resize(static_cast<std::size_t>(g.num_vertices));
    for (RootIndex r = 0; r < rs.size(); ++r)
        p.blocks[static_cast<std::size_t>(place(beta_difference(rs, r)) - 1)].insert(r);
    validate_partition(rs, p);
    return p;
}

}  // namespace regdec

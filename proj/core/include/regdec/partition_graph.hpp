#pragma once

#include <optional>
#include <vector>

#include "regdec/partition.hpp"
#include "regdec/root_system.hpp"

namespace regdec {

/// Loop at `vertex`: both +beta_label and -beta_label sit in that block.
struct GraphLoop {
    int vertex = 0;
    int label = 0;
    friend bool operator==(const GraphLoop&, const GraphLoop&) = default;
};

/// +beta_label lives in block `plus`, -beta_label in block `minus`.
struct GraphEdge {
    int plus = 0;
    int minus = 0;
    int label = 0;
    friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// Labeled multigraph of a partition relative to an integral basis.
/// Vertices and labels are 1-based.
struct PartitionGraph {
    int num_vertices = 0;
    std::vector<GraphLoop> loops;
    std::vector<GraphEdge> edges;

    friend bool operator==(const PartitionGraph&, const PartitionGraph&) = default;
};

/// Throws unless every label 1..rank occurs exactly once and vertices are in range.
void validate_graph(const PartitionGraph& g, int rank);

PartitionGraph build_partition_graph(const RootSystem& rs, const BlockPartition& p,
                                     const std::vector<RootIndex>& basis);

struct GraphReport {
    bool a1_single_loop_vertex = false;  ///< at most one vertex carries loops
    bool a2_no_isolated_vertex = false;  ///< every vertex has a loop or an edge
    bool a3_consistent_signs = false;    ///< edges meeting at a vertex agree in sign there
    bool a4_edges_intersect = false;     ///< any two edges share a vertex
    bool a5_loops_at_hub = false;        ///< loops only at a vertex common to all edges
    bool star_shaped = false;
    std::optional<int> hub;              ///< 1-based hub vertex when star_shaped
    bool hub_carries_plus = true;        ///< sign of the edge ends at the hub

    bool all_pass() const {
        return a1_single_loop_vertex && a2_no_isolated_vertex && a3_consistent_signs && a4_edges_intersect &&
               a5_loops_at_hub;
    }
};

GraphReport check_graph_properties(const PartitionGraph& g);

/// Unique type A partition (m >= 3) with graph `g` relative to the beta-chain.
BlockPartition reconstruct_from_graph(const RootSystem& rs, const PartitionGraph& g);

}  // namespace regdec

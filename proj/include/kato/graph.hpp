#pragma once

#include "kato/rational.hpp"
#include "kato/sequence.hpp"

#include <string>
#include <utility>
#include <vector>

namespace kato {

/// Dual graph of the rational curves: one node per entry of the expanded
/// sequence, one undirected edge per entry (self-loops allowed).
struct DualGraph {
    int node_count = 0;
    std::vector<int> self_intersections;        // D_i^2 = -entry
    std::vector<std::pair<int, int>> edges;     // normalized (min, max), b2 of them
    std::vector<int> successor;                 // i -> (i + entry_i - 1) mod b2
    std::vector<int> degree;                    // loops count twice
    std::vector<bool> on_cycle;
    std::vector<bool> black;                    // entry >= 3
    std::vector<bool> tip;                      // tree node of degree 1
    std::vector<bool> root;                     // cycle node of degree 3
    bool has_self_loop = false;

    /// Neighbor lists with edge multiplicity; loop endpoints appear twice.
    std::vector<std::vector<int>> adjacency;
};

DualGraph build_dual_graph(const DlousskySequence& seq);

struct RoleReport {
    std::vector<int> cycle_nodes;  // ascending
    struct Tree {
        int root;                  // the cycle node the tree attaches to
        std::vector<int> nodes;    // ascending, excludes the root
    };
    std::vector<Tree> trees;
    std::vector<int> tips;
    std::vector<int> roots;
    int black_on_cycle = 0;
    int black_on_tree = 0;
    int white_count = 0;
};

/// Splits the graph into its cycle(s) and attached trees and counts roles.
/// Throws on a structurally inconsistent graph (wrong edge count).
RoleReport decompose(const DualGraph& graph);

/// Symmetric b x b matrix: diagonal D_i^2, off-diagonal edge multiplicities.
/// Throws SelfLoopUnsupported when the graph carries a loop.
IntMatrix intersection_matrix(const DualGraph& graph);

/// Determinant of the principal submatrix on the nodes of the unique tree.
/// Requires a graph with exactly one tree; -det equals r + s.
Int tree_determinant(const DualGraph& graph);

/// Graphviz rendering; black nodes filled and labeled with -D_i^2.
std::string to_dot(const DualGraph& graph);

/// Cycle predecessor of `node` (the cycle node whose functional edge enters
/// it); -1 when none. Used to locate R_1 next to the root.
int cycle_predecessor(const DualGraph& graph, int node);

/// Display aliases (A_i / C_i / R_i) for loop-free simple graphs; empty
/// strings otherwise.
std::vector<std::string> display_aliases(const DualGraph& graph, const DlousskySequence& seq);

}  // namespace kato

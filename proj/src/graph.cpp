#include "kato/graph.hpp"

#include "kato/errors.hpp"
#include "kato/linalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace kato {

DualGraph build_dual_graph(const DlousskySequence& seq) {
    const int b = seq.b2();
    DualGraph g;
    g.node_count = b;
    g.self_intersections.resize(b);
    g.successor.resize(b);
    g.degree.assign(b, 0);
    g.black.resize(b);
    g.adjacency.assign(b, {});

    for (int i = 0; i < b; ++i) {
        const int a = seq.entries()[i];
        g.self_intersections[i] = -a;
        g.black[i] = a >= 3;
        const int j = (i + a - 1) % b;
        g.successor[i] = j;
        g.edges.emplace_back(std::min(i, j), std::max(i, j));
        if (i == j) {
            g.has_self_loop = true;
            g.degree[i] += 2;
            g.adjacency[i].push_back(i);
            g.adjacency[i].push_back(i);
        } else {
            ++g.degree[i];
            ++g.degree[j];
            g.adjacency[i].push_back(j);
            g.adjacency[j].push_back(i);
        }
    }

    // nodes on a cycle of the functional graph: peel in-degree-0 nodes
    std::vector<int> indeg(b, 0);
    for (int i = 0; i < b; ++i) ++indeg[g.successor[i]];
    std::vector<int> stack;
    for (int i = 0; i < b; ++i)
        if (indeg[i] == 0) stack.push_back(i);
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        const int w = g.successor[v];
        if (--indeg[w] == 0) stack.push_back(w);
    }
    g.on_cycle.resize(b);
    g.tip.resize(b);
    g.root.resize(b);
    for (int i = 0; i < b; ++i) {
        g.on_cycle[i] = indeg[i] > 0;
        g.tip[i] = !g.on_cycle[i] && g.degree[i] == 1;
        g.root[i] = g.on_cycle[i] && g.degree[i] == 3;
    }
    return g;
}

RoleReport decompose(const DualGraph& g) {
    if (static_cast<int>(g.edges.size()) != g.node_count)
        throw Error("malformed dual graph: edge count " + std::to_string(g.edges.size()) +
                    " != node count " + std::to_string(g.node_count));

    RoleReport r;
    std::map<int, std::vector<int>> trees;  // attachment node -> tree nodes
    for (int i = 0; i < g.node_count; ++i) {
        if (g.on_cycle[i]) {
            r.cycle_nodes.push_back(i);
            if (g.black[i]) ++r.black_on_cycle;
        } else {
            int v = i;
            while (!g.on_cycle[v]) v = g.successor[v];
            trees[v].push_back(i);
            if (g.black[i]) ++r.black_on_tree;
        }
        if (g.tip[i]) r.tips.push_back(i);
        if (g.root[i]) r.roots.push_back(i);
        if (!g.black[i]) ++r.white_count;
    }
    for (auto& [root, nodes] : trees) r.trees.push_back({root, std::move(nodes)});
    return r;
}

IntMatrix intersection_matrix(const DualGraph& g) {
    const int b = g.node_count;
    IntMatrix m = IntMatrix::Zero(b, b);
    for (int i = 0; i < b; ++i) m(i, i) = g.self_intersections[i];
    for (const auto& [a, c] : g.edges) {
        if (a == c)
            throw SelfLoopUnsupported(
                "intersection matrix undefined for a nodal curve (self-loop); "
                "use the double-cover convention");
        m(a, c) += 1;
        m(c, a) += 1;
    }
    return m;
}

Int tree_determinant(const DualGraph& g) {
    const RoleReport roles = decompose(g);
    if (roles.trees.size() != 1)
        throw NotSimple("tree determinant requires exactly one tree, found " +
                        std::to_string(roles.trees.size()));
    const std::vector<int>& nodes = roles.trees.front().nodes;
    const int n = static_cast<int>(nodes.size());
    IntMatrix m = IntMatrix::Zero(n, n);
    std::map<int, int> pos;
    for (int i = 0; i < n; ++i) {
        pos[nodes[i]] = i;
        m(i, i) = g.self_intersections[nodes[i]];
    }
    for (const auto& [a, c] : g.edges) {
        auto ia = pos.find(a), ic = pos.find(c);
        if (ia == pos.end() || ic == pos.end() || a == c) continue;
        m(ia->second, ic->second) += 1;
        m(ic->second, ia->second) += 1;
    }
    // the tree matrix is negative definite, so the raw determinant carries the
    // sign (-1)^n; normalize so that -tree_determinant = r + s for every tree
    const Int d = determinant_exact(std::move(m));
    return d < 0 ? d : -d;
}

std::string to_dot(const DualGraph& g) {
    std::ostringstream out;
    out << "graph dual {\n";
    out << "  node [shape=circle];\n";
    for (int i = 0; i < g.node_count; ++i) {
        out << "  n" << i;
        if (g.black[i])
            out << " [label=\"" << -g.self_intersections[i]
                << "\", style=filled, fillcolor=black, fontcolor=white]";
        else
            out << " [label=\"\"]";
        out << ";\n";
    }
    for (const auto& [a, b] : g.edges) out << "  n" << a << " -- n" << b << ";\n";
    out << "}\n";
    return out.str();
}

int cycle_predecessor(const DualGraph& g, int node) {
    for (int i = 0; i < g.node_count; ++i)
        if (g.on_cycle[i] && g.successor[i] == node && i != node) return i;
    return -1;
}

std::vector<std::string> display_aliases(const DualGraph& g, const DlousskySequence& seq) {
    std::vector<std::string> alias(g.node_count);
    if (!seq.is_simple() || g.has_self_loop) return alias;

    const RoleReport roles = decompose(g);
    if (roles.trees.size() != 1 || roles.tips.size() != 1 || roles.roots.size() != 1)
        return alias;
    const int root = roles.roots.front();
    const int l = seq.regular_total();

    // tree chain from the tip toward the root
    int v = roles.tips.front(), idx = 1;
    while (!g.on_cycle[v]) {
        alias[v] = "A" + std::to_string(idx++);
        v = g.successor[v];
    }

    // around the cycle from the root: R_2, R_3..R_l, C_0, C_1, ..., R_1
    std::vector<int> order{root};
    for (int w = g.successor[root]; w != root; w = g.successor[w]) order.push_back(w);
    const int c = static_cast<int>(order.size());
    if (l >= 2) {
        if (l - 1 >= c || order[l - 1] != 0) return alias;  // unexpected layout
        alias[order[0]] = "R2";
        for (int t = 1; t <= l - 2; ++t) alias[order[t]] = "R" + std::to_string(t + 2);
        alias[order[l - 1]] = "C0";
        for (int t = l; t < c; ++t) alias[order[t]] = "C" + std::to_string(t - l + 1);
    } else {
        if (order[0] != 0) return alias;  // l=1: the root is C_0
        alias[order[0]] = "C0";
        for (int t = 1; t < c; ++t) alias[order[t]] = "C" + std::to_string(t);
    }
    if (c >= 2 && order[c - 1] != order[0] && l >= 1 && order[c - 1] != 0)
        alias[order[c - 1]] = "R1";
    return alias;
}

}  // namespace kato

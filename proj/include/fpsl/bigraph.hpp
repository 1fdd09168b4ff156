#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpsl/term.hpp"

namespace fpsl {

enum class Side { L, R };

inline Side opposite(Side s) { return s == Side::L ? Side::R : Side::L; }

struct GraphVertex {
    int id = 0;
    Side side = Side::L;
    Symbol label;
};

/// A finite vertex-labeled bipartite tree with an optional distinguished
/// left root and right root. When both roots are set they are adjacent
/// (the distinguished edge), except in the single-vertex case where the
/// one vertex serves as both roots. Vertex sides follow parity of the
/// distance to the left root (or, failing that, to the right root).
struct BiTree {
    std::vector<GraphVertex> vertices;
    std::set<std::pair<int, int>> edges; // stored with first < second
    std::optional<int> left_root, right_root;

    bool has_vertex(int id) const {
        return std::any_of(vertices.begin(), vertices.end(),
                           [&](const GraphVertex& v) { return v.id == id; });
    }
    const GraphVertex& vertex(int id) const {
        for (const auto& v : vertices)
            if (v.id == id) return v;
        throw std::out_of_range("no vertex with id " + std::to_string(id));
    }
    GraphVertex& vertex(int id) {
        for (auto& v : vertices)
            if (v.id == id) return v;
        throw std::out_of_range("no vertex with id " + std::to_string(id));
    }
    const Symbol& label(int id) const { return vertex(id).label; }

    void add_edge(int a, int b) { edges.insert(std::minmax(a, b)); }
    bool adjacent(int a, int b) const { return edges.count(std::minmax(a, b)) > 0; }

    std::map<int, std::vector<int>> adjacency() const {
        std::map<int, std::vector<int>> adj;
        for (const auto& v : vertices) adj[v.id];
        for (auto [a, b] : edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        return adj;
    }

    int degree(int id) const {
        int d = 0;
        for (auto [a, b] : edges)
            if (a == id || b == id) ++d;
        return d;
    }

    std::vector<int> neighbors(int id) const {
        std::vector<int> out;
        for (auto [a, b] : edges) {
            if (a == id) out.push_back(b);
            if (b == id) out.push_back(a);
        }
        return out;
    }

    int max_id() const {
        int m = -1;
        for (const auto& v : vertices) m = std::max(m, v.id);
        return m;
    }

    bool is_singleton() const { return vertices.size() == 1; }
};

/// A thorn-free, fold-free bipartite tree without roots (or a single
/// vertex). The two sides are intrinsic except in the singleton case,
/// which compares by label alone.
struct UnrootedTree {
    std::vector<GraphVertex> vertices;
    std::set<std::pair<int, int>> edges;

    std::map<int, std::vector<int>> adjacency() const {
        std::map<int, std::vector<int>> adj;
        for (const auto& v : vertices) adj[v.id];
        for (auto [a, b] : edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        return adj;
    }
    const GraphVertex& vertex(int id) const {
        for (const auto& v : vertices)
            if (v.id == id) return v;
        throw std::out_of_range("no vertex with id " + std::to_string(id));
    }
    bool is_singleton() const { return vertices.size() == 1; }
};

namespace detail {

/// Reassign sides by BFS parity from the left root (or right root when
/// only that one is set). Throws if the graph is disconnected.
inline void assign_sides(BiTree& g) {
    if (g.vertices.empty()) return;
    int start;
    Side start_side;
    if (g.left_root) {
        start = *g.left_root;
        start_side = Side::L;
    } else if (g.right_root) {
        start = *g.right_root;
        start_side = Side::R;
    } else {
        return; // unrooted intermediates keep their stored sides
    }
    auto adj = g.adjacency();
    std::map<int, Side> side;
    std::deque<int> queue{start};
    side[start] = start_side;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int n : adj[v]) {
            if (!side.count(n)) {
                side[n] = opposite(side[v]);
                queue.push_back(n);
            }
        }
    }
    if (side.size() != g.vertices.size())
        throw std::invalid_argument("graph is not connected");
    for (auto& v : g.vertices) v.side = side[v.id];
}

/// Copy of g with every id shifted by offset.
inline BiTree shift_ids(const BiTree& g, int offset) {
    BiTree out;
    out.vertices = g.vertices;
    for (auto& v : out.vertices) v.id += offset;
    for (auto [a, b] : g.edges) out.edges.insert({a + offset, b + offset});
    if (g.left_root) out.left_root = *g.left_root + offset;
    if (g.right_root) out.right_root = *g.right_root + offset;
    return out;
}

inline bool is_tree(const BiTree& g) {
    if (g.vertices.empty()) return false;
    if (g.edges.size() + 1 != g.vertices.size()) return false;
    auto adj = g.adjacency();
    std::set<int> seen;
    std::deque<int> queue{g.vertices.front().id};
    seen.insert(g.vertices.front().id);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int n : adj[v])
            if (seen.insert(n).second) queue.push_back(n);
    }
    return seen.size() == g.vertices.size();
}

} // namespace detail

/// Single-vertex graph for a letter; both roots point at the vertex.
inline BiTree singleton(const Symbol& x) {
    BiTree g;
    g.vertices.push_back({0, Side::L, x});
    g.left_root = 0;
    g.right_root = 0;
    return g;
}

/// The operation on bi-rooted trees: disjoint union of the left-rooted a
/// and the right-rooted b, joined by a new distinguished edge between
/// a's left root and b's right root.
inline BiTree meet_raw(const BiTree& a, const BiTree& b) {
    if (!a.left_root || !a.right_root || !b.left_root || !b.right_root)
        throw std::invalid_argument("meet_raw requires both roots on both operands");
    int offset = a.max_id() + 1;
    BiTree bs = detail::shift_ids(b, offset);
    BiTree out;
    out.vertices = a.vertices;
    out.vertices.insert(out.vertices.end(), bs.vertices.begin(), bs.vertices.end());
    out.edges = a.edges;
    out.edges.insert(bs.edges.begin(), bs.edges.end());
    out.left_root = *a.left_root;
    out.right_root = *bs.right_root;
    out.add_edge(*out.left_root, *out.right_root);
    detail::assign_sides(out);
    return out;
}

/// The canonical homomorphism from terms to bi-rooted trees.
inline BiTree delta(const TermPtr& t) {
    if (t->is_leaf()) return singleton(t->var());
    return meet_raw(delta(t->left()), delta(t->right()));
}

/// Builds the same graph as delta, but by contracting segments of the
/// term's parse tree: each maximal run of left (right) vertices through
/// a left (right) leaf collapses to one vertex, and the parse-tree root
/// collapses to the distinguished edge. Kept independent of delta so the
/// two constructions can check each other.
inline BiTree gamma_contract(const TermPtr& t) {
    if (t->is_leaf())
        throw std::invalid_argument("gamma_contract requires a compound term");

    // Materialize the parse tree: node 0 is the root; each node records
    // its parent and whether it is a left or right child.
    struct Node {
        int parent = -1;
        bool is_left_child = false;
        bool is_leaf = false;
        Symbol label;
        int left = -1, right = -1;
    };
    std::vector<Node> nodes;
    auto build = [&](auto&& self, const TermPtr& u, int parent, bool left_child) -> int {
        int idx = static_cast<int>(nodes.size());
        nodes.push_back({});
        nodes[idx].parent = parent;
        nodes[idx].is_left_child = left_child;
        if (u->is_leaf()) {
            nodes[idx].is_leaf = true;
            nodes[idx].label = u->var();
        } else {
            nodes[idx].left = self(self, u->left(), idx, true);
            nodes[idx].right = self(self, u->right(), idx, false);
        }
        return idx;
    };
    build(build, t, -1, false);

    // For every leaf, walk up through same-side ancestors; all parse-tree
    // nodes on that walk form the leaf's segment. The root (parent -1)
    // belongs to no segment.
    std::vector<int> segment_of(nodes.size(), -1);
    BiTree out;
    int next_id = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!nodes[i].is_leaf) continue;
        int seg = next_id++;
        out.vertices.push_back(
            {seg, nodes[i].is_left_child ? Side::L : Side::R, nodes[i].label});
        int v = static_cast<int>(i);
        segment_of[v] = seg;
        while (nodes[v].parent >= 0 &&
               nodes[nodes[v].parent].parent >= 0 && // parent is not the root
               nodes[nodes[v].parent].is_left_child == nodes[i].is_left_child &&
               nodes[v].is_left_child == nodes[i].is_left_child) {
            v = nodes[v].parent;
            segment_of[v] = seg;
        }
    }

    // Parse-tree edges across segment boundaries become graph edges; the
    // two edges at the root contract to the distinguished edge.
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        int p = nodes[i].parent;
        if (p == 0) continue;
        if (segment_of[i] != segment_of[p]) out.add_edge(segment_of[i], segment_of[p]);
    }
    int leftmost = 0;
    while (!nodes[leftmost].is_leaf) leftmost = nodes[leftmost].left;
    int rightmost = 0;
    while (!nodes[rightmost].is_leaf) rightmost = nodes[rightmost].right;
    out.left_root = segment_of[leftmost];
    out.right_root = segment_of[rightmost];
    out.add_edge(*out.left_root, *out.right_root);
    detail::assign_sides(out);
    return out;
}

struct GraphSubstitutionResult {
    BiTree graph;
    /// For each vertex id of the original graph, the id of its block root
    /// in the substituted graph.
    std::map<int, int> block_root;
};

/// Replace every vertex of g (which must be some delta image) by a fresh
/// copy of the piece registered for its label: left vertices by the
/// left-rooted copy, right vertices by the right-rooted copy. Every edge
/// of g turns into an edge between the corresponding block roots.
inline GraphSubstitutionResult graph_substitute_detail(
    const BiTree& g, const std::map<Symbol, BiTree>& pieces) {
    if (!g.left_root || !g.right_root)
        throw std::invalid_argument("graph_substitute requires both roots");
    BiTree out;
    std::map<int, int> block_root;
    int offset = 0;
    for (const auto& v : g.vertices) {
        auto it = pieces.find(v.label);
        if (it == pieces.end())
            throw std::invalid_argument("no piece for label '" + v.label + "'");
        const BiTree& piece = it->second;
        if (!piece.left_root || !piece.right_root)
            throw std::invalid_argument("piece for '" + v.label + "' must have both roots");
        BiTree copy = detail::shift_ids(piece, offset);
        offset = copy.max_id() + 1;
        out.vertices.insert(out.vertices.end(), copy.vertices.begin(), copy.vertices.end());
        out.edges.insert(copy.edges.begin(), copy.edges.end());
        block_root[v.id] = v.side == Side::L ? *copy.left_root : *copy.right_root;
    }
    for (auto [a, b] : g.edges) out.add_edge(block_root[a], block_root[b]);
    out.left_root = block_root[*g.left_root];
    out.right_root = block_root[*g.right_root];
    detail::assign_sides(out);
    return {std::move(out), std::move(block_root)};
}

inline BiTree graph_substitute(const BiTree& g, const std::map<Symbol, BiTree>& pieces) {
    return graph_substitute_detail(g, pieces).graph;
}

/// The skeleton of (u, psi): the tree of delta(u) with each left label x
/// renamed to l(x psi) and each right label x to r(x psi).
inline BiTree skeleton(const TermPtr& u, const Substitution& psi) {
    BiTree g = delta(u);
    for (auto& v : g.vertices) {
        auto it = psi.find(v.label);
        if (it == psi.end()) continue;
        v.label = v.side == Side::L ? detail::leftmost(it->second)
                                    : detail::rightmost(it->second);
    }
    return g;
}

namespace detail {

/// A thorn is a degree-1 vertex whose unique neighbor carries the same
/// label; it is essential when the degree-1 vertex is a root.
inline bool is_thorn_vertex(const BiTree& g, int id) {
    auto nbrs = g.neighbors(id);
    return nbrs.size() == 1 && g.label(nbrs[0]) == g.label(id);
}

inline bool is_essential(const BiTree& g, int id) {
    return (g.left_root && *g.left_root == id) || (g.right_root && *g.right_root == id);
}

inline void remove_vertex(BiTree& g, int id) {
    g.vertices.erase(std::remove_if(g.vertices.begin(), g.vertices.end(),
                                    [&](const GraphVertex& v) { return v.id == id; }),
                     g.vertices.end());
    for (auto it = g.edges.begin(); it != g.edges.end();) {
        if (it->first == id || it->second == id)
            it = g.edges.erase(it);
        else
            ++it;
    }
}

/// Vertices of g whose two neighbor labels repeat (fold candidates).
inline bool has_fold(const BiTree& g) {
    auto adj = g.adjacency();
    for (const auto& [v, nbrs] : adj) {
        std::set<Symbol> seen;
        for (int n : nbrs)
            if (!seen.insert(g.label(n)).second) return true;
    }
    return false;
}

} // namespace detail

inline bool is_fold_free(const BiTree& g) { return !detail::has_fold(g); }

/// A bi-rooted tree is reduced when it is fold-free and all of its thorns
/// are essential.
inline bool is_reduced(const BiTree& g) {
    if (!g.left_root || !g.right_root) return false;
    if (g.is_singleton()) return false; // the reduced form of a letter has two vertices
    if (!is_fold_free(g)) return false;
    for (const auto& v : g.vertices)
        if (detail::is_thorn_vertex(g, v.id) && !detail::is_essential(g, v.id)) return false;
    return true;
}

enum class Rooting { Left, Right, LeftReduced, RightReduced };

/// Rooted projections. Left/Right unset the other root. LeftReduced and
/// RightReduced (the lowercase maps of the tree model) additionally drop
/// the root-adjacent essential thorn, so the two-vertex x=x graph
/// projects to the one-vertex graph.
inline BiTree project(const BiTree& g, Rooting mode) {
    if (!g.left_root || !g.right_root)
        throw std::invalid_argument("project requires both roots");
    BiTree out = g;
    switch (mode) {
    case Rooting::Left:
        out.right_root.reset();
        break;
    case Rooting::Right:
        out.left_root.reset();
        break;
    case Rooting::LeftReduced: {
        if (!is_reduced(g)) throw std::invalid_argument("projection of a non-reduced graph");
        int rv = *out.right_root;
        out.right_root.reset();
        if (detail::is_thorn_vertex(out, rv)) detail::remove_vertex(out, rv);
        break;
    }
    case Rooting::RightReduced: {
        if (!is_reduced(g)) throw std::invalid_argument("projection of a non-reduced graph");
        int lv = *out.left_root;
        out.left_root.reset();
        if (detail::is_thorn_vertex(out, lv)) detail::remove_vertex(out, lv);
        break;
    }
    }
    detail::assign_sides(out);
    return out;
}

/// The hat map: forget the roots and delete thorns until none remain
/// (never below one vertex). Sides are kept as determined by the roots
/// the graph had.
inline UnrootedTree hat(const BiTree& g) {
    BiTree work = g;
    detail::assign_sides(work);
    work.left_root.reset();
    work.right_root.reset();
    bool changed = true;
    while (changed && work.vertices.size() > 1) {
        changed = false;
        for (const auto& v : work.vertices) {
            if (detail::is_thorn_vertex(work, v.id)) {
                detail::remove_vertex(work, v.id);
                changed = true;
                break;
            }
        }
    }
    UnrootedTree out;
    out.vertices = work.vertices;
    out.edges = work.edges;
    return out;
}

/// Move the distinguished pair to another adjacent (L,R) pair of the same
/// reduced tree. Fails if the moved roots would leave a non-essential
/// thorn behind.
inline BiTree reroot(const BiTree& g, int lv, int rv) {
    if (!is_reduced(g)) throw std::invalid_argument("reroot requires a reduced graph");
    if (!g.adjacent(lv, rv)) throw std::invalid_argument("reroot: vertices not adjacent");
    if (g.vertex(lv).side != Side::L || g.vertex(rv).side != Side::R)
        throw std::invalid_argument("reroot: pair must be a left and a right vertex");
    BiTree out = g;
    out.left_root = lv;
    out.right_root = rv;
    detail::assign_sides(out);
    if (!is_reduced(out))
        throw std::invalid_argument("reroot would create a non-essential thorn");
    return out;
}

} // namespace fpsl

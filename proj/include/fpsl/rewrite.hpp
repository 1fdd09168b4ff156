#pragma once

#include <deque>
#include <random>
#include <string>

#include "fpsl/bigraph.hpp"

namespace fpsl {

namespace detail {

/// Merge vertex `gone` into `keep` (same label, common neighbor): move
/// edges over and transfer root marks.
inline void merge_vertices(BiTree& g, int keep, int gone) {
    std::vector<int> nbrs = g.neighbors(gone);
    remove_vertex(g, gone);
    for (int n : nbrs)
        if (n != keep) g.add_edge(keep, n);
    if (g.left_root && *g.left_root == gone) g.left_root = keep;
    if (g.right_root && *g.right_root == gone) g.right_root = keep;
}

/// One applicable edge-folding: a vertex with two equal-labeled
/// neighbors. Returns (center, keep, gone) with keep < gone.
struct Fold {
    int center, keep, gone;
};

inline std::vector<Fold> fold_candidates(const BiTree& g) {
    std::vector<Fold> out;
    auto adj = g.adjacency();
    for (const auto& [v, nbrs] : adj) {
        std::map<Symbol, int> first;
        std::vector<int> sorted = nbrs;
        std::sort(sorted.begin(), sorted.end());
        for (int n : sorted) {
            auto [it, fresh] = first.insert({g.label(n), n});
            if (!fresh) out.push_back({v, it->second, n});
        }
    }
    return out;
}

inline std::vector<int> nonessential_thorns(const BiTree& g) {
    std::vector<int> out;
    if (g.vertices.size() <= 2) return out; // never reduce below the two-vertex graph
    for (const auto& v : g.vertices)
        if (is_thorn_vertex(g, v.id) && !is_essential(g, v.id)) out.push_back(v.id);
    return out;
}

} // namespace detail

/// Apply edge-foldings to exhaustion (no thorn deletion). Deterministic:
/// always the candidate with the lowest ids.
inline BiTree fold(const BiTree& g) {
    BiTree out = g;
    for (;;) {
        auto cands = detail::fold_candidates(out);
        if (cands.empty()) break;
        detail::merge_vertices(out, cands.front().keep, cands.front().gone);
    }
    detail::assign_sides(out);
    return out;
}

/// A reduced bi-rooted tree together with its canonical encoding. Two
/// normal forms are equal exactly when their keys are equal.
struct NormalForm {
    BiTree graph;
    std::string key;

    friend bool operator==(const NormalForm& a, const NormalForm& b) { return a.key == b.key; }
    friend bool operator!=(const NormalForm& a, const NormalForm& b) { return a.key != b.key; }
    friend bool operator<(const NormalForm& a, const NormalForm& b) { return a.key < b.key; }
};

namespace detail {

inline std::string enc_label(const Symbol& s) {
    return std::to_string(s.size()) + ":" + s;
}

/// Bottom-up canonical string of the subtree hanging at v, entered from
/// `from` (-1 for none); children encodings sorted.
inline std::string enc_subtree(const BiTree& g, const std::map<int, std::vector<int>>& adj,
                               int v, int from) {
    std::vector<std::string> kids;
    for (int n : adj.at(v))
        if (n != from) kids.push_back(enc_subtree(g, adj, n, v));
    std::sort(kids.begin(), kids.end());
    std::string out = "(" + enc_label(g.label(v));
    for (const auto& k : kids) out += k;
    out += ")";
    return out;
}

} // namespace detail

/// Canonical encoding, invariant under id renaming: anchored at the
/// distinguished edge (both roots), at the single root, or at the tree
/// center when unrooted.
inline std::string canonical_key(const BiTree& g) {
    auto adj = g.adjacency();
    if (g.left_root && g.right_root) {
        if (g.is_singleton()) return "S" + detail::enc_label(g.label(*g.left_root));
        return "B" + detail::enc_subtree(g, adj, *g.left_root, *g.right_root) +
               detail::enc_subtree(g, adj, *g.right_root, *g.left_root);
    }
    if (g.left_root) return "L" + detail::enc_subtree(g, adj, *g.left_root, -1);
    if (g.right_root) return "R" + detail::enc_subtree(g, adj, *g.right_root, -1);
    // Unrooted: anchor at the center (one vertex or one edge).
    if (g.is_singleton()) return "U" + detail::enc_label(g.vertices.front().label);
    std::map<int, int> deg;
    for (const auto& v : g.vertices) deg[v.id] = static_cast<int>(adj[v.id].size());
    std::set<int> alive;
    for (const auto& v : g.vertices) alive.insert(v.id);
    std::map<int, std::vector<int>> live_adj = adj;
    while (alive.size() > 2) {
        std::vector<int> leaves;
        for (int v : alive)
            if (live_adj[v].size() <= 1) leaves.push_back(v);
        for (int v : leaves) {
            alive.erase(v);
            for (int n : live_adj[v]) {
                auto& na = live_adj[n];
                na.erase(std::remove(na.begin(), na.end(), v), na.end());
            }
            live_adj.erase(v);
        }
    }
    auto side_char = [&](int id) { return g.vertex(id).side == Side::L ? 'l' : 'r'; };
    if (alive.size() == 1) {
        int c = *alive.begin();
        return std::string("C") + side_char(c) + detail::enc_subtree(g, adj, c, -1);
    }
    auto it = alive.begin();
    int c1 = *it++, c2 = *it;
    std::string s1 = std::string(1, side_char(c1)) + detail::enc_subtree(g, adj, c1, c2) +
                     detail::enc_subtree(g, adj, c2, c1);
    std::string s2 = std::string(1, side_char(c2)) + detail::enc_subtree(g, adj, c2, c1) +
                     detail::enc_subtree(g, adj, c1, c2);
    return "E" + std::min(s1, s2);
}

inline std::string canonical_key(const UnrootedTree& g) {
    BiTree b;
    b.vertices = g.vertices;
    b.edges = g.edges;
    return canonical_key(b);
}

inline bool operator==(const UnrootedTree& a, const UnrootedTree& b) {
    return canonical_key(a) == canonical_key(b);
}

namespace detail {

/// Renumber ids 0..n-1 by a traversal order that only depends on the
/// isomorphism class: from the left root, neighbors visited by subtree
/// encoding. Keeps fixtures and serialized output stable.
inline BiTree normalize_ids(const BiTree& g) {
    auto adj = g.adjacency();
    std::map<int, int> renumber;
    int next = 0;
    int start = g.left_root ? *g.left_root
                            : (g.right_root ? *g.right_root : g.vertices.front().id);
    auto visit = [&](auto&& self, int v, int from) -> void {
        renumber[v] = next++;
        std::vector<std::pair<std::string, int>> kids;
        for (int n : adj[v])
            if (n != from) kids.push_back({enc_subtree(g, adj, n, v), n});
        std::sort(kids.begin(), kids.end());
        for (auto& [k, n] : kids) self(self, n, v);
    };
    visit(visit, start, -1);
    BiTree out;
    out.vertices = g.vertices;
    for (auto& v : out.vertices) v.id = renumber[v.id];
    std::sort(out.vertices.begin(), out.vertices.end(),
              [](const GraphVertex& a, const GraphVertex& b) { return a.id < b.id; });
    for (auto [a, b] : g.edges) out.edges.insert(std::minmax(renumber[a], renumber[b]));
    if (g.left_root) out.left_root = renumber[*g.left_root];
    if (g.right_root) out.right_root = renumber[*g.right_root];
    return out;
}

inline NormalForm make_normal_form(BiTree g) {
    g = normalize_ids(g);
    std::string key = canonical_key(g);
    return {std::move(g), std::move(key)};
}

} // namespace detail

/// Reduced form: fold to exhaustion, then delete all non-essential
/// thorns. The single-vertex graph reduces to the two-vertex x=x graph.
inline NormalForm reduce(const BiTree& g) {
    if (!g.left_root || !g.right_root)
        throw std::invalid_argument("reduce requires both roots");
    if (g.is_singleton()) {
        BiTree two;
        const Symbol& x = g.vertices.front().label;
        two.vertices.push_back({0, Side::L, x});
        two.vertices.push_back({1, Side::R, x});
        two.add_edge(0, 1);
        two.left_root = 0;
        two.right_root = 1;
        return detail::make_normal_form(two);
    }
    BiTree out = fold(g);
    for (;;) {
        auto thorns = detail::nonessential_thorns(out);
        if (thorns.empty()) break;
        detail::remove_vertex(out, thorns.front());
    }
    detail::assign_sides(out);
    return detail::make_normal_form(out);
}

/// Reduction applying thorn deletions and foldings interleaved in a
/// random order. Exists to exercise order-independence; agrees with
/// reduce on the canonical key.
inline NormalForm reduce_randomized(const BiTree& g, std::mt19937& rng) {
    if (!g.left_root || !g.right_root)
        throw std::invalid_argument("reduce requires both roots");
    if (g.is_singleton()) return reduce(g);
    BiTree out = g;
    for (;;) {
        auto folds = detail::fold_candidates(out);
        auto thorns = detail::nonessential_thorns(out);
        std::size_t total = folds.size() + thorns.size();
        if (total == 0) break;
        std::size_t pick = std::uniform_int_distribution<std::size_t>(0, total - 1)(rng);
        if (pick < folds.size())
            detail::merge_vertices(out, folds[pick].keep, folds[pick].gone);
        else
            detail::remove_vertex(out, thorns[pick - folds.size()]);
    }
    detail::assign_sides(out);
    return detail::make_normal_form(out);
}

/// The free-model image of a term: reduce(delta(t)).
inline NormalForm theta(const TermPtr& t) { return reduce(delta(t)); }

inline NormalForm theta(std::string_view text) { return theta(parse_term(text)); }

/// The meet of two reduced elements.
inline NormalForm wedge(const NormalForm& a, const NormalForm& b) {
    return reduce(meet_raw(a.graph, b.graph));
}

/// Alternative route for the meet: join the root-reduced projections by
/// the new distinguished edge and fold. Used to cross-check wedge.
inline NormalForm wedge_via_projections(const NormalForm& a, const NormalForm& b) {
    BiTree la = project(a.graph, Rooting::LeftReduced);
    BiTree rb = project(b.graph, Rooting::RightReduced);
    int offset = la.max_id() + 1;
    BiTree rbs = detail::shift_ids(rb, offset);
    BiTree out;
    out.vertices = la.vertices;
    out.vertices.insert(out.vertices.end(), rbs.vertices.begin(), rbs.vertices.end());
    out.edges = la.edges;
    out.edges.insert(rbs.edges.begin(), rbs.edges.end());
    out.left_root = *la.left_root;
    out.right_root = *rbs.right_root;
    out.add_edge(*out.left_root, *out.right_root);
    detail::assign_sides(out);
    out = fold(out);
    detail::assign_sides(out);
    return detail::make_normal_form(out);
}

/// Decides whether the identity u = v holds in every pseudosemilattice.
inline bool equal_ps(const TermPtr& u, const TermPtr& v) {
    return theta(u) == theta(v);
}

} // namespace fpsl

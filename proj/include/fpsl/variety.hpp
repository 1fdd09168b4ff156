#pragma once

#include "fpsl/order.hpp"

namespace fpsl {

/// Decides whether u = v holds in every strict pseudosemilattice: the
/// triple (leftmost letter, 2-content, rightmost letter) must coincide.
inline bool equal_sps(const TermPtr& u, const TermPtr& v) {
    return term_invariants(u).sps_triple_equal(term_invariants(v));
}

namespace detail {

/// The 2-content read off a reduced graph: one diagonal pair per vertex
/// and one (left label, right label) pair per edge.
inline std::set<std::pair<Symbol, Symbol>> graph_co2(const BiTree& g) {
    std::set<std::pair<Symbol, Symbol>> out;
    for (const auto& v : g.vertices) out.insert({v.label, v.label});
    for (auto [a, b] : g.edges) {
        int l = g.vertex(a).side == Side::L ? a : b;
        int r = l == a ? b : a;
        out.insert({g.label(l), g.label(r)});
    }
    return out;
}

inline std::set<Symbol> side_labels(const BiTree& g, Side s) {
    std::set<Symbol> out;
    for (const auto& v : g.vertices)
        if (v.side == s) out.insert(v.label);
    return out;
}

} // namespace detail

/// An elementary pair: same 2-content with disjoint left/right contents
/// below, the upper graph covering the lower one (one vertex fewer), and
/// the extra vertex a leaf hanging off a distinguished vertex.
inline bool is_elementary(const NormalForm& upper, const NormalForm& lower) {
    if (detail::graph_co2(upper.graph) != detail::graph_co2(lower.graph)) return false;
    std::set<Symbol> left = detail::side_labels(lower.graph, Side::L);
    std::set<Symbol> right = detail::side_labels(lower.graph, Side::R);
    for (const auto& x : left)
        if (right.count(x)) return false;
    if (lower.graph.vertices.size() != upper.graph.vertices.size() + 1) return false;
    auto phi = detail::embed_birooted(upper.graph, lower.graph);
    if (!phi) return false;
    std::set<int> covered;
    for (auto [a, b] : *phi) covered.insert(b);
    int extra = -1;
    for (const auto& v : lower.graph.vertices)
        if (!covered.count(v.id)) extra = v.id;
    if (extra < 0) return false;
    auto nbrs = lower.graph.neighbors(extra);
    if (nbrs.size() != 1) return false;
    return nbrs[0] == *lower.graph.left_root || nbrs[0] == *lower.graph.right_root;
}

/// Reconstructs the unique term whose graph image is g. Requires every
/// vertex to have degree at most 2 (each one-rooted path continues in a
/// forced way); g must carry both roots.
inline TermPtr word_from_graph(const BiTree& g) {
    if (!g.left_root || !g.right_root)
        throw std::invalid_argument("word_from_graph requires both roots");
    for (const auto& v : g.vertices)
        if (g.degree(v.id) > 2)
            throw std::invalid_argument("word_from_graph: vertex of degree > 2");
    if (!detail::is_tree(g)) throw std::invalid_argument("word_from_graph: not a tree");

    auto recurse = [&](auto&& self, const BiTree& h) -> TermPtr {
        if (h.is_singleton()) return leaf(h.vertices.front().label);
        int lv = *h.left_root, rv = *h.right_root;
        // split off the distinguished edge: the components of lv and rv
        auto adj = h.adjacency();
        auto side_of = [&](int start, int banned) {
            std::set<int> seen{start};
            std::deque<int> queue{start};
            while (!queue.empty()) {
                int v = queue.front();
                queue.pop_front();
                for (int n : adj[v]) {
                    if (v == start && n == banned) continue;
                    if (seen.insert(n).second) queue.push_back(n);
                }
            }
            return seen;
        };
        std::set<int> left_part = side_of(lv, rv);
        auto restrict_to = [&](const std::set<int>& keep) {
            BiTree out;
            for (const auto& v : h.vertices)
                if (keep.count(v.id)) out.vertices.push_back(v);
            for (auto [a, b] : h.edges)
                if (keep.count(a) && keep.count(b)) out.edges.insert({a, b});
            return out;
        };
        // left factor: the left part re-rooted at lv and lv's remaining
        // neighbor (none means it is a letter)
        BiTree tl = restrict_to(left_part);
        TermPtr u1;
        auto ln = tl.neighbors(lv);
        if (ln.empty()) {
            u1 = leaf(h.label(lv));
        } else {
            tl.left_root = lv;
            tl.right_root = ln.front();
            u1 = self(self, tl);
        }
        std::set<int> right_part;
        for (const auto& v : h.vertices)
            if (!left_part.count(v.id)) right_part.insert(v.id);
        BiTree tr = restrict_to(right_part);
        TermPtr u2;
        auto rn = tr.neighbors(rv);
        if (rn.empty()) {
            u2 = leaf(h.label(rv));
        } else {
            tr.left_root = rn.front();
            tr.right_root = rv;
            u2 = self(self, tr);
        }
        return meet(u1, u2);
    };
    return recurse(recurse, g);
}

enum class Family { A, C, M, N };

/// A covering pair of reduced graphs from one of the four generator
/// families, with the reconstructed words.
struct BasisPair {
    int n = 0;
    Family family = Family::A;
    NormalForm upper, lower;
    TermPtr upper_word, lower_word;
};

namespace detail {

inline Symbol var_x(int i) { return "x" + std::to_string(i); }

/// Zig-zag path over positions 0..len-1; label(p) and side parity come
/// from the family tables. Roots given as positions.
inline BiTree family_path(int len, bool even_is_right, const std::vector<Symbol>& labels,
                          int lv_pos, int rv_pos) {
    BiTree g;
    for (int p = 0; p < len; ++p) {
        bool even = p % 2 == 0;
        Side s = even == even_is_right ? Side::R : Side::L;
        g.vertices.push_back({p, s, labels[p]});
        if (p > 0) g.add_edge(p - 1, p);
    }
    g.left_root = lv_pos;
    g.right_root = rv_pos;
    detail::assign_sides(g);
    return g;
}

} // namespace detail

/// The four families of covering pairs: the lower graph is a labeled path
/// on 2n+2 (families A, M) or 2n+3 (families C, N) vertices whose end
/// vertex repeats an interior label; the upper graph drops that end
/// vertex. Families M and N are the side-swapped mirrors of A and C.
///
/// For C and N the repeated inner label must sit at distance >= 4 from
/// the root edge or the path folds, so with one label per side the
/// smallest member has seven vertices; parameter n enumerates the family
/// from that member (the path has 2(n+1)+1 vertices over x1..x{2(n+1)}).
inline BasisPair family_pair(Family family, int n) {
    if (n < 2) throw std::invalid_argument("family_pair requires n >= 2");
    std::vector<Symbol> labels;
    int len = 0;
    bool even_is_right = family == Family::A || family == Family::C;
    switch (family) {
    case Family::A:
    case Family::M:
        len = 2 * n + 2;
        labels.push_back(detail::var_x(2 * n));
        for (int p = 1; p <= 2 * n; ++p) labels.push_back(detail::var_x(p));
        labels.push_back(detail::var_x(1));
        break;
    case Family::C:
    case Family::N: {
        int m = n + 1;
        len = 2 * m + 1;
        labels.push_back(detail::var_x(2 * m));
        for (int p = 1; p <= 2 * m - 2; ++p) labels.push_back(detail::var_x(p));
        labels.push_back(detail::var_x(1));
        labels.push_back(detail::var_x(2 * m));
        break;
    }
    }
    int lv_pos = even_is_right ? 1 : 2;
    int rv_pos = even_is_right ? 2 : 1;
    BiTree lower = detail::family_path(len, even_is_right, labels, lv_pos, rv_pos);
    BiTree upper = lower;
    detail::remove_vertex(upper, 0);
    BasisPair out;
    out.n = n;
    out.family = family;
    out.lower_word = word_from_graph(lower);
    out.upper_word = word_from_graph(upper);
    out.lower = detail::make_normal_form(lower);
    out.upper = detail::make_normal_form(upper);
    return out;
}

/// The k-fold zig-zag witness: a single path of k*(2n+2) vertices whose
/// labels cycle through x1..x{2n+2}, sides alternating from L, with the
/// distinguished edge on the first two vertices; and the unique word
/// mapping onto it.
inline std::pair<BiTree, TermPtr> lambda_witness(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("lambda_witness requires n, k >= 1");
    int period = 2 * n + 2;
    int len = k * period;
    BiTree g;
    for (int p = 0; p < len; ++p) {
        g.vertices.push_back(
            {p, p % 2 == 0 ? Side::L : Side::R, detail::var_x(p % period + 1)});
        if (p > 0) g.add_edge(p - 1, p);
    }
    g.left_root = 0;
    g.right_root = 1;
    detail::assign_sides(g);
    TermPtr m = word_from_graph(g);
    return {std::move(g), std::move(m)};
}

} // namespace fpsl

#pragma once

#include "fpsl/rewrite.hpp"

namespace fpsl {

/// Result of comparing b against a in the natural quasi-orders of the
/// free model: b <=_R a, b <=_L a, b <= a, and the two equivalences.
struct OrderRecord {
    bool leq_r = false;
    bool leq_l = false;
    bool leq = false;
    bool r_eq = false;
    bool l_eq = false;
};

namespace detail {

/// Deterministic simultaneous descent mapping the subtree of `a` hanging
/// at va (entered from pa) into `b` at vb (entered from pb). Children
/// match by label; the match is unique because the host is fold-free.
inline bool embed_step(const BiTree& a, const std::map<int, std::vector<int>>& adj_a,
                       const BiTree& b, const std::map<int, std::vector<int>>& adj_b,
                       int va, int pa, int vb, int pb, std::map<int, int>& out) {
    if (a.label(va) != b.label(vb)) return false;
    out[va] = vb;
    for (int ca : adj_a.at(va)) {
        if (ca == pa) continue;
        int match = -1;
        for (int cb : adj_b.at(vb)) {
            if (cb == pb) continue;
            if (b.label(cb) == a.label(ca)) {
                match = cb;
                break;
            }
        }
        if (match < 0) return false;
        if (!embed_step(a, adj_a, b, adj_b, ca, va, match, vb, out)) return false;
    }
    return true;
}

/// Single-rooted subtree embedding: the tree of `a` rooted at root_a into
/// the tree of `b` rooted at root_b.
inline bool embeds_rooted(const BiTree& a, int root_a, const BiTree& b, int root_b) {
    std::map<int, int> m;
    return embed_step(a, a.adjacency(), b, b.adjacency(), root_a, -1, root_b, -1, m);
}

/// Bi-rooted subtree embedding of a into b (roots onto roots); returns
/// the vertex map on success.
inline std::optional<std::map<int, int>> embed_birooted(const BiTree& a, const BiTree& b) {
    if (!a.left_root || !a.right_root || !b.left_root || !b.right_root)
        throw std::invalid_argument("embed_birooted requires both roots on both graphs");
    std::map<int, int> m;
    if (a.is_singleton() || b.is_singleton()) {
        if (a.is_singleton() && b.is_singleton() &&
            a.label(*a.left_root) == b.label(*b.left_root)) {
            m[*a.left_root] = *b.left_root;
            return m;
        }
        return std::nullopt;
    }
    auto adj_a = a.adjacency();
    auto adj_b = b.adjacency();
    if (!embed_step(a, adj_a, b, adj_b, *a.left_root, *a.right_root, *b.left_root,
                    *b.right_root, m))
        return std::nullopt;
    if (!embed_step(a, adj_a, b, adj_b, *a.right_root, *a.left_root, *b.right_root,
                    *b.left_root, m))
        return std::nullopt;
    return m;
}

inline BiTree as_bitree(const UnrootedTree& t) {
    BiTree g;
    g.vertices = t.vertices;
    g.edges = t.edges;
    return g;
}

/// Some side- and label-preserving embedding of c into d (both unrooted,
/// fold-free, c not a singleton), or nullopt.
inline std::optional<std::map<int, int>> embed_unrooted(const UnrootedTree& c,
                                                        const UnrootedTree& d) {
    BiTree cb = as_bitree(c), db = as_bitree(d);
    auto adj_c = cb.adjacency(), adj_d = db.adjacency();
    const GraphVertex& anchor = c.vertices.front();
    for (const auto& w : d.vertices) {
        if (w.side != anchor.side || w.label != anchor.label) continue;
        std::map<int, int> m;
        if (embed_step(cb, adj_c, db, adj_d, anchor.id, -1, w.id, -1, m)) return m;
    }
    return std::nullopt;
}

} // namespace detail

/// compare(b, a): is b below a? leq_r tests the left-rooted projections,
/// leq_l the right-rooted ones, leq the bi-rooted embedding of a into b
/// (lower elements have the larger trees).
inline OrderRecord compare(const NormalForm& b, const NormalForm& a) {
    BiTree la = project(a.graph, Rooting::LeftReduced);
    BiTree lb = project(b.graph, Rooting::LeftReduced);
    BiTree ra = project(a.graph, Rooting::RightReduced);
    BiTree rb = project(b.graph, Rooting::RightReduced);
    OrderRecord rec;
    rec.leq_r = detail::embeds_rooted(la, *la.left_root, lb, *lb.left_root);
    rec.leq_l = detail::embeds_rooted(ra, *ra.right_root, rb, *rb.right_root);
    rec.leq = detail::embed_birooted(a.graph, b.graph).has_value();
    rec.r_eq = canonical_key(la) == canonical_key(lb);
    rec.l_eq = canonical_key(ra) == canonical_key(rb);
    return rec;
}

enum class GreenSide { R, L };

/// All elements R-equivalent (L-equivalent) to a: keep the left-rooted
/// (right-rooted) projection fixed and re-choose the other root among the
/// fixed root's neighbors, plus the added-thorn element when the fixed
/// root is not paired.
inline std::set<NormalForm> enumerate_class(const NormalForm& a, GreenSide side) {
    std::set<NormalForm> out;
    BiTree base = project(a.graph,
                          side == GreenSide::R ? Rooting::LeftReduced : Rooting::RightReduced);
    int fixed = side == GreenSide::R ? *base.left_root : *base.right_root;
    bool paired = false;
    for (int n : base.neighbors(fixed)) {
        if (base.label(n) == base.label(fixed)) paired = true;
        BiTree g = base;
        if (side == GreenSide::R)
            g.right_root = n;
        else
            g.left_root = n;
        detail::assign_sides(g);
        out.insert(detail::make_normal_form(g));
    }
    if (!paired) {
        BiTree g = base;
        int t = g.max_id() + 1;
        g.vertices.push_back({t, side == GreenSide::R ? Side::R : Side::L, g.label(fixed)});
        g.add_edge(fixed, t);
        if (side == GreenSide::R)
            g.right_root = t;
        else
            g.left_root = t;
        detail::assign_sides(g);
        out.insert(detail::make_normal_form(g));
    }
    return out;
}

/// a and b lie in the same connected component iff their hats coincide.
inline bool connected(const NormalForm& a, const NormalForm& b) {
    return canonical_key(hat(a.graph)) == canonical_key(hat(b.graph));
}

/// All elements whose hat equals hat(a): one per edge of the hat (the
/// left endpoint of the distinguished pair is forced by the bipartition)
/// plus one per non-paired vertex (attach a thorn and root there).
inline std::set<NormalForm> enumerate_component(const NormalForm& a) {
    UnrootedTree h = hat(a.graph);
    std::set<NormalForm> out;
    for (auto [u, v] : h.edges) {
        int lv = h.vertex(u).side == Side::L ? u : v;
        int rv = lv == u ? v : u;
        BiTree g = detail::as_bitree(h);
        g.left_root = lv;
        g.right_root = rv;
        detail::assign_sides(g);
        out.insert(detail::make_normal_form(g));
    }
    auto adj = h.adjacency();
    for (const auto& v : h.vertices) {
        bool paired = false;
        for (int n : adj[v.id])
            if (h.vertex(n).label == v.label) paired = true;
        if (paired) continue;
        BiTree g = detail::as_bitree(h);
        int t = g.max_id() + 1;
        g.vertices.push_back({t, opposite(v.side), v.label});
        g.add_edge(v.id, t);
        if (v.side == Side::L) {
            g.left_root = v.id;
            g.right_root = t;
        } else {
            g.left_root = t;
            g.right_root = v.id;
        }
        detail::assign_sides(g);
        out.insert(detail::make_normal_form(g));
    }
    return out;
}

/// The order on components by reverse inclusion: d below c iff c embeds
/// in d preserving sides and labels; a singleton c = one x-vertex embeds
/// wherever x occurs, on either side.
inline bool component_leq(const UnrootedTree& d, const UnrootedTree& c) {
    if (c.is_singleton()) {
        const Symbol& x = c.vertices.front().label;
        for (const auto& v : d.vertices)
            if (v.label == x) return true;
        return false;
    }
    if (d.is_singleton()) return false;
    return detail::embed_unrooted(c, d).has_value();
}

/// Some element with hat d lying below b, when one exists: embed hat(b)
/// into d and re-create b's distinguished pair inside the copy, attaching
/// a thorn when the pair used one.
inline std::optional<NormalForm> witness_below(const UnrootedTree& d, const NormalForm& b) {
    UnrootedTree hb = hat(b.graph);
    if (!component_leq(d, hb)) return std::nullopt;

    if (hb.is_singleton()) {
        // b is the two-vertex x=x graph; root at any x of d, pairing it
        // with an equal-labeled neighbor or a fresh thorn.
        const Symbol& x = hb.vertices.front().label;
        for (const auto& v : d.vertices) {
            if (v.label != x) continue;
            BiTree g = detail::as_bitree(d);
            int mate = -1;
            for (int n : g.neighbors(v.id))
                if (g.label(n) == x) mate = n;
            if (mate < 0) {
                mate = g.max_id() + 1;
                g.vertices.push_back({mate, opposite(v.side), x});
                g.add_edge(v.id, mate);
            }
            if (g.vertex(v.id).side == Side::L) {
                g.left_root = v.id;
                g.right_root = mate;
            } else {
                g.left_root = mate;
                g.right_root = v.id;
            }
            detail::assign_sides(g);
            return detail::make_normal_form(g);
        }
        return std::nullopt;
    }

    auto phi_opt = detail::embed_unrooted(hb, d);
    if (!phi_opt) return std::nullopt;
    auto& phi = *phi_opt;
    auto in_hat = [&](int id) {
        return std::any_of(hb.vertices.begin(), hb.vertices.end(),
                           [&](const GraphVertex& v) { return v.id == id; });
    };
    int lv = *b.graph.left_root, rv = *b.graph.right_root;
    BiTree g = detail::as_bitree(d);
    if (in_hat(lv) && in_hat(rv)) {
        g.left_root = phi[lv];
        g.right_root = phi[rv];
    } else if (!in_hat(lv)) {
        // lv was an essential thorn hanging off rv
        int w = phi[rv];
        const Symbol& x = b.graph.label(lv);
        int mate = -1;
        for (int n : g.neighbors(w))
            if (g.label(n) == x) mate = n;
        if (mate < 0) {
            mate = g.max_id() + 1;
            g.vertices.push_back({mate, Side::L, x});
            g.add_edge(w, mate);
        }
        g.left_root = mate;
        g.right_root = w;
    } else {
        int w = phi[lv];
        const Symbol& x = b.graph.label(rv);
        int mate = -1;
        for (int n : g.neighbors(w))
            if (g.label(n) == x) mate = n;
        if (mate < 0) {
            mate = g.max_id() + 1;
            g.vertices.push_back({mate, Side::R, x});
            g.add_edge(w, mate);
        }
        g.left_root = w;
        g.right_root = mate;
    }
    detail::assign_sides(g);
    return detail::make_normal_form(g);
}

/// Number of side-preserving embeddings of c into d. For a singleton
/// c = one x-vertex, each adjacent equal-labeled pair of x-vertices
/// counts once and each non-paired x-vertex counts once.
inline int count_embeddings(const UnrootedTree& d, const UnrootedTree& c) {
    if (c.is_singleton()) {
        const Symbol& x = c.vertices.front().label;
        int count = 0;
        for (auto [u, v] : d.edges)
            if (d.vertex(u).label == x && d.vertex(v).label == x) ++count;
        auto adj = d.adjacency();
        for (const auto& v : d.vertices) {
            if (v.label != x) continue;
            bool paired = false;
            for (int n : adj[v.id])
                if (d.vertex(n).label == x) paired = true;
            if (!paired) ++count;
        }
        return count;
    }
    if (d.is_singleton()) return 0;
    BiTree cb = detail::as_bitree(c), db = detail::as_bitree(d);
    auto adj_c = cb.adjacency(), adj_d = db.adjacency();
    const GraphVertex& anchor = c.vertices.front();
    int count = 0;
    for (const auto& w : d.vertices) {
        if (w.side != anchor.side || w.label != anchor.label) continue;
        std::map<int, int> m;
        if (detail::embed_step(cb, adj_c, db, adj_d, anchor.id, -1, w.id, -1, m)) ++count;
    }
    return count;
}

} // namespace fpsl

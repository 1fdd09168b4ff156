#pragma once

#include <random>
#include <vector>

#include "fpsl/fpsl.hpp"

namespace fpsl::testing {

/// Random term with exactly `leaves` leaves over the given variable pool.
inline TermPtr random_term(std::mt19937& rng, int leaves, const std::vector<Symbol>& vars) {
    if (leaves <= 1) {
        std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
        return leaf(vars[pick(rng)]);
    }
    std::uniform_int_distribution<int> split(1, leaves - 1);
    int left = split(rng);
    return meet(random_term(rng, left, vars), random_term(rng, leaves - left, vars));
}

inline std::vector<Symbol> var_pool(int count) {
    std::vector<Symbol> out;
    for (int i = 0; i < count; ++i) out.push_back(Symbol(1, static_cast<char>('a' + i)));
    return out;
}

/// The dual term: reverses every meet.
inline TermPtr dual(const TermPtr& t) {
    if (t->is_leaf()) return t;
    return meet(dual(t->right()), dual(t->left()));
}

/// Left-nested chain (...((u1^u2)^u3)...)^un.
inline TermPtr chain(const std::vector<TermPtr>& parts) {
    TermPtr t = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) t = meet(t, parts[i]);
    return t;
}

inline TermPtr chain_vars(const std::vector<Symbol>& names) {
    std::vector<TermPtr> parts;
    for (const auto& x : names) parts.push_back(leaf(x));
    return chain(parts);
}

/// The worked 9-vertex example term and its displayed graph.
inline TermPtr worked_term() {
    return parse_term("((x^(v^z))^x)^((v^z)^((v^w)^y))");
}

inline BiTree worked_figure() {
    BiTree g;
    g.vertices = {{1, Side::L, "v"}, {2, Side::L, "x"}, {3, Side::L, "v"},
                  {4, Side::L, "v"}, {5, Side::R, "z"}, {6, Side::R, "x"},
                  {7, Side::R, "z"}, {8, Side::R, "y"}, {9, Side::R, "w"}};
    g.add_edge(1, 5);
    g.add_edge(5, 2);
    g.add_edge(2, 6);
    g.add_edge(7, 3);
    g.add_edge(3, 8);
    g.add_edge(8, 4);
    g.add_edge(4, 9);
    g.add_edge(2, 8);
    g.left_root = 2;
    g.right_root = 8;
    return g;
}

/// The same term with the subword (v^w)^y replaced by (v^(x^w))^(y^x),
/// and the displayed 11-vertex graph of its image.
inline TermPtr substituted_term() {
    return parse_term("((x^(v^z))^x)^((v^z)^((v^(x^w))^(y^x)))");
}

inline BiTree substituted_figure() {
    BiTree g;
    g.vertices = {{1, Side::L, "v"},  {2, Side::L, "x"}, {3, Side::L, "v"},
                  {4, Side::L, "v"},  {5, Side::R, "z"}, {6, Side::R, "x"},
                  {7, Side::R, "z"},  {8, Side::R, "x"}, {9, Side::R, "w"},
                  {10, Side::L, "y"}, {11, Side::L, "x"}};
    g.add_edge(1, 5);
    g.add_edge(5, 2);
    g.add_edge(2, 6);
    g.add_edge(7, 3);
    g.add_edge(3, 8);
    g.add_edge(8, 4);
    g.add_edge(4, 9);
    g.add_edge(9, 11);
    g.add_edge(8, 10);
    g.add_edge(2, 8);
    g.left_root = 2;
    g.right_root = 8;
    return g;
}

inline bool same_graph(const BiTree& a, const BiTree& b) {
    return canonical_key(a) == canonical_key(b);
}

} // namespace fpsl::testing

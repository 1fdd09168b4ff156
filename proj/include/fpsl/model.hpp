#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fpsl/term.hpp"

namespace fpsl {

/// A finite binary algebra given by its Cayley table:
/// table[i][j] = elements[i] ^ elements[j], as an index.
struct FiniteAlgebra {
    std::vector<std::string> elements;
    std::vector<std::vector<int>> table;

    int size() const { return static_cast<int>(elements.size()); }
    int op(int i, int j) const { return table[i][j]; }

    void validate() const {
        if (table.size() != elements.size())
            throw std::invalid_argument("table is not square");
        for (const auto& row : table) {
            if (row.size() != elements.size())
                throw std::invalid_argument("table is not square");
            for (int e : row)
                if (e < 0 || e >= size()) throw std::invalid_argument("table entry out of range");
        }
    }
};

using Assignment = std::map<Symbol, int>;

inline int evaluate(const FiniteAlgebra& m, const TermPtr& t, const Assignment& a) {
    if (t->is_leaf()) {
        auto it = a.find(t->var());
        if (it == a.end()) throw std::invalid_argument("unbound variable '" + t->var() + "'");
        return it->second;
    }
    return m.op(evaluate(m, t->left(), a), evaluate(m, t->right(), a));
}

namespace detail {

/// Enumerate all assignments of vars into {0..size-1}, lexicographic by
/// variable name then element index; stop early when fn returns false.
inline bool for_each_assignment(const std::set<Symbol>& vars, int size,
                                const std::function<bool(const Assignment&)>& fn) {
    std::vector<Symbol> order(vars.begin(), vars.end());
    Assignment a;
    auto walk = [&](auto&& self, std::size_t i) -> bool {
        if (i == order.size()) return fn(a);
        for (int e = 0; e < size; ++e) {
            a[order[i]] = e;
            if (!self(self, i + 1)) return false;
        }
        return true;
    };
    return walk(walk, 0);
}

} // namespace detail

inline bool satisfies_identity(const FiniteAlgebra& m, const TermPtr& u, const TermPtr& v) {
    std::set<Symbol> vars = term_invariants(u).co;
    for (const auto& x : term_invariants(v).co) vars.insert(x);
    return detail::for_each_assignment(vars, m.size(), [&](const Assignment& a) {
        return evaluate(m, u, a) == evaluate(m, v, a);
    });
}

struct AxiomResult {
    std::string name;
    bool holds = false;
    Assignment counterexample; // empty when holds
};

struct AxiomReport {
    std::vector<AxiomResult> axioms;
    bool all_pass() const {
        return std::all_of(axioms.begin(), axioms.end(),
                           [](const AxiomResult& r) { return r.holds; });
    }
};

/// Checks the five defining identities of pseudosemilattices.
inline AxiomReport check_axioms(const FiniteAlgebra& m) {
    struct Entry {
        const char* name;
        const char* lhs;
        const char* rhs;
    };
    static const Entry entries[] = {
        {"PS1", "x^x", "x"},
        {"PS2", "(x^y)^(x^z)", "(x^y)^z"},
        {"PS3", "((x^y)^(x^z))^(x^w)", "(x^y)^((x^z)^(x^w))"},
        {"PS2'", "(z^x)^(y^x)", "z^(y^x)"},
        {"PS3'", "(w^x)^((z^x)^(y^x))", "((w^x)^(z^x))^(y^x)"},
    };
    AxiomReport report;
    for (const auto& e : entries) {
        TermPtr u = parse_term(e.lhs), v = parse_term(e.rhs);
        std::set<Symbol> vars = term_invariants(u).co;
        for (const auto& x : term_invariants(v).co) vars.insert(x);
        AxiomResult res;
        res.name = e.name;
        res.holds = detail::for_each_assignment(vars, m.size(), [&](const Assignment& a) {
            if (evaluate(m, u, a) == evaluate(m, v, a)) return true;
            res.counterexample = a;
            return false;
        });
        report.axioms.push_back(std::move(res));
    }
    return report;
}

namespace detail {

/// The five-element combinatorial completely 0-simple semigroup with
/// structure matrix P = [[1,1],[1,0]]: elements 0 and (i,lambda) for
/// i,lambda in {1,2}; (i,l)(j,m) = (i,m) if P[l][j] = 1, else 0.
struct ReesSemigroup {
    // element 0 is index 0; (i,lambda) is index 1 + 2*(i-1) + (lambda-1)
    static int pair(int i, int lambda) { return 1 + 2 * (i - 1) + (lambda - 1); }

    int mul(int a, int b) const {
        if (a == 0 || b == 0) return 0;
        int i = (a - 1) / 2 + 1, l = (a - 1) % 2 + 1;
        int j = (b - 1) / 2 + 1, m = (b - 1) % 2 + 1;
        static const int P[3][3] = {{0, 0, 0}, {0, 1, 1}, {0, 1, 0}};
        return P[l][j] ? pair(i, m) : 0;
    }
};

} // namespace detail

/// The 4-element pseudosemilattice of idempotents of the semigroup
/// above. The table is derived, not hand-written: for each pair (e,f) the
/// meet is the unique idempotent g whose principal down-set equals the
/// set of idempotents below e on the right and below f on the left.
inline FiniteAlgebra e2() {
    detail::ReesSemigroup s;
    std::vector<int> idem;
    for (int a = 0; a < 5; ++a)
        if (s.mul(a, a) == a) idem.push_back(a);
    auto down_set = [&](int g) {
        std::set<int> out;
        for (int h : idem)
            if (s.mul(g, h) == h && s.mul(h, g) == h) out.insert(h);
        return out;
    };
    FiniteAlgebra m;
    for (int e : idem) {
        if (e == 0) {
            m.elements.push_back("0");
        } else {
            int i = (e - 1) / 2 + 1, l = (e - 1) % 2 + 1;
            m.elements.push_back("e" + std::to_string(i) + std::to_string(l));
        }
    }
    m.table.assign(idem.size(), std::vector<int>(idem.size(), -1));
    for (std::size_t a = 0; a < idem.size(); ++a) {
        for (std::size_t b = 0; b < idem.size(); ++b) {
            int e = idem[a], f = idem[b];
            std::set<int> wanted;
            for (int g : idem)
                if (s.mul(e, g) == g && s.mul(g, f) == g) wanted.insert(g);
            int found = -1;
            for (std::size_t c = 0; c < idem.size(); ++c) {
                if (down_set(idem[c]) == wanted) {
                    if (found >= 0) throw std::logic_error("meet is not unique");
                    found = static_cast<int>(c);
                }
            }
            if (found < 0) throw std::logic_error("meet does not exist");
            m.table[a][b] = found;
        }
    }
    m.validate();
    return m;
}

} // namespace fpsl

#pragma once

#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace fpsl {

using Symbol = std::string;

/// A term of the free binary algebra over a set of variable symbols:
/// either a single variable or the meet of two subterms. Terms are
/// immutable and shared; all operations on them are pure.
class Term;
using TermPtr = std::shared_ptr<const Term>;

class Term {
public:
    static TermPtr leaf(Symbol var) {
        if (var.empty()) throw std::invalid_argument("empty variable symbol");
        return std::make_shared<const Term>(Private{}, std::move(var), nullptr, nullptr);
    }
    static TermPtr meet(TermPtr left, TermPtr right) {
        if (!left || !right) throw std::invalid_argument("null subterm");
        return std::make_shared<const Term>(Private{}, Symbol{}, std::move(left), std::move(right));
    }

    bool is_leaf() const { return left_ == nullptr; }
    const Symbol& var() const { return var_; }
    const TermPtr& left() const { return left_; }
    const TermPtr& right() const { return right_; }

    /// Number of leaves.
    int size() const {
        return is_leaf() ? 1 : left_->size() + right_->size();
    }

private:
    struct Private {};

public:
    Term(Private, Symbol var, TermPtr left, TermPtr right)
        : var_(std::move(var)), left_(std::move(left)), right_(std::move(right)) {}

private:
    Symbol var_;
    TermPtr left_, right_;
};

inline TermPtr leaf(Symbol v) { return Term::leaf(std::move(v)); }
inline TermPtr meet(TermPtr l, TermPtr r) { return Term::meet(std::move(l), std::move(r)); }

inline bool equal_terms(const TermPtr& a, const TermPtr& b) {
    if (a.get() == b.get()) return true;
    if (a->is_leaf() != b->is_leaf()) return false;
    if (a->is_leaf()) return a->var() == b->var();
    return equal_terms(a->left(), b->left()) && equal_terms(a->right(), b->right());
}

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

namespace detail {

inline bool is_var_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
inline bool is_var_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class TermParser {
public:
    explicit TermParser(std::string_view text) : text_(text) {}

    TermPtr parse() {
        TermPtr t = term();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return t;
    }

private:
    // term := factor { "^" factor } ; left-associative
    TermPtr term() {
        TermPtr t = factor();
        for (;;) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '^') {
                ++pos_;
                t = meet(t, factor());
            } else {
                return t;
            }
        }
    }

    TermPtr factor() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            TermPtr t = term();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ')')
                throw ParseError("expected ')'", pos_);
            ++pos_;
            return t;
        }
        if (is_var_start(c)) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && is_var_char(text_[pos_])) ++pos_;
            return leaf(Symbol(text_.substr(start, pos_ - start)));
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline TermPtr parse_term(std::string_view text) {
    return detail::TermParser(text).parse();
}

/// Fully parenthesized rendering; parse_term(format_term(t)) == t.
inline std::string format_term(const TermPtr& t) {
    if (t->is_leaf()) return t->var();
    return "(" + format_term(t->left()) + "^" + format_term(t->right()) + ")";
}

/// The combinatorial invariants of a term: outermost letters, contents
/// and the 2-content (set of letter pairs (l of u', r of v') collected
/// over all subterm meets, plus the diagonal pairs of the letters).
struct InvariantRecord {
    Symbol l, r;
    std::set<Symbol> co, co_l, co_r;
    std::set<std::pair<Symbol, Symbol>> co2;

    bool sps_triple_equal(const InvariantRecord& o) const {
        return l == o.l && r == o.r && co2 == o.co2;
    }
};

namespace detail {

inline void collect_invariants(const TermPtr& t, InvariantRecord& rec, bool is_left_child,
                               bool is_right_child) {
    if (t->is_leaf()) {
        rec.co.insert(t->var());
        rec.co2.insert({t->var(), t->var()});
        if (is_left_child) rec.co_l.insert(t->var());
        if (is_right_child) rec.co_r.insert(t->var());
        return;
    }
    collect_invariants(t->left(), rec, true, false);
    collect_invariants(t->right(), rec, false, true);
}

inline Symbol leftmost(const TermPtr& t) {
    return t->is_leaf() ? t->var() : leftmost(t->left());
}
inline Symbol rightmost(const TermPtr& t) {
    return t->is_leaf() ? t->var() : rightmost(t->right());
}

// co2(u^v) = co2(u) ∪ {(l(u), r(v))} ∪ co2(v)
inline void collect_co2(const TermPtr& t, std::set<std::pair<Symbol, Symbol>>& co2) {
    if (t->is_leaf()) {
        co2.insert({t->var(), t->var()});
        return;
    }
    collect_co2(t->left(), co2);
    co2.insert({leftmost(t->left()), rightmost(t->right())});
    collect_co2(t->right(), co2);
}

} // namespace detail

inline InvariantRecord term_invariants(const TermPtr& t) {
    InvariantRecord rec;
    rec.l = detail::leftmost(t);
    rec.r = detail::rightmost(t);
    detail::collect_invariants(t, rec, false, false);
    rec.co2.clear();
    detail::collect_co2(t, rec.co2);
    return rec;
}

/// Map from symbols to replacement terms; identity on unlisted symbols.
using Substitution = std::map<Symbol, TermPtr>;

inline TermPtr substitute(const TermPtr& t, const Substitution& s) {
    if (t->is_leaf()) {
        auto it = s.find(t->var());
        return it == s.end() ? t : it->second;
    }
    return meet(substitute(t->left(), s), substitute(t->right(), s));
}

} // namespace fpsl

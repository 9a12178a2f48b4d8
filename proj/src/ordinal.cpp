#include "otype/ordinal.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <functional>
#include <map>
#include <ostream>

#include "otype/error.hpp"

namespace otype {

namespace {

std::atomic<std::size_t> g_max_depth{64};

void check_depth(const Ordinal& a) {
    if (a.nesting_depth() > g_max_depth.load()) {
        throw ResourceError("ordinal nesting depth " + std::to_string(a.nesting_depth()) +
                            " exceeds the limit of " + std::to_string(g_max_depth.load()));
    }
}

}  // namespace

std::size_t max_nesting_depth() { return g_max_depth.load(); }
void set_max_nesting_depth(std::size_t depth) { g_max_depth.store(depth); }

Ordinal::Ordinal(Natural n) {
    if (n < 0) {
        throw DomainError("ordinals are nonnegative");
    }
    if (n != 0) {
        terms_.push_back(Term{Ordinal(), std::move(n)});
    }
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].coefficient <= 0) {
            throw DomainError("CNF coefficient must be positive");
        }
        if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent)) {
            throw DomainError("CNF exponents must be strictly decreasing");
        }
    }
    Ordinal r;
    r.terms_ = std::move(terms);
    return r;
}

Ordinal Ordinal::omega_power(const Ordinal& exponent, const Natural& coefficient) {
    if (coefficient < 0) {
        throw DomainError("ordinals are nonnegative");
    }
    if (coefficient == 0) {
        return {};
    }
    Ordinal r;
    r.terms_.push_back(Term{exponent, coefficient});
    check_depth(r);
    return r;
}

bool Ordinal::is_finite() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().exponent.is_zero());
}

bool Ordinal::is_limit() const { return !terms_.empty() && !terms_.back().exponent.is_zero(); }

bool Ordinal::is_successor() const { return !terms_.empty() && terms_.back().exponent.is_zero(); }

Natural Ordinal::finite_value() const {
    if (!is_finite()) {
        throw DomainError("ordinal " + str() + " is not finite");
    }
    return terms_.empty() ? Natural(0) : terms_.front().coefficient;
}

Natural Ordinal::finite_tail() const {
    return is_successor() ? terms_.back().coefficient : Natural(0);
}

std::size_t Ordinal::nesting_depth() const {
    if (is_finite()) {
        return 0;
    }
    std::size_t deepest = 0;
    for (const auto& t : terms_) {
        deepest = std::max(deepest, t.exponent.nesting_depth());
    }
    return deepest + 1;
}

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) {
    const auto& x = a.terms();
    const auto& y = b.terms();
    const std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = compare(x[i].exponent, y[i].exponent); c != 0) {
            return c;
        }
        if (x[i].coefficient != y[i].coefficient) {
            return x[i].coefficient < y[i].coefficient ? std::strong_ordering::less
                                                       : std::strong_ordering::greater;
        }
    }
    return x.size() <=> y.size();
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) { return compare(a, b); }

Ordinal add(const Ordinal& a, const Ordinal& b) {
    if (b.is_zero()) {
        return a;
    }
    const auto& lead = b.terms().front();
    std::vector<Ordinal::Term> out;
    for (const auto& t : a.terms()) {
        auto c = compare(t.exponent, lead.exponent);
        if (c > 0) {
            out.push_back(t);
        } else {
            if (c == 0) {
                out.push_back({lead.exponent, t.coefficient + lead.coefficient});
            }
            break;
        }
    }
    const bool merged = !out.empty() && out.back().exponent == lead.exponent;
    auto rest = b.terms().begin() + (merged ? 1 : 0);
    out.insert(out.end(), rest, b.terms().end());
    return Ordinal::from_terms(std::move(out));
}

Ordinal mul(const Ordinal& a, const Ordinal& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    // a * w^g = w^(a0 + g) for g > 0; a * n = w^a0 * (k0 * n) + sigma.
    const auto& lead = a.terms().front();
    std::vector<Ordinal::Term> out;
    for (const auto& t : b.terms()) {
        if (!t.exponent.is_zero()) {
            out.push_back({add(lead.exponent, t.exponent), t.coefficient});
        } else {
            out.push_back({lead.exponent, lead.coefficient * t.coefficient});
            out.insert(out.end(), a.terms().begin() + 1, a.terms().end());
        }
    }
    return Ordinal::from_terms(std::move(out));
}

Ordinal nat_sum(const Ordinal& a, const Ordinal& b) {
    const auto& x = a.terms();
    const auto& y = b.terms();
    std::vector<Ordinal::Term> out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size()) {
            out.push_back(x[i++]);
        } else if (i == x.size()) {
            out.push_back(y[j++]);
        } else {
            auto c = compare(x[i].exponent, y[j].exponent);
            if (c > 0) {
                out.push_back(x[i++]);
            } else if (c < 0) {
                out.push_back(y[j++]);
            } else {
                out.push_back({x[i].exponent, x[i].coefficient + y[j].coefficient});
                ++i;
                ++j;
            }
        }
    }
    return Ordinal::from_terms(std::move(out));
}

Ordinal nat_prod(const Ordinal& a, const Ordinal& b) {
    std::map<Ordinal, Natural, std::greater<>> acc;
    for (const auto& s : a.terms()) {
        for (const auto& t : b.terms()) {
            acc[nat_sum(s.exponent, t.exponent)] += s.coefficient * t.coefficient;
        }
    }
    std::vector<Ordinal::Term> out;
    out.reserve(acc.size());
    for (auto& [e, c] : acc) {
        out.push_back({e, std::move(c)});
    }
    return Ordinal::from_terms(std::move(out));
}

DeltaSplit split_delta_m(const Ordinal& a) {
    if (!a.is_successor()) {
        return {a, 0};
    }
    std::vector<Ordinal::Term> head(a.terms().begin(), a.terms().end() - 1);
    return {Ordinal::from_terms(std::move(head)), a.terms().back().coefficient};
}

const Ordinal& leading_exponent(const Ordinal& a) {
    if (a.is_zero()) {
        throw DomainError("leading_exponent of 0");
    }
    return a.terms().front().exponent;
}

const Ordinal& trailing_exponent(const Ordinal& a) {
    if (a.is_zero()) {
        throw DomainError("trailing_exponent of 0");
    }
    return a.terms().back().exponent;
}

const Natural& leading_coefficient(const Ordinal& a) {
    if (a.is_zero()) {
        throw DomainError("leading_coefficient of 0");
    }
    return a.terms().front().coefficient;
}

Ordinal tail_sigma(const Ordinal& a) {
    if (a.terms().size() <= 1) {
        return {};
    }
    return Ordinal::from_terms({a.terms().begin() + 1, a.terms().end()});
}

// ---------------------------------------------------------------------------
// Text form

std::string Ordinal::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& t : terms_) {
        if (!out.empty()) {
            out += '+';
        }
        if (t.exponent.is_zero()) {
            out += t.coefficient.str();
            continue;
        }
        out += 'w';
        if (t.exponent != Ordinal(1)) {
            out += '^';
            if (t.exponent.is_finite() || t.exponent == Ordinal::omega()) {
                out += t.exponent.str();
            } else {
                out += '(' + t.exponent.str() + ')';
            }
        }
        if (t.coefficient != 1) {
            out += '*' + t.coefficient.str();
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Ordinal& a) { return os << a.str(); }

namespace {

class LiteralParser {
public:
    explicit LiteralParser(std::string_view text) : text_(text) {}

    Ordinal parse_all() {
        Ordinal r = parse_sum(0);
        skip_ws();
        if (pos_ != text_.size()) {
            throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        }
        return r;
    }

private:
    Ordinal parse_sum(std::size_t depth) {
        if (depth > g_max_depth.load()) {
            throw ResourceError("ordinal literal nested deeper than " +
                                std::to_string(g_max_depth.load()));
        }
        Ordinal r = parse_term(depth);
        while (accept('+')) {
            r = add(r, parse_term(depth));
        }
        return r;
    }

    Ordinal parse_term(std::size_t depth) {
        skip_ws();
        if (peek_digit()) {
            return Ordinal(parse_nat());
        }
        if (!accept('w')) {
            throw ParseError(at_end() ? "unexpected end of input" : "expected a term", pos_);
        }
        Ordinal exponent(1);
        if (accept('^')) {
            skip_ws();
            if (accept('(')) {
                exponent = parse_sum(depth + 1);
                expect(')');
            } else if (accept('w')) {
                exponent = Ordinal::omega();
            } else if (peek_digit()) {
                exponent = Ordinal(parse_nat());
            } else {
                throw ParseError("expected exponent", pos_);
            }
        }
        Natural coefficient = 1;
        if (accept('*')) {
            skip_ws();
            std::size_t at = pos_;
            if (!peek_digit()) {
                throw ParseError("expected coefficient", pos_);
            }
            coefficient = parse_nat();
            if (coefficient == 0) {
                throw ParseError("zero coefficient", at);
            }
        }
        return Ordinal::omega_power(exponent, coefficient);
    }

    Natural parse_nat() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        return Natural(std::string(text_.substr(start, pos_ - start)));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }
    bool at_end() const { return pos_ >= text_.size(); }
    bool peek_digit() {
        skip_ws();
        return !at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }
    bool accept(char c) {
        skip_ws();
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) {
            throw ParseError(std::string("expected '") + c + "'", pos_);
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Ordinal Ordinal::parse(std::string_view text) { return LiteralParser(text).parse_all(); }

}  // namespace otype

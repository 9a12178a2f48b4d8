#include <cctype>
#include <string>

#include "otype/error.hpp"
#include "otype/wpo_term.hpp"

namespace otype {

namespace {

constexpr std::size_t kMaxLiteralPoset = 4096;

class TermParser {
public:
    explicit TermParser(std::string_view text) : text_(text) {}

    WpoTerm parse_all() {
        WpoTerm t = expr(0);
        skip_ws();
        if (pos_ != text_.size()) {
            throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        }
        return t;
    }

private:
    WpoTerm expr(std::size_t depth) {
        WpoTerm t = product(depth);
        for (;;) {
            skip_ws();
            if (text_.substr(pos_).starts_with("(+)")) {
                pos_ += 3;
                t = WpoTerm::disjoint_union(t, product(depth));
            } else if (accept('+')) {
                t = WpoTerm::lex_sum(t, product(depth));
            } else {
                return t;
            }
        }
    }

    WpoTerm product(std::size_t depth) {
        WpoTerm t = atom(depth);
        while (accept('.')) {
            t = WpoTerm::lex_product(t, atom(depth));
        }
        return t;
    }

    WpoTerm atom(std::size_t depth) {
        skip_ws();
        if (depth > 256) {
            throw ResourceError("expression nested too deeply");
        }
        const std::size_t start = pos_;
        if (accept('(')) {
            WpoTerm t = expr(depth + 1);
            expect(')');
            return t;
        }
        std::string word;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            word += text_[pos_++];
        }
        if (word.empty()) {
            throw ParseError(pos_ >= text_.size() ? "unexpected end of input" : "expected a term",
                             pos_);
        }
        expect('(');
        if (word == "ord") {
            return WpoTerm::ord(ordinal_literal());
        }
        if (word == "chain" || word == "antichain") {
            const std::size_t n = size_literal();
            expect(')');
            return WpoTerm::fin(word == "chain" ? FinitePoset::chain(n)
                                                : FinitePoset::antichain(n));
        }
        if (word == "poset") {
            return WpoTerm::fin(poset_literal());
        }
        throw ParseError("unknown constructor '" + word + "'", start);
    }

    Ordinal ordinal_literal() {
        const std::size_t start = pos_;
        int open = 1;
        while (pos_ < text_.size()) {
            if (text_[pos_] == '(') {
                ++open;
            } else if (text_[pos_] == ')' && --open == 0) {
                break;
            }
            ++pos_;
        }
        if (open != 0) {
            throw ParseError("unterminated ord(", pos_);
        }
        const std::string_view literal = text_.substr(start, pos_ - start);
        ++pos_;
        try {
            return Ordinal::parse(literal);
        } catch (const ParseError& e) {
            throw ParseError(e.detail(), start + e.position());
        }
    }

    FinitePoset poset_literal() {
        const std::size_t n = size_literal();
        std::vector<Edge> edges;
        if (accept(';')) {
            skip_ws();
            while (!at(')')) {
                std::size_t prev = element(n);
                if (!accept('<')) {
                    throw ParseError("expected '<'", pos_);
                }
                do {
                    std::size_t next = element(n);
                    edges.emplace_back(prev, next);
                    prev = next;
                } while (accept('<'));
                if (!accept(',')) {
                    break;
                }
            }
        }
        const std::size_t close = pos_;
        expect(')');
        try {
            return FinitePoset::from_edges(n, edges);
        } catch (const InvalidOrderError& e) {
            throw ParseError(e.what(), close);
        }
    }

    std::size_t element(std::size_t n) {
        skip_ws();
        const std::size_t at_pos = pos_;
        const std::size_t e = size_literal();
        if (e >= n) {
            throw ParseError("element " + std::to_string(e) + " out of range", at_pos);
        }
        return e;
    }

    std::size_t size_literal() {
        skip_ws();
        const std::size_t start = pos_;
        std::size_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
            if (value > kMaxLiteralPoset) {
                throw ResourceError("poset literals are limited to " +
                                    std::to_string(kMaxLiteralPoset) + " elements");
            }
            ++pos_;
        }
        if (pos_ == start) {
            throw ParseError("expected a number", pos_);
        }
        return value;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }
    bool at(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    bool accept(char c) {
        if (at(c)) {
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

WpoTerm WpoTerm::parse(std::string_view text) { return TermParser(text).parse_all(); }

}  // namespace otype

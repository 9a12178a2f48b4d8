#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "otype/finite_poset.hpp"
#include "otype/ordinal.hpp"

namespace otype {

/// An expression denoting a well partial order.
///
///   fin(P)              a finite poset
///   ord(a)              the ordinal a as a chain
///   disjoint_union(A,B) A and B side by side, no cross relations
///   lex_sum(A,B)        every element of A below every element of B
///   lex_product(P,Q)    P.Q: pairs (p,q) compared on q first, then on p
///
/// Terms are immutable trees with shared subterms.
class WpoTerm {
public:
    enum class Kind { Fin, Ord, Union, Sum, Prod };

    /// The empty poset.
    WpoTerm();

    static WpoTerm fin(FinitePoset p);
    static WpoTerm ord(Ordinal a);
    static WpoTerm disjoint_union(WpoTerm left, WpoTerm right);
    static WpoTerm lex_sum(WpoTerm low, WpoTerm high);
    /// P.Q with P = base and Q = index; the index coordinate is compared first.
    static WpoTerm lex_product(WpoTerm base, WpoTerm index);

    /// Parses the expression syntax
    ///   expr := prod (("+" | "(+)") prod)*        lex sum / disjoint union, left-assoc
    ///   prod := atom ("." atom)*                  lex product, binds tighter
    ///   atom := "(" expr ")" | "ord(" ordinal ")" | "chain(" n ")" | "antichain(" n ")"
    ///         | "poset(" n [";" a "<" b ("<" c)* ("," ...)*] ")"
    /// Throws ParseError with the offending position.
    static WpoTerm parse(std::string_view text);

    Kind kind() const;
    /// Fin only.
    const FinitePoset& poset() const;
    /// Ord only.
    const Ordinal& ordinal() const;
    /// Union/Sum/Prod: left is the union's left side, the sum's low part, the product's base.
    const WpoTerm& left() const;
    /// Union/Sum/Prod: right is the union's right side, the sum's high part, the product's index.
    const WpoTerm& right() const;

    /// Canonical expression text, parseable by parse().
    std::string str() const;

private:
    struct Node;
    explicit WpoTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// o(T) = delta + m with k maximal elements.
struct DeltaMK {
    Ordinal delta;
    Natural m;
    Natural k;

    /// delta is 0 or a limit, m >= k, and k == 0 iff m == 0.
    bool valid() const;
    Ordinal order_type() const { return add(delta, Ordinal(m)); }
    friend bool operator==(const DeltaMK&, const DeltaMK&) = default;
};

/// Maximal order type, evaluated compositionally:
///   fin -> |P|, ord(a) -> a, sum -> +, union -> natural sum, product -> vialard.
Ordinal o_of(const WpoTerm& t);

/// Number of maximal elements.
Natural max_count(const WpoTerm& t);

/// (delta, m) from o_of, k from max_count. Throws std::logic_error if the
/// result breaks m >= k or (k == 0 iff m == 0), which would indicate a bug.
DeltaMK delta_mk(const WpoTerm& t);

/// o(P.Q) = o(P) * (delta + (m - k)) + o(P) (x) k  for o(Q) = delta + m with k maxima.
/// DomainError if `index` is not a valid decomposition.
Ordinal vialard(const Ordinal& base, const DeltaMK& index);

/// The same value through the CNF expansion
///   o(P) * delta + w^b0 * (k0 * m) + sigma (x) k,   o(P) = w^b0 * k0 + sigma.
Ordinal vialard_expanded(const Ordinal& base, const DeltaMK& index);

/// One node of the recursion that evaluates o(P.Q) for a finite index Q by
/// splitting Q the way the induction does.
struct ProofTrace {
    enum class Rule {
        Empty,       ///< Q empty: 0
        TopSplit,    ///< one maximal element: o(P.Q_bot) + o(P)
        MaxSplit,    ///< k > 1: o(P.Q') (+) o(P.Q'')
    };
    Rule rule = Rule::Empty;
    std::size_t size = 0;  ///< |Q|
    std::size_t k = 0;     ///< maximal elements of Q
    Ordinal value;
    std::vector<ProofTrace> children;

    /// Indented tree, one line per node.
    std::string render() const;
};

ProofTrace proof_trace(const Ordinal& base, const FinitePoset& index);
Ordinal proof_trace_o(const Ordinal& base, const FinitePoset& index);

/// True iff every leaf is a finite poset or a finite ordinal.
bool is_finite_term(const WpoTerm& t);

/// The finite poset a finite term denotes. Unions and sums label the left
/// operand first; products use the lex_product encoding.
/// DomainError on an infinite ordinal leaf.
FinitePoset expand_finite(const WpoTerm& t);

}  // namespace otype

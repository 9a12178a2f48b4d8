#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace otype {

using Element = std::size_t;
using Edge = std::pair<Element, Element>;

/// Default cap on the element count for materialized linear-extension enumeration.
inline constexpr std::size_t kDefaultEnumerationCap = 10;

/// A finite strict partial order on the labels 0..n-1, stored transitively closed.
class FinitePoset {
public:
    FinitePoset() = default;

    /// Transitive closure of `edges`; InvalidOrderError if the closure has a cycle,
    /// DomainError if an edge mentions a label >= n.
    static FinitePoset from_edges(std::size_t n, std::span<const Edge> edges);
    static FinitePoset from_edges(std::size_t n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }
    static FinitePoset chain(std::size_t n);
    static FinitePoset antichain(std::size_t n);

    std::size_t size() const { return n_; }
    bool empty() const { return n_ == 0; }

    /// x <_P y
    bool less(Element x, Element y) const { return lt_[x * n_ + y] != 0; }
    bool comparable(Element x, Element y) const { return x == y || less(x, y) || less(y, x); }

    /// All pairs (x, y) with x < y, in row-major order.
    std::vector<Edge> relations() const;

    /// Restriction to `subset` (relabelled 0..|subset|-1 in the given order).
    FinitePoset restrict_to(std::span<const Element> subset) const;

    std::string str() const;

    friend bool operator==(const FinitePoset&, const FinitePoset&) = default;

private:
    FinitePoset(std::size_t n, std::vector<std::uint8_t> lt) : n_(n), lt_(std::move(lt)) {}

    std::size_t n_ = 0;
    std::vector<std::uint8_t> lt_;  // n_ * n_ row-major, closed
};

/// A partition of a poset's elements into a lower and an upper side.
struct Cut {
    std::vector<Element> lower;
    std::vector<Element> upper;
};

/// A poset obtained from a parent together with the parent label of each element.
struct SubPoset {
    FinitePoset poset;
    std::vector<Element> labels;
};

/// Sorted labels of the elements with no strict upper bound.
std::vector<Element> maximal_elements(const FinitePoset& p);

/// Every linear extension as a permutation of labels, in lexicographic order.
/// ResourceError if the poset is larger than `cap`.
std::vector<std::vector<Element>> linear_extensions(const FinitePoset& p,
                                                    std::size_t cap = kDefaultEnumerationCap);

/// Number of linear extensions by dynamic programming over down-sets (no enumeration).
/// ResourceError above 20 elements.
std::uint64_t count_linear_extensions(const FinitePoset& p);

/// True iff `order` is a permutation of the elements extending p.
bool is_linear_extension(const FinitePoset& p, std::span<const Element> order);

/// True iff no element of c.upper lies strictly below an element of c.lower.
/// DomainError if c does not partition the elements of p.
bool is_cut(const FinitePoset& p, const Cut& c);

/// P.Q on pairs (p, q) encoded as q * |P| + p:
///   (p0,q0) < (p1,q1)  iff  q0 <_Q q1  or  (q0 == q1 and p0 <_P p1).
FinitePoset lex_product(const FinitePoset& p, const FinitePoset& q);
inline Element product_element(const FinitePoset& p, Element pe, Element qe) {
    return qe * p.size() + pe;
}
inline std::pair<Element, Element> product_pair(const FinitePoset& p, Element e) {
    return {e % p.size(), e / p.size()};
}

/// P's elements keep their labels, Q's are shifted by |P|. No cross relations.
FinitePoset disjoint_union(const FinitePoset& p, const FinitePoset& q);
/// Same labelling as disjoint_union, with every P element below every Q element.
FinitePoset lex_sum(const FinitePoset& p, const FinitePoset& q);

/// Q_bot / Q_top: the non-maximal elements and the maximal elements.
struct TopSplit {
    SubPoset bottom;
    SubPoset top;
    Cut cut() const { return {bottom.labels, top.labels}; }
};
TopSplit split_top(const FinitePoset& q);

/// Q' / Q'': Q'' holds the least-labelled maximal element q1 and every element
/// below q1 that is not below any other maximal element; Q' is the rest.
struct MaxSplit {
    SubPoset prime;
    SubPoset second;
    Cut cut() const { return {prime.labels, second.labels}; }
};
/// DomainError if q has fewer than two maximal elements.
MaxSplit split_first_max(const FinitePoset& q);

/// Every poset on n labelled elements (all transitively closed acyclic relations).
/// Intended for exhaustive tests; n <= 4.
std::vector<FinitePoset> all_posets(std::size_t n);

}  // namespace otype

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "otype/finite_poset.hpp"
#include "otype/ordinal.hpp"
#include "otype/wpo_term.hpp"

namespace otype {

/// Names a chain-shaped component of a term (see component_model).
using SourceTag = std::string;

/// "The next `block` elements of component `source`, in its own order."
struct Segment {
    SourceTag source;
    Ordinal block;

    friend bool operator==(const Segment&, const Segment&) = default;
};

/// An explicit linearization: segments listed in linear order.
/// claimed_type is the ordinary sum of the blocks.
struct Witness {
    std::vector<Segment> segments;
    Ordinal claimed_type;

    static Witness from_segments(std::vector<Segment> segments);
    std::string str() const;

    friend bool operator==(const Witness&, const Witness&) = default;
};

/// A term seen as a finite family of chains. `order` relates whole chains:
/// order.less(a, b) means every element of chain a is below every element of b,
/// otherwise distinct chains are incomparable.
///
/// Tags: a finite poset element i is "i", an ordinal leaf is "*", the operands
/// of a sum or union prefix "0." and "1.", and a product copy for index
/// element q appends "@q".
struct ComponentModel {
    struct Component {
        SourceTag tag;
        Ordinal length;
    };
    std::vector<Component> components;
    FinitePoset order;

    std::optional<std::size_t> find(const SourceTag& tag) const;
    bool is_finite() const;
    /// Elements numbered chain by chain. DomainError if some chain is infinite.
    FinitePoset expand() const;
};

/// DomainError if the term has a product whose index is not finite.
ComponentModel component_model(const WpoTerm& t);

/// Low then high; sources are prefixed like the sum's components.
Witness witness_lex_sum(const Witness& low, const Witness& high);

/// Linearization of alpha . antichain(k) realizing alpha (x) k: for each CNF term
/// of alpha, that term's block from copy 0, copy 1, ..., copy k-1.
/// DomainError if k == 0 or alpha == 0.
Witness witness_product_antichain(const Ordinal& alpha, std::size_t k);

/// One singleton segment per element of `extension`, a linear extension of model.expand().
Witness witness_from_extension(const ComponentModel& model, std::span<const Element> extension);

inline constexpr std::size_t kDefaultRankCap = 16;

struct ValidationReport {
    bool passed = false;
    Ordinal claimed_type;
    std::vector<Segment> segments;
    std::size_t elements = 0;       ///< materialized elements
    std::size_t pairs_checked = 0;
    std::string failure;            ///< empty on success

    std::string text() const;
    std::string json() const;
};

/// Checks that `w` linearizes `t`: the blocks of each component add up to that
/// component, and on the materialized elements (the first `rank_cap` of each
/// segment plus the starts of its CNF blocks and its last element) the witness
/// order extends the order of `t`. A passing report certifies o(t) >= claimed_type.
/// Unsupported term shapes raise DomainError.
ValidationReport validate_witness(const Witness& w, const WpoTerm& t,
                                  std::size_t rank_cap = kDefaultRankCap);

/// Every witness obtained by transposing two segments in a way that breaks a
/// component's own order: two different blocks of the same component, or a
/// segment moved ahead of one from a component below it.
std::vector<Witness> transposition_mutants(const Witness& w, const ComponentModel& model);

}  // namespace otype

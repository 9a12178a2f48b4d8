#pragma once

#include <cstddef>
#include <random>

#include "otype/finite_poset.hpp"
#include "otype/ordinal.hpp"
#include "otype/wpo_term.hpp"

namespace otype {

using Rng = std::mt19937_64;

/// Random generators for the property suites. Every draw depends only on the
/// generator state, so a fixed seed reproduces a run.
namespace gen {

/// CNF ordinal with nesting_depth() <= depth, at most `max_terms` terms and
/// coefficients in 1..max_coeff. May be 0.
Ordinal ordinal(Rng& rng, std::size_t depth = 2, unsigned max_coeff = 5, std::size_t max_terms = 3);
Ordinal nonzero_ordinal(Rng& rng, std::size_t depth = 2, unsigned max_coeff = 5);
/// Zero or a limit ordinal.
Ordinal limit_or_zero(Rng& rng, std::size_t depth = 2, unsigned max_coeff = 5);
/// A nonzero limit ordinal.
Ordinal limit(Rng& rng, std::size_t depth = 2, unsigned max_coeff = 5);

/// A poset on 0..n-1 with n uniform in [min_n, max_n].
FinitePoset poset(Rng& rng, std::size_t min_n, std::size_t max_n);

/// A term of height <= depth with finite posets of <= 6 elements and ordinal
/// leaves of nesting depth <= 2 with coefficients <= 5.
WpoTerm term(Rng& rng, std::size_t depth = 4);
/// A nonempty term without maximal elements.
WpoTerm term_without_maxima(Rng& rng, std::size_t depth = 3);

/// A valid (delta, m, k) triple: delta limit or 0, 0 <= k <= m, k == 0 iff m == 0.
DeltaMK delta_mk(Rng& rng, std::size_t depth = 2, unsigned max_m = 6);

}  // namespace gen
}  // namespace otype

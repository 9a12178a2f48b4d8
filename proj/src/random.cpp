#include "otype/random.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace otype::gen {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

}  // namespace

Ordinal ordinal(Rng& rng, std::size_t depth, unsigned max_coeff, std::size_t max_terms) {
    if (depth == 0) {
        return Ordinal(Natural(uniform(rng, 0, max_coeff)));
    }
    const std::size_t n = uniform(rng, 0, max_terms);
    std::vector<Ordinal> exponents;
    for (std::size_t i = 0; i < n; ++i) {
        // exponents stay small so products remain cheap
        exponents.push_back(coin(rng, 0.6) ? Ordinal(Natural(uniform(rng, 0, 3)))
                                           : ordinal(rng, depth - 1, 3, 2));
    }
    std::sort(exponents.begin(), exponents.end(), std::greater<>());
    exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());
    std::vector<Ordinal::Term> terms;
    for (auto& e : exponents) {
        terms.push_back({std::move(e), Natural(uniform(rng, 1, max_coeff))});
    }
    return Ordinal::from_terms(std::move(terms));
}

Ordinal nonzero_ordinal(Rng& rng, std::size_t depth, unsigned max_coeff) {
    for (;;) {
        Ordinal a = ordinal(rng, depth, max_coeff);
        if (!a.is_zero()) {
            return a;
        }
    }
}

Ordinal limit_or_zero(Rng& rng, std::size_t depth, unsigned max_coeff) {
    return split_delta_m(ordinal(rng, depth, max_coeff)).delta;
}

Ordinal limit(Rng& rng, std::size_t depth, unsigned max_coeff) {
    for (;;) {
        Ordinal a = limit_or_zero(rng, std::max<std::size_t>(depth, 1), max_coeff);
        if (!a.is_zero()) {
            return a;
        }
    }
}

FinitePoset poset(Rng& rng, std::size_t min_n, std::size_t max_n) {
    const std::size_t n = uniform(rng, min_n, max_n);
    std::vector<Element> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const double density = std::uniform_real_distribution<double>(0.0, 0.6)(rng);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (coin(rng, density)) {
                edges.emplace_back(perm[i], perm[j]);
            }
        }
    }
    return FinitePoset::from_edges(n, edges);
}

WpoTerm term(Rng& rng, std::size_t depth) {
    const std::size_t choice = depth == 0 ? uniform(rng, 0, 1) : uniform(rng, 0, 4);
    switch (choice) {
        case 0:
            return WpoTerm::fin(poset(rng, 0, 6));
        case 1:
            return WpoTerm::ord(ordinal(rng, 2, 5));
        case 2:
            return WpoTerm::disjoint_union(term(rng, depth - 1), term(rng, depth - 1));
        case 3:
            return WpoTerm::lex_sum(term(rng, depth - 1), term(rng, depth - 1));
        default:
            return WpoTerm::lex_product(term(rng, depth - 1), term(rng, depth - 1));
    }
}

WpoTerm term_without_maxima(Rng& rng, std::size_t depth) {
    const std::size_t choice = depth == 0 ? 0 : uniform(rng, 0, 4);
    switch (choice) {
        case 0:
            return WpoTerm::ord(limit(rng));
        case 1:
            return WpoTerm::disjoint_union(term_without_maxima(rng, depth - 1),
                                           term_without_maxima(rng, depth - 1));
        case 2:
            return WpoTerm::lex_sum(term(rng, depth - 1), term_without_maxima(rng, depth - 1));
        case 3: {
            WpoTerm base = term(rng, depth - 1);
            while (o_of(base).is_zero()) {
                base = term(rng, depth - 1);
            }
            return WpoTerm::lex_product(base, term_without_maxima(rng, depth - 1));
        }
        default: {
            // nonempty base keeps the product nonempty
            WpoTerm base = term_without_maxima(rng, depth - 1);
            return WpoTerm::lex_product(base, WpoTerm::fin(poset(rng, 1, 4)));
        }
    }
}

DeltaMK delta_mk(Rng& rng, std::size_t depth, unsigned max_m) {
    DeltaMK d;
    d.delta = limit_or_zero(rng, depth);
    const std::size_t m = uniform(rng, 0, max_m);
    d.m = m;
    d.k = m == 0 ? 0 : uniform(rng, 1, m);
    return d;
}

}  // namespace otype::gen

#pragma once

// Test-only reference arithmetic for ordinals below w^w, written without the
// library's CNF routines. An ordinal w^e0*c0 + ... with natural exponents is a
// map exponent -> coefficient.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "otype/ordinal.hpp"

namespace oracle {

using Poly = std::map<unsigned, std::uint64_t, std::greater<>>;

inline Poly random_poly(std::mt19937_64& rng, unsigned max_exp = 2, unsigned max_coeff = 5) {
    Poly p;
    std::uniform_int_distribution<unsigned> exp(0, max_exp);
    std::uniform_int_distribution<std::uint64_t> coeff(1, max_coeff);
    const unsigned n = std::uniform_int_distribution<unsigned>(0, 3)(rng);
    for (unsigned i = 0; i < n; ++i) {
        p[exp(rng)] = coeff(rng);
    }
    return p;
}

/// Builds the library value by parsing text, not through from_terms.
inline otype::Ordinal to_ordinal(const Poly& p) {
    if (p.empty()) {
        return otype::Ordinal::parse("0");
    }
    std::string text;
    for (auto [e, c] : p) {
        if (!text.empty()) {
            text += " + ";
        }
        text += "w^" + std::to_string(e) + "*" + std::to_string(c);
    }
    return otype::Ordinal::parse(text);
}

/// Ordinary sum: terms of a below b's leading exponent vanish.
inline Poly add(const Poly& a, const Poly& b) {
    if (b.empty()) {
        return a;
    }
    const unsigned lead = b.begin()->first;
    Poly out;
    for (auto [e, c] : a) {
        if (e >= lead) {
            out[e] = c;
        }
    }
    for (auto [e, c] : b) {
        out[e] += c;
    }
    return out;
}

/// a * n as n-fold repeated ordinary sum.
inline Poly mul_finite(const Poly& a, unsigned n) {
    Poly out;
    for (unsigned i = 0; i < n; ++i) {
        out = add(out, a);
    }
    return out;
}

inline Poly nat_sum(const Poly& a, const Poly& b) {
    Poly out = a;
    for (auto [e, c] : b) {
        out[e] += c;
    }
    return out;
}

inline Poly nat_prod(const Poly& a, const Poly& b) {
    Poly out;
    for (auto [ea, ca] : a) {
        for (auto [eb, cb] : b) {
            out[ea + eb] += ca * cb;
        }
    }
    return out;
}

/// Substitutes w := base. Order-preserving (and a homomorphism for the natural
/// operations) while every coefficient stays below `base`.
inline std::uint64_t substitute(const Poly& p, std::uint64_t base = 1000) {
    std::uint64_t v = 0;
    for (auto [e, c] : p) {
        if (c >= base) {
            throw std::logic_error("coefficient exceeds substitution base");
        }
        std::uint64_t pw = 1;
        for (unsigned i = 0; i < e; ++i) {
            pw *= base;
        }
        v += c * pw;
    }
    return v;
}

}  // namespace oracle

#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace otype {

/// Arbitrary-precision natural number used for CNF coefficients and counts.
using Natural = boost::multiprecision::cpp_int;

/// An ordinal below epsilon_0 in Cantor normal form.
///
/// The value is the sum  w^e0 * c0 + w^e1 * c1 + ... + w^en * cn  with
/// e0 > e1 > ... > en and every ci >= 1. The empty term list is 0. Every
/// constructor normalizes eagerly, so two ordinals are equal iff their term
/// lists are identical and equality is structural.
///
/// Values are immutable once built and can be shared freely between threads.
class Ordinal {
public:
    struct Term;

    /// Zero.
    Ordinal() = default;
    /// The finite ordinal n.
    Ordinal(Natural n);  // NOLINT(google-explicit-constructor)
    template <std::integral I>
    Ordinal(I n) : Ordinal(Natural(n)) {}  // NOLINT(google-explicit-constructor)

    /// Builds from a term list that must already be in Cantor normal form.
    /// Throws DomainError on a zero coefficient or non-decreasing exponents.
    static Ordinal from_terms(std::vector<Term> terms);

    /// w^exponent * coefficient; coefficient 0 gives 0.
    static Ordinal omega_power(const Ordinal& exponent, const Natural& coefficient = 1);
    static Ordinal omega() { return omega_power(Ordinal(1)); }

    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_finite() const;
    /// Nonzero and without an exponent-0 term.
    bool is_limit() const;
    bool is_successor() const;

    /// The value of a finite ordinal; DomainError otherwise.
    Natural finite_value() const;

    /// Coefficient of the exponent-0 term (0 when absent).
    Natural finite_tail() const;

    /// Exponent nesting height: 0 for finite ordinals, otherwise one more than
    /// the deepest exponent (w*3+1 has depth 1, w^w has depth 2).
    std::size_t nesting_depth() const;

    /// Canonical text, e.g. "w^2*3+w+4", "w^(w+1)", "0".
    std::string str() const;

    /// Parses the literal grammar
    ///   ordinal := term ("+" term)*
    ///   term    := "0" | nat | "w" ("^" "(" ordinal ")" | "^" simple)? ("*" nat)?
    ///   simple  := "w" | nat
    /// Whitespace is ignored between tokens. `+` is the ordinary ordinal sum,
    /// so non-decreasing term sequences are absorbed ("1+w" is w).
    static Ordinal parse(std::string_view text);

    friend bool operator==(const Ordinal&, const Ordinal&) = default;
    friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

private:
    std::vector<Term> terms_;
};

struct Ordinal::Term {
    Ordinal exponent;
    Natural coefficient;

    friend bool operator==(const Term&, const Term&) = default;
};

std::ostream& operator<<(std::ostream& os, const Ordinal& a);

std::strong_ordering compare(const Ordinal& a, const Ordinal& b);

/// Ordinary (non-commutative) ordinal sum.
Ordinal add(const Ordinal& a, const Ordinal& b);
/// Ordinary ordinal product; a*b means "b copies of a".
Ordinal mul(const Ordinal& a, const Ordinal& b);
/// Hessenberg natural sum: CNF terms merged like polynomials.
Ordinal nat_sum(const Ordinal& a, const Ordinal& b);
/// Hessenberg natural product: CNF polynomials multiplied, exponents combined with nat_sum.
Ordinal nat_prod(const Ordinal& a, const Ordinal& b);

inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return add(a, b); }
inline Ordinal operator*(const Ordinal& a, const Ordinal& b) { return mul(a, b); }

/// a = delta + m with delta zero or a limit, m finite.
struct DeltaSplit {
    Ordinal delta;
    Natural m;
};
DeltaSplit split_delta_m(const Ordinal& a);

/// Exponent of the first CNF term. DomainError for 0.
const Ordinal& leading_exponent(const Ordinal& a);
/// Exponent of the last CNF term. DomainError for 0.
const Ordinal& trailing_exponent(const Ordinal& a);
/// Coefficient of the first CNF term. DomainError for 0.
const Natural& leading_coefficient(const Ordinal& a);
/// Everything after the leading CNF term (0 for 0 and for single-term ordinals).
Ordinal tail_sigma(const Ordinal& a);

/// Maximum exponent nesting accepted by parse and omega_power.
std::size_t max_nesting_depth();
void set_max_nesting_depth(std::size_t depth);

}  // namespace otype

#include "otype/checks.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "otype/error.hpp"
#include "otype/finite_poset.hpp"
#include "otype/ordinal.hpp"
#include "otype/random.hpp"
#include "otype/witness.hpp"
#include "otype/wpo_term.hpp"

namespace otype::checks {

namespace {

/// Counts cases and keeps the smallest failing description.
class Log {
public:
    void pass() { ++cases_; }

    void fail(std::string what) {
        ++cases_;
        ++failures_;
        if (smallest_.empty() || what.size() < smallest_.size()) {
            smallest_ = std::move(what);
        }
    }

    void expect(bool ok, const std::function<std::string()>& describe) {
        if (ok) {
            pass();
        } else {
            fail(describe());
        }
    }

    std::size_t cases() const { return cases_; }
    std::size_t failures() const { return failures_; }
    const std::string& smallest() const { return smallest_; }

private:
    std::size_t cases_ = 0;
    std::size_t failures_ = 0;
    std::string smallest_;
};

Rng seeded(const SuiteOptions& o, std::uint64_t salt) {
    std::seed_seq seq{static_cast<std::uint32_t>(o.seed), static_cast<std::uint32_t>(o.seed >> 32),
                      static_cast<std::uint32_t>(salt)};
    return Rng(seq);
}

const Ordinal& omega() {
    static const Ordinal w = Ordinal::omega();
    return w;
}

// -- individual suites ------------------------------------------------------

void counterexample(const SuiteOptions& o, Log& log) {
    const Ordinal base = add(omega(), Ordinal(1));
    const WpoTerm product =
        WpoTerm::lex_product(WpoTerm::ord(base), WpoTerm::fin(FinitePoset::antichain(2)));
    const Ordinal expected = Ordinal::parse("w*2+2");
    const Ordinal naive = mul(base, Ordinal(2));

    const Ordinal got = o_of(product);
    log.expect(got == expected, [&] { return "o((w+1).antichain(2)) = " + got.str(); });
    log.expect(naive == Ordinal::parse("w*2+1"),
               [&] { return "(w+1)*2 = " + naive.str(); });
    log.expect(expected > naive, [] { return "w*2+2 is not above w*2+1"; });
    const Ordinal traced = proof_trace_o(base, FinitePoset::antichain(2));
    log.expect(traced == expected, [&] { return "proof trace gives " + traced.str(); });

    const Witness w = witness_product_antichain(base, 2);
    const auto report = validate_witness(w, product, o.cap.value_or(20));
    log.expect(report.passed && report.claimed_type == expected,
               [&] { return "witness: " + report.text(); });
}

void k0_law(const SuiteOptions& o, Log& log) {
    Rng rng = seeded(o, 2);
    const std::size_t n = o.cases.value_or(1000);
    for (std::size_t i = 0; i < n; ++i) {
        const WpoTerm base = i % 2 == 0 ? WpoTerm::ord(gen::ordinal(rng, 2)) : gen::term(rng, 2);
        const WpoTerm index = gen::term_without_maxima(rng);
        const WpoTerm product = WpoTerm::lex_product(base, index);
        const DeltaMK d = delta_mk(index);
        const Ordinal lhs = o_of(product);
        const Ordinal rhs = mul(o_of(base), o_of(index));
        log.expect(d.k == 0 && lhs == rhs, [&] {
            return product.str() + ": k=" + d.k.str() + " o=" + lhs.str() +
                   " but o(P)*o(Q)=" + rhs.str();
        });
    }
}

void proof_trace_suite(const SuiteOptions& o, Log& log) {
    Rng rng = seeded(o, 3);
    const std::size_t n = o.cases.value_or(500);
    for (std::size_t i = 0; i < n; ++i) {
        const Ordinal base = gen::ordinal(rng, 2);
        const FinitePoset q = gen::poset(rng, 0, 8);
        const Ordinal traced = proof_trace_o(base, q);
        const Ordinal formula = vialard(base, delta_mk(WpoTerm::fin(q)));
        log.expect(traced == formula, [&] {
            return "base " + base.str() + ", Q " + q.str() + ": trace " + traced.str() +
                   " vs formula " + formula.str();
        });
    }
}

void check_splits(const FinitePoset& q, Log& log) {
    const std::size_t k = maximal_elements(q).size();
    const auto top = split_top(q);
    log.expect(is_cut(q, top.cut()) && maximal_elements(top.top.poset).size() == k &&
                   top.top.poset.relations().empty(),
               [&] { return "split_top of " + q.str(); });
    if (k >= 2) {
        const auto ms = split_first_max(q);
        log.expect(is_cut(q, ms.cut()) && maximal_elements(ms.prime.poset).size() == k - 1 &&
                       maximal_elements(ms.second.poset).size() == 1,
                   [&] { return "split_first_max of " + q.str(); });
    }
}

void brute_force(const SuiteOptions& o, Log& log) {
    const std::size_t cap = o.cap.value_or(kDefaultEnumerationCap);
    std::vector<FinitePoset> catalog;
    for (std::size_t n = 0; n <= 3; ++n) {
        for (auto& p : all_posets(n)) {
            catalog.push_back(std::move(p));
        }
    }
    for (const auto& q : catalog) {
        check_splits(q, log);
    }
    for (const auto& p : catalog) {
        for (const auto& q : catalog) {
            const std::size_t size = p.size() * q.size();
            if (size > 9) {
                continue;
            }
            const WpoTerm term = WpoTerm::lex_product(WpoTerm::fin(p), WpoTerm::fin(q));
            const FinitePoset expanded = expand_finite(term);
            const auto where = [&] { return p.str() + " . " + q.str(); };
            log.expect(expanded.size() == size && expanded == lex_product(p, q),
                       [&] { return where() + ": expansion mismatch"; });

            const auto extensions = linear_extensions(expanded, cap);
            bool all_ok = !extensions.empty();
            for (const auto& e : extensions) {
                all_ok = all_ok && e.size() == size && is_linear_extension(expanded, e);
            }
            log.expect(all_ok && extensions.size() == count_linear_extensions(expanded),
                       [&] { return where() + ": bad linear extension"; });
            log.expect(o_of(term) == Ordinal(Natural(size)),
                       [&] { return where() + ": o = " + o_of(term).str(); });

            const std::size_t maxima =
                maximal_elements(p).size() * maximal_elements(q).size();
            std::vector<Element> expected_max;
            for (Element qe : maximal_elements(q)) {
                for (Element pe : maximal_elements(p)) {
                    expected_max.push_back(product_element(p, pe, qe));
                }
            }
            std::sort(expected_max.begin(), expected_max.end());
            log.expect(maximal_elements(expanded) == expected_max &&
                           max_count(term) == Natural(maxima),
                       [&] { return where() + ": maximal elements"; });
            check_splits(expanded, log);

            if (!extensions.empty()) {
                // unit-length chains numbered like the lex_product encoding
                const ComponentModel model = component_model(term);
                log.expect(model.expand() == expanded,
                           [&] { return where() + ": component model differs"; });
                const Witness w = witness_from_extension(model, extensions.back());
                const auto report = validate_witness(w, term);
                log.expect(report.passed && report.claimed_type == o_of(term),
                           [&] { return where() + ": " + report.text(); });
            }
        }
    }
}

void structure(const SuiteOptions& o, Log& log) {
    Rng rng = seeded(o, 5);
    const std::size_t n = o.cases.value_or(1000);
    for (std::size_t i = 0; i < n; ++i) {
        const WpoTerm t = gen::term(rng, 4);
        try {
            const DeltaMK d = delta_mk(t);
            const Ordinal a = o_of(t);
            bool ok = d.valid();
            if (d.k == 0 && !a.is_zero()) {
                ok = ok && a.is_limit();
            }
            if (d.k >= 1) {
                ok = ok && a.finite_tail() > 0;
            }
            // brute-force cross-check when the term is small and finite
            if (ok && is_finite_term(t) && a <= Ordinal(64)) {
                const FinitePoset e = expand_finite(t);
                ok = Ordinal(Natural(e.size())) == a &&
                     Natural(maximal_elements(e).size()) == d.k;
            }
            log.expect(ok, [&] {
                return t.str() + ": delta=" + d.delta.str() + " m=" + d.m.str() +
                       " k=" + d.k.str();
            });
        } catch (const std::logic_error& e) {
            log.fail(e.what());
        }
    }
}

void absorption(const SuiteOptions& o, Log& log) {
    Rng rng = seeded(o, 6);
    const std::size_t n = o.cases.value_or(1000);
    std::size_t accepted = 0;
    while (accepted < n) {
        const Ordinal a = gen::nonzero_ordinal(rng, 2);
        const Ordinal b = gen::nonzero_ordinal(rng, 2);
        const Ordinal sum = add(a, b);
        const Ordinal natural = nat_sum(a, b);
        if (trailing_exponent(a) >= leading_exponent(b)) {
            ++accepted;
            log.expect(sum == natural, [&] {
                return a.str() + " + " + b.str() + " = " + sum.str() + " but (+) gives " +
                       natural.str();
            });
        } else if (sum >= natural) {
            // below the boundary the last term of a is absorbed
            log.fail(a.str() + " + " + b.str() + " not below the natural sum");
        }
    }
}

void expansion(const SuiteOptions& o, Log& log) {
    Rng rng = seeded(o, 7);
    const std::size_t n = o.cases.value_or(1000);
    for (std::size_t i = 0; i < n; ++i) {
        const Ordinal base = gen::ordinal(rng, 2);
        const DeltaMK d = gen::delta_mk(rng);
        const Ordinal direct = vialard(base, d);
        const Ordinal expanded = vialard_expanded(base, d);
        log.expect(direct == expanded, [&] {
            return "base " + base.str() + " delta=" + d.delta.str() + " m=" + d.m.str() +
                   " k=" + d.k.str() + ": " + direct.str() + " vs " + expanded.str();
        });
        if (base.is_zero()) {
            continue;
        }
        bool ok = true;
        for (unsigned k = 1; k <= 10 && ok; ++k) {
            const Ordinal lhs = mul(base, Ordinal(k));
            const Ordinal rhs =
                add(Ordinal::omega_power(leading_exponent(base), leading_coefficient(base) * k),
                    tail_sigma(base));
            ok = lhs == rhs;
        }
        log.expect(ok, [&] { return "a*n expansion fails for a=" + base.str(); });
    }
}

void monotonicity(const SuiteOptions& o, Log& log) {
    Rng rng = seeded(o, 8);
    const std::size_t n = o.cases.value_or(500);
    for (std::size_t i = 0; i < n; ++i) {
        const Ordinal base = gen::nonzero_ordinal(rng, 2);
        DeltaMK lo = gen::delta_mk(rng);
        DeltaMK hi = gen::delta_mk(rng);
        while (lo.order_type() == hi.order_type()) {
            hi = gen::delta_mk(rng);
        }
        if (hi.order_type() < lo.order_type()) {
            std::swap(lo, hi);
        }
        const Ordinal a = vialard(base, lo);
        const Ordinal b = vialard(base, hi);
        log.expect(a < b, [&] {
            return "base " + base.str() + ": o(Q)=" + lo.order_type().str() + " (k=" +
                   lo.k.str() + ") gives " + a.str() + ", o(Q)=" + hi.order_type().str() +
                   " (k=" + hi.k.str() + ") gives " + b.str();
        });
    }
}

void witness_suite(const SuiteOptions& o, Log& log) {
    const std::size_t cap = o.cap.value_or(kDefaultRankCap);
    const std::vector<Ordinal> exponents{omega(), Ordinal(2), Ordinal(1), Ordinal(0)};
    // every alpha with exponents drawn from `exponents` and coefficients <= 3
    for (unsigned code = 1; code < 256; ++code) {
        std::vector<Ordinal::Term> terms;
        for (std::size_t e = 0; e < exponents.size(); ++e) {
            const unsigned c = (code >> (2 * e)) & 3u;
            if (c != 0) {
                terms.push_back({exponents[e], c});
            }
        }
        const Ordinal alpha = Ordinal::from_terms(std::move(terms));
        for (std::size_t k = 1; k <= 4; ++k) {
            const WpoTerm term = WpoTerm::lex_product(WpoTerm::ord(alpha),
                                                      WpoTerm::fin(FinitePoset::antichain(k)));
            const Witness w = witness_product_antichain(alpha, k);
            const Ordinal target = nat_prod(alpha, Ordinal(static_cast<int>(k)));
            const auto report = validate_witness(w, term, cap);
            log.expect(w.claimed_type == target && target == o_of(term) && report.passed, [&] {
                return alpha.str() + " x " + std::to_string(k) + ": claimed " +
                       w.claimed_type.str() + ", alpha (x) k = " + target.str() + "; " +
                       report.failure;
            });
            const ComponentModel model = component_model(term);
            for (const auto& mutant : transposition_mutants(w, model)) {
                log.expect(!validate_witness(mutant, term, cap).passed,
                           [&] { return "mutant accepted: " + mutant.str(); });
            }
        }
    }
}

struct Suite {
    std::string name;
    std::string title;
    void (*run)(const SuiteOptions&, Log&);
};

const std::vector<Suite>& registry() {
    static const std::vector<Suite> suites{
        {"counterexample", "o((w+1).antichain(2)) = w*2+2 > (w+1)*2", counterexample},
        {"k0-law", "index without maxima: o(P.Q) = o(P)*o(Q)", k0_law},
        {"proof-trace", "formula equals proof-trace recursion on finite Q", proof_trace_suite},
        {"brute-force", "finite products against linear-extension enumeration", brute_force},
        {"structure", "o = delta+m with m >= k and k = 0 iff m = 0", structure},
        {"absorption", "ordinary sum equals natural sum when exponents do not overlap",
         absorption},
        {"expansion", "formula equals its CNF expansion", expansion},
        {"monotonicity", "formula strictly increasing in o(Q)", monotonicity},
        {"witness", "antichain-product witnesses realize alpha (x) k", witness_suite},
    };
    return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& s : registry()) {
            out.push_back(s.name);
        }
        return out;
    }();
    return names;
}

SuiteResult run_suite(std::string_view name, const SuiteOptions& options) {
    for (const auto& s : registry()) {
        if (s.name != name) {
            continue;
        }
        Log log;
        const auto start = std::chrono::steady_clock::now();
        s.run(options, log);
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        SuiteResult r;
        r.name = s.name;
        r.title = s.title;
        r.passed = log.failures() == 0;
        r.cases = log.cases();
        r.failures = log.failures();
        r.counterexample = log.smallest();
        r.seconds = elapsed.count();
        return r;
    }
    throw DomainError("unknown suite '" + std::string(name) + "'");
}

std::vector<SuiteResult> run_all(const SuiteOptions& options) {
    std::vector<SuiteResult> out;
    for (const auto& name : suite_names()) {
        out.push_back(run_suite(name, options));
    }
    return out;
}

}  // namespace otype::checks

#include "otype/cli.hpp"

#include <CLI11.hpp>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "otype/checks.hpp"
#include "otype/error.hpp"
#include "otype/witness.hpp"
#include "otype/wpo_term.hpp"

namespace otype::cli {

namespace {

using nlohmann::json;

struct Options {
    bool json = false;
    std::uint64_t seed = 0;
    std::optional<std::size_t> cases;
    std::optional<std::size_t> cap;
};

json natural_json(const Natural& n) {
    if (n <= std::numeric_limits<std::uint64_t>::max()) {
        return n.convert_to<std::uint64_t>();
    }
    return n.str();
}

json trace_json(const ProofTrace& t) {
    static const char* rules[] = {"empty", "top-split", "max-split"};
    json children = json::array();
    for (const auto& c : t.children) {
        children.push_back(trace_json(c));
    }
    return {{"rule", rules[static_cast<int>(t.rule)]},
            {"size", t.size},
            {"k", t.k},
            {"value", t.value.str()},
            {"children", children}};
}

const char* ordering_name(std::strong_ordering c) {
    return c < 0 ? "less" : c > 0 ? "greater" : "equal";
}

int cmd_eval(const std::string& expr, const Options& o, std::ostream& out) {
    const WpoTerm t = WpoTerm::parse(expr);
    const Ordinal v = o_of(t);
    if (o.json) {
        out << json{{"expr", t.str()}, {"o", v.str()}}.dump() << '\n';
    } else {
        out << v << '\n';
    }
    return kOk;
}

int cmd_decompose(const std::string& expr, const Options& o, std::ostream& out) {
    const WpoTerm t = WpoTerm::parse(expr);
    const DeltaMK d = delta_mk(t);
    if (o.json) {
        out << json{{"expr", t.str()},
                    {"o", d.order_type().str()},
                    {"delta", d.delta.str()},
                    {"m", natural_json(d.m)},
                    {"k", natural_json(d.k)}}
                   .dump()
            << '\n';
    } else {
        out << "delta=" << d.delta << " m=" << d.m << " k=" << d.k << '\n';
    }
    return kOk;
}

int cmd_compare(const std::string& a, const std::string& b, const Options& o, std::ostream& out) {
    const Ordinal x = o_of(WpoTerm::parse(a));
    const Ordinal y = o_of(WpoTerm::parse(b));
    const char* result = ordering_name(compare(x, y));
    if (o.json) {
        out << json{{"left", x.str()}, {"right", y.str()}, {"result", result}}.dump() << '\n';
    } else {
        out << result << '\n';
    }
    return kOk;
}

int cmd_trace(const std::string& expr, const Options& o, std::ostream& out) {
    const WpoTerm t = WpoTerm::parse(expr);
    if (t.kind() != WpoTerm::Kind::Prod) {
        throw DomainError("trace expects a product P . Q");
    }
    const Ordinal base = o_of(t.left());
    const FinitePoset index = expand_finite(t.right());
    const ProofTrace trace = proof_trace(base, index);
    const Ordinal formula = vialard(base, delta_mk(t.right()));
    if (o.json) {
        out << json{{"expr", t.str()},
                    {"base", base.str()},
                    {"index", index.str()},
                    {"trace", trace_json(trace)},
                    {"formula", formula.str()}}
                   .dump()
            << '\n';
    } else {
        out << "o(P) = " << base << ", Q = " << index.str() << '\n'
            << trace.render() << "formula: " << formula << '\n';
    }
    return kOk;
}

int cmd_check(const std::string& suite, const Options& o, std::ostream& out) {
    checks::SuiteOptions so{o.seed, o.cases, o.cap};
    std::vector<checks::SuiteResult> results;
    if (suite == "all") {
        results = checks::run_all(so);
    } else {
        results.push_back(checks::run_suite(suite, so));
    }
    bool ok = true;
    json arr = json::array();
    for (const auto& r : results) {
        ok = ok && r.passed;
        if (o.json) {
            json j{{"suite", r.name},    {"passed", r.passed},   {"cases", r.cases},
                   {"failures", r.failures}, {"seconds", r.seconds}, {"seed", o.seed}};
            if (!r.passed) {
                j["counterexample"] = r.counterexample;
            }
            arr.push_back(j);
            continue;
        }
        out << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(15) << r.name
            << " cases=" << r.cases << " failures=" << r.failures << " " << std::fixed
            << std::setprecision(3) << r.seconds << "s  " << r.title << '\n';
        if (!r.passed) {
            out << "  counterexample: " << r.counterexample << '\n';
        }
    }
    if (o.json) {
        out << arr.dump() << '\n';
    } else {
        out << "seed " << o.seed << '\n';
    }
    return ok ? kOk : kSuiteFailure;
}

int cmd_counterexample(const Options& o, std::ostream& out) {
    const Ordinal base = add(Ordinal::omega(), Ordinal(1));
    const WpoTerm index = WpoTerm::fin(FinitePoset::antichain(2));
    const WpoTerm product = WpoTerm::lex_product(WpoTerm::ord(base), index);
    const Ordinal actual = o_of(product);
    const Ordinal naive = mul(base, o_of(index));
    const ValidationReport report =
        validate_witness(witness_product_antichain(base, 2), product, o.cap.value_or(20));
    if (o.json) {
        out << json{{"expr", product.str()},
                    {"o", actual.str()},
                    {"naive", naive.str()},
                    {"comparison", ordering_name(compare(actual, naive))},
                    {"witness", json::parse(report.json())}}
                   .dump()
            << '\n';
    } else {
        out << "o(" << product.str() << ") = " << actual << '\n'
            << "o(w+1) * o(antichain(2)) = " << naive << '\n'
            << actual << (actual > naive ? " > " : " <= ") << naive << '\n'
            << report.text();
    }
    return report.passed && actual > naive ? kOk : kSuiteFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Maximal order types of well partial orders", "otype"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opts;
    std::size_t cases = 0;
    std::size_t cap = 0;
    app.add_flag("--json", opts.json, "machine-readable output");
    app.add_option("--seed", opts.seed, "seed for randomized suites")->capture_default_str();
    auto* cases_opt = app.add_option("--cases", cases, "case count for randomized suites");
    auto* cap_opt = app.add_option("--cap", cap, "enumeration cap or witness rank cap");

    std::string expr;
    std::string other;
    std::string suite;
    auto* eval = app.add_subcommand("eval", "print o(EXPR) in Cantor normal form");
    eval->add_option("expr", expr)->required();
    auto* decompose = app.add_subcommand("decompose", "print delta, m, k of o(EXPR)");
    decompose->add_option("expr", expr)->required();
    auto* cmp = app.add_subcommand("compare", "compare o(A) with o(B)");
    cmp->add_option("a", expr)->required();
    cmp->add_option("b", other)->required();
    auto* trace = app.add_subcommand("trace", "proof-trace recursion for P . Q with finite Q");
    trace->add_option("expr", expr)->required();
    auto* check = app.add_subcommand("check", "run a property suite (or all)");
    check->add_option("suite", suite)->required();
    auto* cex = app.add_subcommand("counterexample", "o((w+1).antichain(2)) vs o(w+1)*2");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }
    if (*cases_opt) {
        opts.cases = cases;
    }
    if (*cap_opt) {
        opts.cap = cap;
    }

    try {
        if (*eval) {
            return cmd_eval(expr, opts, out);
        }
        if (*decompose) {
            return cmd_decompose(expr, opts, out);
        }
        if (*cmp) {
            return cmd_compare(expr, other, opts, out);
        }
        if (*trace) {
            return cmd_trace(expr, opts, out);
        }
        if (*check) {
            return cmd_check(suite, opts, out);
        }
        if (*cex) {
            return cmd_counterexample(opts, out);
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.detail() << " at position " << e.position() << '\n';
        if (!expr.empty() && other.empty()) {
            err << "  " << expr << '\n' << "  " << std::string(e.position(), ' ') << "^\n";
        }
        return kUsageError;
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << '\n';
        return kResourceError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace otype::cli

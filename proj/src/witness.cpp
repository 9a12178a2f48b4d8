#include "otype/witness.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "otype/error.hpp"

namespace otype {

Witness Witness::from_segments(std::vector<Segment> segments) {
    Ordinal total;
    for (const auto& s : segments) {
        total = add(total, s.block);
    }
    return {std::move(segments), std::move(total)};
}

std::string Witness::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < segments.size(); ++i) {
        os << (i ? ", " : "") << segments[i].block << " from " << segments[i].source;
    }
    os << "] : " << claimed_type;
    return os.str();
}

// ---------------------------------------------------------------------------
// Component model

std::optional<std::size_t> ComponentModel::find(const SourceTag& tag) const {
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (components[i].tag == tag) {
            return i;
        }
    }
    return std::nullopt;
}

bool ComponentModel::is_finite() const {
    return std::all_of(components.begin(), components.end(),
                       [](const Component& c) { return c.length.is_finite(); });
}

FinitePoset ComponentModel::expand() const {
    std::vector<std::size_t> start;
    std::size_t n = 0;
    for (const auto& c : components) {
        if (!c.length.is_finite()) {
            throw DomainError("component " + c.tag + " is infinite");
        }
        start.push_back(n);
        n += c.length.finite_value().convert_to<std::size_t>();
    }
    start.push_back(n);
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < components.size(); ++a) {
        for (std::size_t x = start[a]; x + 1 < start[a + 1]; ++x) {
            edges.emplace_back(x, x + 1);
        }
        for (std::size_t b = 0; b < components.size(); ++b) {
            if (order.less(a, b) && start[a] < start[a + 1] && start[b] < start[b + 1]) {
                edges.emplace_back(start[a + 1] - 1, start[b]);
            }
        }
    }
    return FinitePoset::from_edges(n, edges);
}

namespace {

ComponentModel prefixed(ComponentModel m, const std::string& prefix) {
    for (auto& c : m.components) {
        c.tag = prefix + c.tag;
    }
    return m;
}

}  // namespace

ComponentModel component_model(const WpoTerm& t) {
    ComponentModel out;
    switch (t.kind()) {
        case WpoTerm::Kind::Fin:
            for (Element e = 0; e < t.poset().size(); ++e) {
                out.components.push_back({std::to_string(e), Ordinal(1)});
            }
            out.order = t.poset();
            return out;
        case WpoTerm::Kind::Ord:
            if (!t.ordinal().is_zero()) {
                out.components.push_back({"*", t.ordinal()});
            }
            out.order = FinitePoset::antichain(out.components.size());
            return out;
        case WpoTerm::Kind::Union:
        case WpoTerm::Kind::Sum: {
            ComponentModel l = prefixed(component_model(t.left()), "0.");
            ComponentModel r = prefixed(component_model(t.right()), "1.");
            out.components = std::move(l.components);
            out.components.insert(out.components.end(), r.components.begin(),
                                  r.components.end());
            out.order = t.kind() == WpoTerm::Kind::Sum ? lex_sum(l.order, r.order)
                                                       : disjoint_union(l.order, r.order);
            return out;
        }
        case WpoTerm::Kind::Prod: {
            if (!is_finite_term(t.right())) {
                throw DomainError("witness validation needs a finite product index, got " +
                                  t.right().str());
            }
            ComponentModel base = component_model(t.left());
            FinitePoset index = expand_finite(t.right());
            for (Element q = 0; q < index.size(); ++q) {
                for (const auto& c : base.components) {
                    out.components.push_back({c.tag + "@" + std::to_string(q), c.length});
                }
            }
            out.order = lex_product(base.order, index);
            return out;
        }
    }
    throw DomainError("unsupported term");
}

// ---------------------------------------------------------------------------
// Constructions

Witness witness_lex_sum(const Witness& low, const Witness& high) {
    std::vector<Segment> segs;
    for (const auto& s : low.segments) {
        segs.push_back({"0." + s.source, s.block});
    }
    for (const auto& s : high.segments) {
        segs.push_back({"1." + s.source, s.block});
    }
    Witness w{std::move(segs), add(low.claimed_type, high.claimed_type)};
    return w;
}

Witness witness_product_antichain(const Ordinal& alpha, std::size_t k) {
    if (k == 0 || alpha.is_zero()) {
        throw DomainError("witness_product_antichain needs k >= 1 and alpha > 0");
    }
    std::vector<Segment> segs;
    for (const auto& term : alpha.terms()) {
        const Ordinal block = Ordinal::omega_power(term.exponent, term.coefficient);
        for (std::size_t copy = 0; copy < k; ++copy) {
            segs.push_back({"*@" + std::to_string(copy), block});
        }
    }
    return Witness::from_segments(std::move(segs));
}

Witness witness_from_extension(const ComponentModel& model, std::span<const Element> extension) {
    std::vector<std::size_t> owner;
    for (std::size_t c = 0; c < model.components.size(); ++c) {
        const auto len = model.components[c].length.finite_value().convert_to<std::size_t>();
        owner.insert(owner.end(), len, c);
    }
    std::vector<Segment> segs;
    for (Element e : extension) {
        if (e >= owner.size()) {
            throw DomainError("extension mentions element " + std::to_string(e) +
                              " outside the model");
        }
        segs.push_back({model.components[owner[e]].tag, Ordinal(1)});
    }
    return Witness::from_segments(std::move(segs));
}

// ---------------------------------------------------------------------------
// Validation

namespace {

/// Offsets of `block` that get materialized.
std::vector<Ordinal> sample_offsets(const Ordinal& block, std::size_t cap) {
    std::vector<Ordinal> out;
    auto push = [&](const Ordinal& o) {
        if (o < block) {
            out.push_back(o);
        }
    };
    for (std::size_t i = 0; i < cap; ++i) {
        push(Ordinal(Natural(i)));
    }
    Ordinal prefix;
    for (const auto& term : block.terms()) {
        const Natural copies = std::min<Natural>(term.coefficient, Natural(cap));
        for (Natural r = 0; r < copies; ++r) {
            const Ordinal start = add(prefix, Ordinal::omega_power(term.exponent, r));
            push(start);
            push(add(start, Ordinal(1)));
        }
        prefix = add(prefix, Ordinal::omega_power(term.exponent, term.coefficient));
    }
    if (block.is_successor()) {
        auto [delta, m] = split_delta_m(block);
        push(add(delta, Ordinal(m - 1)));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct Materialized {
    std::size_t component;
    Ordinal position;  // within the component
};

ValidationReport fail(ValidationReport r, std::string why) {
    r.passed = false;
    r.failure = std::move(why);
    return r;
}

}  // namespace

ValidationReport validate_witness(const Witness& w, const WpoTerm& t, std::size_t rank_cap) {
    const ComponentModel model = component_model(t);
    ValidationReport report;
    report.claimed_type = w.claimed_type;
    report.segments = w.segments;

    Ordinal total;
    for (const auto& s : w.segments) {
        total = add(total, s.block);
    }
    if (total != w.claimed_type) {
        return fail(report, "claimed type " + w.claimed_type.str() +
                                " differs from the block sum " + total.str());
    }

    // Assign each segment its interval inside its component.
    std::vector<Ordinal> filled(model.components.size());
    std::vector<Materialized> elems;  // in witness order
    for (std::size_t i = 0; i < w.segments.size(); ++i) {
        const auto& s = w.segments[i];
        auto c = model.find(s.source);
        if (!c) {
            return fail(report, "segment " + std::to_string(i) + " names unknown component '" +
                                    s.source + "'");
        }
        if (s.block.is_zero()) {
            return fail(report, "segment " + std::to_string(i) + " is empty");
        }
        for (const auto& off : sample_offsets(s.block, rank_cap)) {
            elems.push_back({*c, add(filled[*c], off)});
        }
        filled[*c] = add(filled[*c], s.block);
        if (filled[*c] > model.components[*c].length) {
            return fail(report, "component '" + s.source + "' overrun: " + filled[*c].str() +
                                    " > " + model.components[*c].length.str());
        }
    }
    for (std::size_t c = 0; c < model.components.size(); ++c) {
        if (filled[c] != model.components[c].length) {
            return fail(report, "component '" + model.components[c].tag + "' covered up to " +
                                    filled[c].str() + " of " +
                                    model.components[c].length.str());
        }
    }

    report.elements = elems.size();
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = i + 1; j < elems.size(); ++j) {
            ++report.pairs_checked;
            const auto& a = elems[i];
            const auto& b = elems[j];
            const bool inverted = a.component == b.component
                                      ? !(a.position < b.position)
                                      : model.order.less(b.component, a.component);
            if (inverted) {
                return fail(report, "element " + b.position.str() + " of '" +
                                        model.components[b.component].tag +
                                        "' is listed after element " + a.position.str() +
                                        " of '" + model.components[a.component].tag +
                                        "' but must precede it");
            }
        }
    }
    report.passed = true;
    return report;
}

std::string ValidationReport::text() const {
    std::ostringstream os;
    os << "witness " << (passed ? "PASS" : "FAIL") << "  claimed " << claimed_type << '\n';
    for (std::size_t i = 0; i < segments.size(); ++i) {
        os << "  " << i << ": " << segments[i].block << " from " << segments[i].source << '\n';
    }
    os << "  materialized " << elements << " elements, " << pairs_checked << " pairs checked\n";
    if (!passed) {
        os << "  failure: " << failure << '\n';
    }
    return os.str();
}

std::string ValidationReport::json() const {
    nlohmann::json segs = nlohmann::json::array();
    for (const auto& s : segments) {
        segs.push_back({{"source", s.source}, {"block", s.block.str()}});
    }
    nlohmann::json j{{"passed", passed},
                     {"claimed_type", claimed_type.str()},
                     {"segments", segs},
                     {"elements", elements},
                     {"pairs_checked", pairs_checked}};
    if (!passed) {
        j["failure"] = failure;
    }
    return j.dump();
}

std::vector<Witness> transposition_mutants(const Witness& w, const ComponentModel& model) {
    std::vector<Witness> out;
    const auto& segs = w.segments;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            bool breaks = false;
            if (segs[i].source == segs[j].source) {
                breaks = segs[i].block != segs[j].block;
            } else {
                auto a = model.find(segs[i].source);
                auto b = model.find(segs[j].source);
                breaks = a && b && model.order.less(*a, *b);
            }
            if (!breaks) {
                continue;
            }
            auto mutated = segs;
            std::swap(mutated[i], mutated[j]);
            out.push_back(Witness::from_segments(std::move(mutated)));
        }
    }
    return out;
}

}  // namespace otype

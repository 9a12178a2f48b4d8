#include "otype/wpo_term.hpp"

#include <sstream>
#include <stdexcept>

#include "otype/error.hpp"

namespace otype {

struct WpoTerm::Node {
    Kind kind = Kind::Fin;
    FinitePoset poset;
    Ordinal value;
    std::vector<WpoTerm> children;
};

WpoTerm::WpoTerm() : node_(std::make_shared<const Node>()) {}

WpoTerm WpoTerm::fin(FinitePoset p) {
    return WpoTerm(std::make_shared<const Node>(Node{Kind::Fin, std::move(p), {}, {}}));
}

WpoTerm WpoTerm::ord(Ordinal a) {
    return WpoTerm(std::make_shared<const Node>(Node{Kind::Ord, {}, std::move(a), {}}));
}

WpoTerm WpoTerm::disjoint_union(WpoTerm left, WpoTerm right) {
    return WpoTerm(std::make_shared<const Node>(
        Node{Kind::Union, {}, {}, {std::move(left), std::move(right)}}));
}

WpoTerm WpoTerm::lex_sum(WpoTerm low, WpoTerm high) {
    return WpoTerm(
        std::make_shared<const Node>(Node{Kind::Sum, {}, {}, {std::move(low), std::move(high)}}));
}

WpoTerm WpoTerm::lex_product(WpoTerm base, WpoTerm index) {
    return WpoTerm(std::make_shared<const Node>(
        Node{Kind::Prod, {}, {}, {std::move(base), std::move(index)}}));
}

WpoTerm::Kind WpoTerm::kind() const { return node_->kind; }

const FinitePoset& WpoTerm::poset() const {
    if (node_->kind != Kind::Fin) {
        throw DomainError("not a finite poset leaf");
    }
    return node_->poset;
}

const Ordinal& WpoTerm::ordinal() const {
    if (node_->kind != Kind::Ord) {
        throw DomainError("not an ordinal leaf");
    }
    return node_->value;
}

const WpoTerm& WpoTerm::left() const {
    if (node_->children.size() != 2) {
        throw DomainError("leaf terms have no operands");
    }
    return node_->children[0];
}

const WpoTerm& WpoTerm::right() const {
    if (node_->children.size() != 2) {
        throw DomainError("leaf terms have no operands");
    }
    return node_->children[1];
}

namespace {

bool is_binary(WpoTerm::Kind k) { return k != WpoTerm::Kind::Fin && k != WpoTerm::Kind::Ord; }

std::string poset_text(const FinitePoset& p) {
    if (p.relations().empty()) {
        return "antichain(" + std::to_string(p.size()) + ")";
    }
    if (p == FinitePoset::chain(p.size())) {
        return "chain(" + std::to_string(p.size()) + ")";
    }
    return p.str();
}

}  // namespace

std::string WpoTerm::str() const {
    switch (kind()) {
        case Kind::Fin:
            return poset_text(poset());
        case Kind::Ord:
            return "ord(" + ordinal().str() + ")";
        default:
            break;
    }
    const bool prod = kind() == Kind::Prod;
    auto wrap_left = [&](const WpoTerm& t) {
        return prod && is_binary(t.kind()) && t.kind() != Kind::Prod ? "(" + t.str() + ")"
                                                                      : t.str();
    };
    auto wrap_right = [&](const WpoTerm& t) {
        if (!is_binary(t.kind()) || (!prod && t.kind() == Kind::Prod)) {
            return t.str();
        }
        return "(" + t.str() + ")";
    };
    const char* op = kind() == Kind::Union ? " (+) " : kind() == Kind::Sum ? " + " : " . ";
    return wrap_left(left()) + op + wrap_right(right());
}

// ---------------------------------------------------------------------------
// Evaluation

bool DeltaMK::valid() const {
    return !delta.is_successor() && m >= k && k >= 0 && ((k == 0) == (m == 0));
}

Ordinal o_of(const WpoTerm& t) {
    switch (t.kind()) {
        case WpoTerm::Kind::Fin:
            return Ordinal(Natural(t.poset().size()));
        case WpoTerm::Kind::Ord:
            return t.ordinal();
        case WpoTerm::Kind::Union:
            return nat_sum(o_of(t.left()), o_of(t.right()));
        case WpoTerm::Kind::Sum:
            return add(o_of(t.left()), o_of(t.right()));
        case WpoTerm::Kind::Prod:
            return vialard(o_of(t.left()), delta_mk(t.right()));
    }
    throw std::logic_error("unhandled term kind");
}

Natural max_count(const WpoTerm& t) {
    switch (t.kind()) {
        case WpoTerm::Kind::Fin:
            return Natural(maximal_elements(t.poset()).size());
        case WpoTerm::Kind::Ord:
            return t.ordinal().is_successor() ? 1 : 0;
        case WpoTerm::Kind::Union:
            return max_count(t.left()) + max_count(t.right());
        case WpoTerm::Kind::Sum:
            // an empty high part leaves the maxima of the low part
            return o_of(t.right()).is_zero() ? max_count(t.left()) : max_count(t.right());
        case WpoTerm::Kind::Prod:
            return max_count(t.left()) * max_count(t.right());
    }
    throw std::logic_error("unhandled term kind");
}

DeltaMK delta_mk(const WpoTerm& t) {
    auto [delta, m] = split_delta_m(o_of(t));
    DeltaMK r{std::move(delta), std::move(m), max_count(t)};
    if (!r.valid()) {
        throw std::logic_error("delta_mk invariant broken for " + t.str() + ": delta=" +
                               r.delta.str() + " m=" + r.m.str() + " k=" + r.k.str());
    }
    return r;
}

namespace {

void require_valid(const DeltaMK& d) {
    if (!d.valid()) {
        throw DomainError("not a valid (delta, m, k) decomposition: delta=" + d.delta.str() +
                          " m=" + d.m.str() + " k=" + d.k.str());
    }
}

}  // namespace

Ordinal vialard(const Ordinal& base, const DeltaMK& index) {
    require_valid(index);
    const Ordinal head = mul(base, add(index.delta, Ordinal(index.m - index.k)));
    return add(head, nat_prod(base, Ordinal(index.k)));
}

Ordinal vialard_expanded(const Ordinal& base, const DeltaMK& index) {
    require_valid(index);
    if (base.is_zero()) {
        return {};
    }
    const Ordinal lead = Ordinal::omega_power(leading_exponent(base),
                                              leading_coefficient(base) * index.m);
    const Ordinal sigma_k = nat_prod(tail_sigma(base), Ordinal(index.k));
    return add(add(mul(base, index.delta), lead), sigma_k);
}

// ---------------------------------------------------------------------------
// Proof-trace evaluation for finite index posets

ProofTrace proof_trace(const Ordinal& base, const FinitePoset& index) {
    ProofTrace node;
    node.size = index.size();
    node.k = maximal_elements(index).size();
    if (index.empty()) {
        node.rule = ProofTrace::Rule::Empty;
        return node;
    }
    if (node.k == 1) {
        // (P.Q_bot, P.Q_top) is a cut realized by every linearization
        node.rule = ProofTrace::Rule::TopSplit;
        auto split = split_top(index);
        node.children.push_back(proof_trace(base, split.bottom.poset));
        node.value = add(node.children.front().value, base);
    } else {
        node.rule = ProofTrace::Rule::MaxSplit;
        auto split = split_first_max(index);
        node.children.push_back(proof_trace(base, split.prime.poset));
        node.children.push_back(proof_trace(base, split.second.poset));
        node.value = nat_sum(node.children[0].value, node.children[1].value);
    }
    return node;
}

Ordinal proof_trace_o(const Ordinal& base, const FinitePoset& index) {
    return proof_trace(base, index).value;
}

namespace {

void render_into(const ProofTrace& t, int depth, std::ostringstream& os) {
    os << std::string(static_cast<std::size_t>(depth) * 2, ' ') << "|Q|=" << t.size
       << " k=" << t.k << "  ";
    switch (t.rule) {
        case ProofTrace::Rule::Empty:
            os << "empty";
            break;
        case ProofTrace::Rule::TopSplit:
            os << "top split: o(P.Q_bot) + o(P)";
            break;
        case ProofTrace::Rule::MaxSplit:
            os << "max split: o(P.Q') (+) o(P.Q'')";
            break;
    }
    os << " = " << t.value << '\n';
    for (const auto& c : t.children) {
        render_into(c, depth + 1, os);
    }
}

constexpr std::size_t kMaxExpansion = 4096;

std::size_t checked_size(const Natural& n) {
    if (n > kMaxExpansion) {
        throw ResourceError("finite expansion larger than " + std::to_string(kMaxExpansion) +
                            " elements");
    }
    return n.convert_to<std::size_t>();
}

}  // namespace

std::string ProofTrace::render() const {
    std::ostringstream os;
    render_into(*this, 0, os);
    return os.str();
}

bool is_finite_term(const WpoTerm& t) {
    switch (t.kind()) {
        case WpoTerm::Kind::Fin:
            return true;
        case WpoTerm::Kind::Ord:
            return t.ordinal().is_finite();
        default:
            return is_finite_term(t.left()) && is_finite_term(t.right());
    }
}

FinitePoset expand_finite(const WpoTerm& t) {
    switch (t.kind()) {
        case WpoTerm::Kind::Fin:
            return t.poset();
        case WpoTerm::Kind::Ord:
            if (!t.ordinal().is_finite()) {
                throw DomainError("cannot expand infinite ordinal " + t.ordinal().str());
            }
            return FinitePoset::chain(checked_size(t.ordinal().finite_value()));
        default:
            break;
    }
    FinitePoset l = expand_finite(t.left());
    FinitePoset r = expand_finite(t.right());
    switch (t.kind()) {
        case WpoTerm::Kind::Union:
            return disjoint_union(l, r);
        case WpoTerm::Kind::Sum:
            return lex_sum(l, r);
        default:
            checked_size(Natural(l.size()) * r.size());
            return lex_product(l, r);
    }
}

}  // namespace otype

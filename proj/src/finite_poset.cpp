#include "otype/finite_poset.hpp"

#include <algorithm>
#include <sstream>

#include "otype/error.hpp"

namespace otype {

FinitePoset FinitePoset::from_edges(std::size_t n, std::span<const Edge> edges) {
    std::vector<std::uint8_t> lt(n * n, 0);
    for (auto [a, b] : edges) {
        if (a >= n || b >= n) {
            throw DomainError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                              ") mentions an element outside 0.." + std::to_string(n));
        }
        lt[a * n + b] = 1;
    }
    // Warshall
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!lt[i * n + k]) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                lt[i * n + j] |= lt[k * n + j];
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (lt[i * n + i]) {
            throw InvalidOrderError("relation has a cycle through element " + std::to_string(i));
        }
    }
    return FinitePoset(n, std::move(lt));
}

FinitePoset FinitePoset::chain(std::size_t n) {
    std::vector<std::uint8_t> lt(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            lt[i * n + j] = 1;
        }
    }
    return FinitePoset(n, std::move(lt));
}

FinitePoset FinitePoset::antichain(std::size_t n) {
    return FinitePoset(n, std::vector<std::uint8_t>(n * n, 0));
}

std::vector<Edge> FinitePoset::relations() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (less(i, j)) {
                out.emplace_back(i, j);
            }
        }
    }
    return out;
}

FinitePoset FinitePoset::restrict_to(std::span<const Element> subset) const {
    const std::size_t m = subset.size();
    std::vector<std::uint8_t> lt(m * m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            lt[i * m + j] = less(subset[i], subset[j]) ? 1 : 0;
        }
    }
    return FinitePoset(m, std::move(lt));
}

std::string FinitePoset::str() const {
    std::ostringstream os;
    os << "poset(" << n_;
    bool first = true;
    for (auto [a, b] : relations()) {
        os << (first ? "; " : ", ") << a << '<' << b;
        first = false;
    }
    os << ')';
    return os.str();
}

std::vector<Element> maximal_elements(const FinitePoset& p) {
    std::vector<Element> out;
    for (Element x = 0; x < p.size(); ++x) {
        bool top = true;
        for (Element y = 0; y < p.size() && top; ++y) {
            top = !p.less(x, y);
        }
        if (top) {
            out.push_back(x);
        }
    }
    return out;
}

namespace {

void extend(const FinitePoset& p, std::vector<Element>& prefix, std::vector<std::uint8_t>& used,
            std::vector<std::vector<Element>>& out) {
    if (prefix.size() == p.size()) {
        out.push_back(prefix);
        return;
    }
    for (Element x = 0; x < p.size(); ++x) {
        if (used[x]) {
            continue;
        }
        bool ready = true;
        for (Element y = 0; y < p.size() && ready; ++y) {
            ready = used[y] || !p.less(y, x);
        }
        if (!ready) {
            continue;
        }
        used[x] = 1;
        prefix.push_back(x);
        extend(p, prefix, used, out);
        prefix.pop_back();
        used[x] = 0;
    }
}

}  // namespace

std::vector<std::vector<Element>> linear_extensions(const FinitePoset& p, std::size_t cap) {
    if (p.size() > cap) {
        throw ResourceError("linear extension enumeration capped at " + std::to_string(cap) +
                            " elements, poset has " + std::to_string(p.size()));
    }
    std::vector<std::vector<Element>> out;
    std::vector<Element> prefix;
    std::vector<std::uint8_t> used(p.size(), 0);
    extend(p, prefix, used, out);
    return out;
}

std::uint64_t count_linear_extensions(const FinitePoset& p) {
    const std::size_t n = p.size();
    if (n > 20) {
        throw ResourceError("linear extension counting capped at 20 elements");
    }
    std::vector<std::uint32_t> below(n, 0);
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
            if (p.less(y, x)) {
                below[x] |= 1u << y;
            }
        }
    }
    // ways[S] = number of ways to list the down-set S in an order extending p
    std::vector<std::uint64_t> ways(std::size_t{1} << n, 0);
    ways[0] = 1;
    for (std::uint32_t s = 0; s < ways.size(); ++s) {
        if (ways[s] == 0) {
            continue;
        }
        for (Element x = 0; x < n; ++x) {
            if (!(s & (1u << x)) && (below[x] & ~s) == 0) {
                ways[s | (1u << x)] += ways[s];
            }
        }
    }
    return ways.back();
}

bool is_linear_extension(const FinitePoset& p, std::span<const Element> order) {
    if (order.size() != p.size()) {
        return false;
    }
    std::vector<std::size_t> rank(p.size(), p.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (order[i] >= p.size() || rank[order[i]] != p.size()) {
            return false;
        }
        rank[order[i]] = i;
    }
    for (auto [a, b] : p.relations()) {
        if (rank[a] > rank[b]) {
            return false;
        }
    }
    return true;
}

bool is_cut(const FinitePoset& p, const Cut& c) {
    std::vector<int> side(p.size(), -1);
    auto mark = [&](const std::vector<Element>& xs, int s) {
        for (Element x : xs) {
            if (x >= p.size() || side[x] != -1) {
                throw DomainError("cut sides must partition the poset");
            }
            side[x] = s;
        }
    };
    mark(c.lower, 0);
    mark(c.upper, 1);
    if (std::find(side.begin(), side.end(), -1) != side.end()) {
        throw DomainError("cut sides must partition the poset");
    }
    for (Element lo : c.lower) {
        for (Element hi : c.upper) {
            if (p.less(hi, lo)) {
                return false;
            }
        }
    }
    return true;
}

FinitePoset lex_product(const FinitePoset& p, const FinitePoset& q) {
    const std::size_t np = p.size();
    std::vector<Edge> edges;
    for (Element q0 = 0; q0 < q.size(); ++q0) {
        for (Element q1 = 0; q1 < q.size(); ++q1) {
            for (Element p0 = 0; p0 < np; ++p0) {
                for (Element p1 = 0; p1 < np; ++p1) {
                    if (q.less(q0, q1) || (q0 == q1 && p.less(p0, p1))) {
                        edges.emplace_back(q0 * np + p0, q1 * np + p1);
                    }
                }
            }
        }
    }
    return FinitePoset::from_edges(np * q.size(), edges);
}

namespace {

FinitePoset juxtapose(const FinitePoset& p, const FinitePoset& q, bool stacked) {
    const std::size_t off = p.size();
    std::vector<Edge> edges = p.relations();
    for (auto [a, b] : q.relations()) {
        edges.emplace_back(a + off, b + off);
    }
    if (stacked) {
        for (Element a = 0; a < p.size(); ++a) {
            for (Element b = 0; b < q.size(); ++b) {
                edges.emplace_back(a, b + off);
            }
        }
    }
    return FinitePoset::from_edges(p.size() + q.size(), edges);
}

SubPoset sub(const FinitePoset& q, std::vector<Element> labels) {
    return {q.restrict_to(labels), std::move(labels)};
}

}  // namespace

FinitePoset disjoint_union(const FinitePoset& p, const FinitePoset& q) {
    return juxtapose(p, q, false);
}

FinitePoset lex_sum(const FinitePoset& p, const FinitePoset& q) { return juxtapose(p, q, true); }

TopSplit split_top(const FinitePoset& q) {
    std::vector<Element> top = maximal_elements(q);
    std::vector<Element> bottom;
    for (Element x = 0; x < q.size(); ++x) {
        if (!std::binary_search(top.begin(), top.end(), x)) {
            bottom.push_back(x);
        }
    }
    return {sub(q, std::move(bottom)), sub(q, std::move(top))};
}

MaxSplit split_first_max(const FinitePoset& q) {
    const std::vector<Element> maxima = maximal_elements(q);
    if (maxima.size() < 2) {
        throw DomainError("split_first_max needs at least two maximal elements, got " +
                          std::to_string(maxima.size()));
    }
    const Element first = maxima.front();
    std::vector<Element> prime;
    std::vector<Element> second;
    for (Element x = 0; x < q.size(); ++x) {
        bool below_other = false;
        bool below_some = false;
        for (Element m : maxima) {
            if (x == m || q.less(x, m)) {
                below_some = true;
                below_other = below_other || m != first;
            }
        }
        if (!below_some) {
            throw DomainError("element " + std::to_string(x) +
                              " lies below no maximal element");
        }
        if ((x == first || q.less(x, first)) && !below_other) {
            second.push_back(x);
        } else {
            prime.push_back(x);
        }
    }
    return {sub(q, std::move(prime)), sub(q, std::move(second))};
}

std::vector<FinitePoset> all_posets(std::size_t n) {
    if (n > 4) {
        throw ResourceError("all_posets is limited to 4 elements");
    }
    std::vector<Edge> pairs;
    for (Element i = 0; i < n; ++i) {
        for (Element j = 0; j < n; ++j) {
            if (i != j) {
                pairs.emplace_back(i, j);
            }
        }
    }
    std::vector<FinitePoset> out;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t b = 0; b < pairs.size(); ++b) {
            if (mask & (1u << b)) {
                edges.push_back(pairs[b]);
            }
        }
        FinitePoset p;
        try {
            p = FinitePoset::from_edges(n, edges);
        } catch (const InvalidOrderError&) {
            continue;
        }
        // keep only relations that are already closed
        if (p.relations().size() == edges.size()) {
            out.push_back(std::move(p));
        }
    }
    return out;
}

}  // namespace otype

#pragma once

// Independent brute-force oracle: exhaustive cost-bounded depth-first
// enumeration of all operation sequences, applied through the public
// operation semantics. Shares no index, queue, or visited-set machinery with
// the uniform-cost solver; intended for small strings and small bounds.

#include <optional>

#include "strdist/core.hpp"

namespace strdist {

namespace detail {

inline std::optional<Cost> oracle_op_cost(const CostModel& d, const Operation& op) {
    if (!d.admits(op)) return std::nullopt;
    if (const Cost* c = d.find_rule(op)) return *c;
    return d.default_cost;
}

struct OracleSearch {
    const Str& target;
    const CostModel& d;
    Cost bound;
    std::optional<Cost> best;

    void visit(const Str& s, const Cost& spent) {
        if (best && *best <= spent) return;
        if (s == target) {
            best = spent;  // extensions only add cost
            return;
        }
        Cost remaining = bound - spent;
        // every operation shifts the length by at most one and costs at least one
        size_t gap = s.size() > target.size() ? s.size() - target.size() : target.size() - s.size();
        if (Cost(gap) > remaining) return;

        auto attempt = [&](const Operation& op, size_t pos) {
            auto c = oracle_op_cost(d, op);
            if (!c || *c > remaining) return;
            visit(apply_operation(s, op, pos), spent + *c);
        };

        const auto& sigma = d.alphabet.symbols();
        for (size_t pos = 1; pos <= s.size() + 1; ++pos) {
            if (d.ops.insertion)
                for (const Symbol& a : sigma) attempt(Operation::insertion(a), pos);
            if (pos > s.size()) break;
            if (d.ops.deletion) attempt(Operation::deletion(s[pos - 1]), pos);
            if (d.ops.substitution || (d.k == 1 && d.ops.ksubstitution))
                for (const Symbol& b : sigma) {
                    if (b == s[pos - 1]) continue;
                    attempt(Operation::ksub({s[pos - 1]}, {b}), pos);
                }
            if (d.ops.ksubstitution && d.k >= 2 && pos + d.k - 1 <= s.size()) {
                Str window(s.begin() + (pos - 1), s.begin() + (pos - 1) + d.k);
                if (d.default_cost && *d.default_cost <= remaining) {
                    // every right-hand side is affordable; explicit rules override the default
                    Str rhs(d.k, sigma.empty() ? Symbol{} : sigma.front());
                    std::vector<size_t> idx(d.k, 0);
                    while (true) {
                        for (size_t i = 0; i < d.k; ++i) rhs[i] = sigma[idx[i]];
                        if (!(rhs == window)) attempt(Operation::ksub(window, rhs), pos);
                        size_t i = d.k;
                        while (i > 0) {
                            if (++idx[i - 1] == sigma.size())
                                idx[--i] = 0;
                            else
                                break;
                        }
                        if (i == 0) break;
                    }
                } else {
                    for (const Rule& r : d.rules)
                        if (r.op.type == Operation::Type::KSubstitution && r.op.lhs.size() == d.k &&
                            r.op.lhs == window)
                            attempt(r.op, pos);
                }
            }
        }
    }
};

}  // namespace detail

// Minimum sequence cost transforming v into w with total cost <= bound, or
// nullopt when no such sequence exists.
inline std::optional<Cost> brute_force_distance(const Str& v, const Str& w, const CostModel& d,
                                                const Cost& bound) {
    detail::OracleSearch search{w, d, bound, std::nullopt};
    search.visit(v, Cost{});
    return search.best;
}

}  // namespace strdist

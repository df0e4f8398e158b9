#pragma once

// Exact distance computation and budgeted decision. The paper-style
// nondeterministic "choose a substitution, subtract its weight" loop is
// realized as least-cost-first (uniform-cost) search over the rewriting
// graph, with states deduplicated by string and pruned at cost > budget.

#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "strdist/core.hpp"

namespace strdist {

class EnumerationCapExceeded : public std::runtime_error {
public:
    explicit EnumerationCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct SolverOptions {
    // Default-cost k-substitution enumeration needs |Sigma|^k right-hand
    // sides per position; refuse beyond this. Compiled reduction instances
    // always have default_cost = h+1 > budget, so they never enumerate.
    size_t enumeration_cap = 4096;
};

using IdStr = std::vector<uint32_t>;

struct IdStrHash {
    size_t operator()(const IdStr& s) const {
        uint64_t h = 1469598103934665603ull;
        for (uint32_t c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

struct DistanceResult {
    enum class Outcome { Exact, ExceedsBudget, Unreachable };

    Outcome outcome = Outcome::Unreachable;
    Cost cost;                       // meaningful for Exact
    TransformationSequence witness;  // meaningful for Exact
    Cost budget;

    bool exact() const { return outcome == Outcome::Exact; }
};

inline const char* outcome_name(DistanceResult::Outcome o) {
    switch (o) {
        case DistanceResult::Outcome::Exact: return "Exact";
        case DistanceResult::Outcome::ExceedsBudget: return "ExceedsBudget";
        default: return "Unreachable";
    }
}

struct Neighbor {
    Operation op;
    size_t pos = 1;  // 1-based
    Cost cost;
    Str result;
};

// Explicit rules of a CostModel re-indexed over dense symbol ids for
// pattern-matched successor generation.
class RuleIndex {
public:
    RuleIndex(const CostModel& d, SolverOptions opts = {}) : d_(d), opts_(opts) {
        sigma_ = static_cast<uint32_t>(d.alphabet.size());
        adm_ins_ = d.ops.insertion;
        adm_del_ = d.ops.deletion;
        adm_sub1_ = d.ops.substitution || (d.k == 1 && d.ops.ksubstitution);
        adm_subk_ = d.ops.ksubstitution && d.k >= 2;
        ins_cost_.resize(sigma_);
        del_cost_.resize(sigma_);
        sub1_.resize(sigma_);
        for (const Rule& r : d.rules) {
            switch (r.op.type) {
                case Operation::Type::Insertion:
                    ins_cost_[id(r.op.rhs[0])] = r.cost;
                    break;
                case Operation::Type::Deletion:
                    del_cost_[id(r.op.lhs[0])] = r.cost;
                    break;
                case Operation::Type::KSubstitution:
                    if (r.op.lhs.size() == 1) {
                        sub1_[id(r.op.lhs[0])].push_back({id(r.op.rhs[0]), r.cost});
                    } else {
                        subk_[ids(r.op.lhs)].push_back({ids(r.op.rhs), r.cost});
                    }
                    break;
            }
        }
        for (auto& v : sub1_) std::sort(v.begin(), v.end());
        for (auto& [lhs, v] : subk_) std::sort(v.begin(), v.end());
        sigma_pow_k_ = 1;
        for (uint32_t i = 0; i < d.k; ++i) {
            if (sigma_ != 0 && sigma_pow_k_ > std::numeric_limits<size_t>::max() / sigma_)
                sigma_pow_k_ = std::numeric_limits<size_t>::max();
            else
                sigma_pow_k_ *= sigma_;
        }
    }

    const CostModel& model() const { return d_; }

    uint32_t id(const Symbol& s) const { return d_.alphabet.id_of(s); }
    IdStr ids(const Str& s) const {
        IdStr out;
        out.reserve(s.size());
        for (const auto& c : s) out.push_back(id(c));
        return out;
    }
    Str symbols(const IdStr& s) const {
        Str out;
        out.reserve(s.size());
        for (uint32_t c : s) out.push_back(d_.alphabet.at(c));
        return out;
    }

    // Enumerates every valid single-operation successor of s whose cost is
    // <= remaining, left-to-right by position, then by family and target in
    // canonical order. Returns true when some valid operation was skipped
    // only because its cost exceeds `remaining`.
    template <typename Emit>
    bool for_each_neighbor(const IdStr& s, const Cost& remaining, Emit&& emit) const {
        bool filtered = false;
        const std::optional<Cost>& def = d_.default_cost;
        auto consider = [&](Operation::Type type, const IdStr& lhs, const IdStr& rhs, size_t pos,
                            const Cost& cost) {
            if (cost <= remaining)
                emit(type, lhs, rhs, pos, cost);
            else
                filtered = true;
        };

        for (size_t pos = 1; pos <= s.size() + 1; ++pos) {
            if (adm_ins_) {
                for (uint32_t a = 0; a < sigma_; ++a) {
                    const std::optional<Cost>& c = ins_cost_[a] ? ins_cost_[a] : def;
                    if (c) consider(Operation::Type::Insertion, {}, {a}, pos, *c);
                }
            }
            if (pos > s.size()) break;
            uint32_t cur = s[pos - 1];
            if (adm_del_) {
                const std::optional<Cost>& c = del_cost_[cur] ? del_cost_[cur] : def;
                if (c) consider(Operation::Type::Deletion, {cur}, {}, pos, *c);
            }
            if (adm_sub1_) {
                const auto& explicit_rhs = sub1_[cur];
                for (uint32_t b = 0; b < sigma_; ++b) {
                    if (b == cur) continue;
                    auto it = std::lower_bound(explicit_rhs.begin(), explicit_rhs.end(),
                                               std::pair<uint32_t, Cost>{b, Cost{}});
                    if (it != explicit_rhs.end() && it->first == b)
                        consider(Operation::Type::KSubstitution, {cur}, {b}, pos, it->second);
                    else if (def)
                        consider(Operation::Type::KSubstitution, {cur}, {b}, pos, *def);
                }
            }
            if (adm_subk_ && pos + d_.k - 1 <= s.size()) {
                IdStr window(s.begin() + (pos - 1), s.begin() + (pos - 1) + d_.k);
                const std::vector<std::pair<IdStr, Cost>>* explicit_rules = nullptr;
                if (auto it = subk_.find(window); it != subk_.end()) explicit_rules = &it->second;
                if (explicit_rules)
                    for (const auto& [rhs, cost] : *explicit_rules)
                        consider(Operation::Type::KSubstitution, window, rhs, pos, cost);
                if (def) {
                    size_t explicit_count = explicit_rules ? explicit_rules->size() : 0;
                    if (*def <= remaining) {
                        if (sigma_pow_k_ > opts_.enumeration_cap)
                            throw EnumerationCapExceeded(
                                "default-cost enumeration needs |Sigma|^k = " +
                                std::to_string(sigma_pow_k_) + " right-hand sides (cap " +
                                std::to_string(opts_.enumeration_cap) + ")");
                        IdStr rhs(d_.k, 0);
                        while (true) {
                            bool skip = rhs == window;
                            if (!skip && explicit_rules) {
                                auto it = std::lower_bound(explicit_rules->begin(),
                                                           explicit_rules->end(),
                                                           std::pair<IdStr, Cost>{rhs, Cost{}});
                                skip = it != explicit_rules->end() && it->first == rhs;
                            }
                            if (!skip)
                                consider(Operation::Type::KSubstitution, window, rhs, pos, *def);
                            size_t i = d_.k;  // odometer over Sigma^k
                            while (i > 0) {
                                if (++rhs[i - 1] == sigma_)
                                    rhs[--i] = 0;
                                else
                                    break;
                            }
                            if (i == 0) break;
                        }
                    } else if (sigma_pow_k_ > explicit_count + 1) {
                        filtered = true;  // some default-cost rewrite exists beyond the budget
                    }
                }
            }
        }
        return filtered;
    }

    // Smallest finite insertion cost, if inserting is possible at all.
    std::optional<Cost> min_insertion_cost() const {
        if (!adm_ins_) return std::nullopt;
        std::optional<Cost> best = d_.default_cost;
        for (uint32_t a = 0; a < sigma_; ++a)
            if (ins_cost_[a] && (!best || *ins_cost_[a] < *best)) best = ins_cost_[a];
        return best;
    }

private:
    const CostModel& d_;
    SolverOptions opts_;
    uint32_t sigma_ = 0;
    bool adm_ins_ = false, adm_del_ = false, adm_sub1_ = false, adm_subk_ = false;
    size_t sigma_pow_k_ = 1;
    std::vector<std::optional<Cost>> ins_cost_;
    std::vector<std::optional<Cost>> del_cost_;
    std::vector<std::vector<std::pair<uint32_t, Cost>>> sub1_;
    std::unordered_map<IdStr, std::vector<std::pair<IdStr, Cost>>, IdStrHash> subk_;
};

// Valid single-operation successors of s with cost <= remaining.
inline std::vector<Neighbor> neighbors(const Str& s, const CostModel& d, const Cost& remaining,
                                       const SolverOptions& opts = {}) {
    RuleIndex index(d, opts);
    IdStr ids = index.ids(s);
    std::vector<Neighbor> out;
    index.for_each_neighbor(ids, remaining,
                            [&](Operation::Type type, const IdStr& lhs, const IdStr& rhs, size_t pos,
                                const Cost& cost) {
                                Operation op{type, index.symbols(lhs), index.symbols(rhs)};
                                IdStr res = ids;
                                switch (type) {
                                    case Operation::Type::Insertion:
                                        res.insert(res.begin() + (pos - 1), rhs[0]);
                                        break;
                                    case Operation::Type::Deletion:
                                        res.erase(res.begin() + (pos - 1));
                                        break;
                                    case Operation::Type::KSubstitution:
                                        for (size_t i = 0; i < rhs.size(); ++i) res[pos - 1 + i] = rhs[i];
                                        break;
                                }
                                out.push_back({std::move(op), pos, cost, index.symbols(res)});
                            });
    return out;
}

namespace detail {

struct ParentRec {
    IdStr parent;
    Operation::Type type;
    IdStr lhs, rhs;
    size_t pos;
};

struct FrontierEntry {
    Cost cost;
    IdStr str;
};

struct FrontierOrder {
    // min-heap: cheapest first, ties popped in canonical string order
    bool operator()(const FrontierEntry& a, const FrontierEntry& b) const {
        if (a.cost != b.cost) return b.cost < a.cost;
        return std::lexicographical_compare(b.str.begin(), b.str.end(), a.str.begin(), a.str.end());
    }
};

}  // namespace detail

// Minimum-cost transformation of v into w under d, searched up to `budget`.
// Exact carries an optimal witness; ExceedsBudget means some continuation was
// cut off by the budget; Unreachable means the whole reachable set was
// exhausted below the budget without meeting w.
inline DistanceResult distance(const Str& v, const Str& w, const CostModel& d, const Cost& budget,
                               const SolverOptions& opts = {}) {
    DistanceResult res;
    res.budget = budget;
    if (v == w) {
        res.outcome = DistanceResult::Outcome::Exact;
        res.cost = Cost{};
        res.witness = {};
        return res;
    }
    // substitutions preserve length, so distinct lengths are hopeless without I/D
    if (!d.ops.insertion && !d.ops.deletion && v.size() != w.size()) {
        res.outcome = DistanceResult::Outcome::Unreachable;
        return res;
    }

    RuleIndex index(d, opts);
    IdStr src = index.ids(v);
    IdStr dst = index.ids(w);

    size_t len_cap = std::numeric_limits<size_t>::max();
    if (auto min_ins = index.min_insertion_cost()) {
        uint64_t slack = (budget / *min_ins).to_u64_saturating();
        size_t base = std::max(v.size(), w.size());
        len_cap = slack > std::numeric_limits<size_t>::max() - base
                      ? std::numeric_limits<size_t>::max()
                      : base + static_cast<size_t>(slack);
    }

    std::unordered_map<IdStr, Cost, IdStrHash> best;
    std::unordered_map<IdStr, detail::ParentRec, IdStrHash> parent;
    std::priority_queue<detail::FrontierEntry, std::vector<detail::FrontierEntry>,
                        detail::FrontierOrder>
        frontier;
    bool pruned = false;

    best.emplace(src, Cost{});
    frontier.push({Cost{}, src});

    while (!frontier.empty()) {
        auto [g, s] = frontier.top();
        frontier.pop();
        auto seen = best.find(s);
        if (seen != best.end() && seen->second < g) continue;  // stale entry
        if (s == dst) {
            res.outcome = DistanceResult::Outcome::Exact;
            res.cost = g;
            std::vector<Step> steps;
            IdStr cur = s;
            while (!(cur == src)) {
                const detail::ParentRec& rec = parent.at(cur);
                steps.push_back({Operation{rec.type, index.symbols(rec.lhs), index.symbols(rec.rhs)},
                                 rec.pos});
                cur = rec.parent;
            }
            std::reverse(steps.begin(), steps.end());
            res.witness = {std::move(steps), g};
            return res;
        }
        Cost remaining = budget - g;
        bool filtered = index.for_each_neighbor(
            s, remaining,
            [&](Operation::Type type, const IdStr& lhs, const IdStr& rhs, size_t pos,
                const Cost& cost) {
                IdStr next = s;
                switch (type) {
                    case Operation::Type::Insertion:
                        next.insert(next.begin() + (pos - 1), rhs[0]);
                        break;
                    case Operation::Type::Deletion:
                        next.erase(next.begin() + (pos - 1));
                        break;
                    case Operation::Type::KSubstitution:
                        for (size_t i = 0; i < rhs.size(); ++i) next[pos - 1 + i] = rhs[i];
                        break;
                }
                if (next.size() > len_cap) {
                    pruned = true;
                    return;
                }
                Cost ng = g + cost;
                auto it = best.find(next);
                if (it != best.end() && it->second <= ng) return;
                best[next] = ng;
                parent[next] = {s, type, lhs, rhs, pos};
                frontier.push({std::move(ng), std::move(next)});
            });
        pruned = pruned || filtered;
    }

    res.outcome = pruned ? DistanceResult::Outcome::ExceedsBudget
                         : DistanceResult::Outcome::Unreachable;
    return res;
}

// Budgeted decision: is the distance between v and w at most h?
inline std::pair<bool, DistanceResult> decide(const Instance& inst, const SolverOptions& opts = {}) {
    DistanceResult r = distance(inst.v, inst.w, inst.d, inst.h, opts);
    return {r.exact(), std::move(r)};
}

}  // namespace strdist

#pragma once

// Operation and cost-model types, instance representation, and the
// application semantics of localized rewriting operations.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "strdist/bigint.hpp"
#include "strdist/symbol.hpp"

namespace strdist {

class ApplyError : public std::runtime_error {
public:
    explicit ApplyError(const std::string& what) : std::runtime_error(what) {}
};

class ForbiddenOperation : public std::runtime_error {
public:
    explicit ForbiddenOperation(const std::string& what) : std::runtime_error(what) {}
};

struct Operation {
    enum class Type : uint8_t { Insertion, Deletion, KSubstitution };

    Type type = Type::KSubstitution;
    Str lhs;  // Insertion: empty; Deletion: one symbol; KSubstitution: k symbols
    Str rhs;  // Insertion: one symbol; Deletion: empty; KSubstitution: k symbols

    static Operation insertion(Symbol a) { return {Type::Insertion, {}, {std::move(a)}}; }
    static Operation deletion(Symbol a) { return {Type::Deletion, {std::move(a)}, {}}; }
    static Operation ksub(Str from, Str to) {
        if (from.size() != to.size() || from.empty())
            throw std::invalid_argument("k-substitution sides must have equal positive length");
        return {Type::KSubstitution, std::move(from), std::move(to)};
    }

    size_t arity() const { return std::max(lhs.size(), rhs.size()); }

    friend bool operator==(const Operation& a, const Operation& b) {
        return a.type == b.type && a.lhs == b.lhs && a.rhs == b.rhs;
    }
    friend bool operator<(const Operation& a, const Operation& b) {
        if (a.type != b.type) return a.type < b.type;
        if (a.lhs != b.lhs) return str_less(a.lhs, b.lhs);
        return str_less(a.rhs, b.rhs);
    }
};

inline std::string operation_text(const Operation& op) {
    switch (op.type) {
        case Operation::Type::Insertion: return "I(" + str_text(op.rhs, "") + ")";
        case Operation::Type::Deletion: return "D(" + str_text(op.lhs, "") + ")";
        default: return str_text(op.lhs) + " -> " + str_text(op.rhs);
    }
}

// Which operation families the distance admits. A plain substitution is a
// k-substitution with k=1; op_set still distinguishes S from kS for validation.
struct OpSet {
    bool insertion = false;
    bool deletion = false;
    bool substitution = false;
    bool ksubstitution = false;

    static OpSet hamming() { return {false, false, false, true}; }
    static OpSet edit() { return {true, true, true, true}; }

    friend bool operator==(const OpSet&, const OpSet&) = default;
};

struct Rule {
    Operation op;
    Cost cost;

    friend bool operator==(const Rule& a, const Rule& b) { return a.op == b.op && a.cost == b.cost; }
};

// The distance description D: arity, admitted operation set, sparse rule
// table, default cost for unlisted operations of admitted families
// (nullopt = such operations are forbidden), and the ambient alphabet.
struct CostModel {
    uint32_t k = 1;
    OpSet ops;
    Alphabet alphabet;
    std::vector<Rule> rules;
    std::optional<Cost> default_cost;

    friend bool operator==(const CostModel& a, const CostModel& b) {
        return a.k == b.k && a.ops == b.ops && a.alphabet == b.alphabet && a.rules == b.rules &&
               a.default_cost == b.default_cost;
    }

    bool admits(const Operation& op) const {
        switch (op.type) {
            case Operation::Type::Insertion: return ops.insertion;
            case Operation::Type::Deletion: return ops.deletion;
            default:
                if (op.lhs.size() == 1) return ops.substitution || (k == 1 && ops.ksubstitution);
                return op.lhs.size() == k && ops.ksubstitution;
        }
    }

    const Cost* find_rule(const Operation& op) const {
        for (const auto& r : rules)
            if (r.op == op) return &r.cost;
        return nullptr;
    }

    // Cost of one operation: explicit rule, else the default; throws when the
    // operation is forbidden outright.
    Cost cost_of(const Operation& op) const {
        if (!admits(op)) throw ForbiddenOperation("operation family not admitted: " + operation_text(op));
        if (const Cost* c = find_rule(op)) return *c;
        if (default_cost) return *default_cost;
        throw ForbiddenOperation("no rule and no default cost for " + operation_text(op));
    }
};

// A DECIS-k-* instance <v, w, D, h>.
struct Instance {
    Str v;
    Str w;
    CostModel d;
    Cost h;

    friend bool operator==(const Instance& a, const Instance& b) {
        return a.v == b.v && a.w == b.w && a.d == b.d && a.h == b.h;
    }
};

struct Step {
    Operation op;
    size_t pos = 1;  // 1-based

    friend bool operator==(const Step& a, const Step& b) { return a.op == b.op && a.pos == b.pos; }
};

// Ordered list of localized operations; serves as the witness of a distance.
struct TransformationSequence {
    std::vector<Step> steps;
    Cost total_cost;

    friend bool operator==(const TransformationSequence& a, const TransformationSequence& b) {
        return a.steps == b.steps && a.total_cost == b.total_cost;
    }
};

// --- application semantics ---------------------------------------------------

// Applies one localized operation at a 1-based position.
// Insertion at pos inserts before the pos-th character (pos = |s|+1 appends).
inline Str apply_operation(const Str& s, const Operation& op, size_t pos) {
    Str out;
    switch (op.type) {
        case Operation::Type::Insertion: {
            if (pos < 1 || pos > s.size() + 1)
                throw ApplyError("insertion position " + std::to_string(pos) + " out of range");
            out.reserve(s.size() + 1);
            out.assign(s.begin(), s.begin() + (pos - 1));
            out.push_back(op.rhs[0]);
            out.insert(out.end(), s.begin() + (pos - 1), s.end());
            return out;
        }
        case Operation::Type::Deletion: {
            if (pos < 1 || pos > s.size())
                throw ApplyError("deletion position " + std::to_string(pos) + " out of range");
            if (!(s[pos - 1] == op.lhs[0]))
                throw ApplyError("deletion mismatch at position " + std::to_string(pos) + ": expected " +
                                 canonical_symbol_text(op.lhs[0]) + ", found " +
                                 canonical_symbol_text(s[pos - 1]));
            out.reserve(s.size() - 1);
            out.assign(s.begin(), s.begin() + (pos - 1));
            out.insert(out.end(), s.begin() + pos, s.end());
            return out;
        }
        case Operation::Type::KSubstitution: {
            size_t k = op.lhs.size();
            if (pos < 1 || pos + k - 1 > s.size())
                throw ApplyError("substitution position " + std::to_string(pos) + " out of range");
            for (size_t i = 0; i < k; ++i)
                if (!(s[pos - 1 + i] == op.lhs[i]))
                    throw ApplyError("substitution lhs mismatch at position " + std::to_string(pos));
            out = s;
            for (size_t i = 0; i < k; ++i) out[pos - 1 + i] = op.rhs[i];
            return out;
        }
    }
    throw ApplyError("unknown operation type");
}

// Left-to-right composition T(v) = t_p(...(t_1(v))...).
inline Str apply_sequence(const Str& s, const TransformationSequence& t) {
    Str cur = s;
    for (size_t i = 0; i < t.steps.size(); ++i) {
        try {
            cur = apply_operation(cur, t.steps[i].op, t.steps[i].pos);
        } catch (const ApplyError& e) {
            throw ApplyError("step " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    return cur;
}

// Sum of per-step costs under the model; 0 for the empty sequence.
inline Cost sequence_cost(const TransformationSequence& t, const CostModel& d) {
    Cost total;
    for (const auto& step : t.steps) total += d.cost_of(step.op);
    return total;
}

// --- validation --------------------------------------------------------------

struct Violation {
    std::string code;
    std::string detail;
};

inline void check_str_in_alphabet(const Str& s, const Alphabet& a, const char* what,
                                  std::vector<Violation>& out) {
    for (const auto& c : s)
        if (!a.contains(c))
            out.push_back({"AlphabetViolation",
                           std::string(what) + " contains symbol outside alphabet: " +
                               canonical_symbol_text(c)});
}

// Empty result iff every Instance and CostModel invariant holds.
inline std::vector<Violation> validate_instance(const Instance& inst) {
    std::vector<Violation> out;
    const CostModel& d = inst.d;

    if (d.k < 1) out.push_back({"ArityViolation", "k must be >= 1"});
    if (!(d.ops.insertion || d.ops.deletion || d.ops.substitution || d.ops.ksubstitution))
        out.push_back({"OpSetViolation", "operation set is empty"});
    if (d.default_cost && d.default_cost->is_zero())
        out.push_back({"PositiveCostViolation", "default cost must be >= 1"});

    for (size_t i = 0; i < d.rules.size(); ++i) {
        const Rule& r = d.rules[i];
        std::string tag = "rule #" + std::to_string(i + 1) + " (" + operation_text(r.op) + ")";
        if (r.cost.is_zero()) out.push_back({"PositiveCostViolation", tag + " has cost 0"});
        if (!d.admits(r.op)) out.push_back({"OpSetViolation", tag + " not admitted by op set"});
        if (r.op.type == Operation::Type::KSubstitution) {
            size_t a = r.op.lhs.size();
            if (a != 1 && a != d.k)
                out.push_back({"ArityViolation", tag + " has arity " + std::to_string(a)});
            if (r.op.lhs == r.op.rhs)
                out.push_back({"IdentityRuleViolation", tag + " replaces a block with itself"});
        }
        check_str_in_alphabet(r.op.lhs, d.alphabet, tag.c_str(), out);
        check_str_in_alphabet(r.op.rhs, d.alphabet, tag.c_str(), out);
        for (size_t j = i + 1; j < d.rules.size(); ++j)
            if (d.rules[j].op == r.op) {
                out.push_back({"DuplicateRuleViolation", tag + " listed more than once"});
                break;
            }
    }

    check_str_in_alphabet(inst.v, d.alphabet, "v", out);
    check_str_in_alphabet(inst.w, d.alphabet, "w", out);
    return out;
}

}  // namespace strdist

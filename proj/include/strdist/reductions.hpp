#pragma once

// Compilation of machines and instances into DECIS-k-* instances:
//   - deterministic TM  -> weighted 3-Hamming instance (Semi-Thue simulation)
//   - (non)deterministic TM -> weighted 3-Edit instance
//   - restricted 3-Hamming -> 2-Hamming (sliding-window pair coding)
//   - restricted 3-Edit -> 2-Edit (staged-symbol chains)
//   - arity lift k -> k+1 (context extension with a PAD anchor)
// plus the pair codec and the restricted-class validators.

#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "strdist/core.hpp"
#include "strdist/turing.hpp"

namespace strdist {

class SymbolClash : public std::runtime_error {
public:
    explicit SymbolClash(const std::string& what) : std::runtime_error(what) {}
};

class NotPrimeInstance : public std::runtime_error {
public:
    explicit NotPrimeInstance(const std::string& what) : std::runtime_error(what) {}
};

class PadClash : public std::runtime_error {
public:
    explicit PadClash(const std::string& what) : std::runtime_error(what) {}
};

class ChainBroken : public std::runtime_error {
public:
    explicit ChainBroken(const std::string& what) : std::runtime_error(what) {}
};

class BoundaryMissing : public std::runtime_error {
public:
    explicit BoundaryMissing(const std::string& what) : std::runtime_error(what) {}
};

enum class ReductionKind { TmTo3Hamming, TmTo3Edit, H3ToH2, E3ToE2, Lift };

inline const char* reduction_kind_name(ReductionKind k) {
    switch (k) {
        case ReductionKind::TmTo3Hamming: return "tm-3h";
        case ReductionKind::TmTo3Edit: return "tm-3e";
        case ReductionKind::H3ToH2: return "3h-2h";
        case ReductionKind::E3ToE2: return "3e-2e";
        default: return "lift";
    }
}

// Audit trail for the budget formulas; h values are opaque big integers, so
// the report records the components they were assembled from.
struct HDerivation {
    ReductionKind kind = ReductionKind::Lift;
    uint64_t n = 0;       // input length (TM reductions)
    uint64_t c = 0;       // tm-3h: h = c^m
    uint64_t m = 0;
    Cost base_pow;        // tm-3h: c^{q(n)}; tm-3e: 2^{p(n)}
    Cost additive;        // tm-3h: 2p(n)+4+n; tm-3e: 2(n+1)
    Cost threshold;       // tm-3h: base_pow + additive
    Cost source_h;        // 2-ary reductions and lifts
    uint32_t factor = 1;  // 3 (2-Hamming), 5 (2-Edit), 1 (lift)
    Cost h;

    Cost recompute() const {
        switch (kind) {
            case ReductionKind::TmTo3Hamming: {
                Cost t = base_pow + additive;
                Cost pw(1);
                while (pw <= t) pw = pw * Cost(c);
                return pw;
            }
            case ReductionKind::TmTo3Edit:
                return Cost(5) * base_pow + additive;
            default:
                return Cost(factor) * source_h;
        }
    }
};

struct ReductionReport {
    ReductionKind kind = ReductionKind::Lift;
    Instance instance;
    size_t rule_count = 0;
    size_t alphabet_size = 0;
    HDerivation h_derivation;
};

namespace detail {

// Rules accumulate into a map so families that overlap (walker rules shared
// by several accepting states, lift contexts) deduplicate; a cost conflict
// would mean the construction itself is inconsistent.
struct RuleBag {
    std::map<Operation, Cost> rules;

    void add(Operation op, Cost cost) {
        auto [it, fresh] = rules.emplace(std::move(op), cost);
        if (!fresh && !(it->second == cost))
            throw std::logic_error("conflicting costs for one operation: " +
                                   operation_text(it->first));
    }
    void add_min(Operation op, const Cost& cost) {
        auto [it, fresh] = rules.emplace(std::move(op), cost);
        if (!fresh && cost < it->second) it->second = cost;
    }
    std::vector<Rule> take() const {
        std::vector<Rule> out;
        out.reserve(rules.size());
        for (const auto& [op, cost] : rules) out.push_back({op, cost});
        return out;
    }
};

inline void require_machine_valid(const TuringMachine& m) {
    auto violations = validate_machine(m);
    if (!violations.empty())
        throw std::invalid_argument("machine invalid: " + violations.front().code + ": " +
                                    violations.front().detail);
}

inline void require_input_over_sigma(const TuringMachine& m, const Str& x) {
    for (const Symbol& s : x)
        if (std::find(m.input_alphabet.begin(), m.input_alphabet.end(), s) ==
            m.input_alphabet.end())
            throw std::invalid_argument("input symbol outside input alphabet: " +
                                        canonical_symbol_text(s));
}

inline void require_no_reserved(const TuringMachine& m, const std::vector<Symbol>& reserved,
                                const char* what) {
    for (const Symbol& r : reserved) {
        if (m.in_tape_alphabet(r) || m.is_state(r))
            throw SymbolClash(std::string(what) + ": machine uses reserved symbol " +
                              canonical_symbol_text(r));
    }
}

}  // namespace detail

// --- TM -> 3-Hamming ----------------------------------------------------------

// v = $ B^{p+1} q0 x B^{p+1} $, w = $ B^{2p+n+3} $, h = least power of c
// strictly above c^{q(n)} + 2p(n) + 4 + n. Unit-cost 3-substitutions simulate
// the machine's moves as a Semi-Thue system and erase the tape once an
// accepting state appears; everything else defaults to h+1.
inline ReductionReport compile_tm_to_3hamming(const TuringMachine& m, const ResourceBounds& b,
                                              const Str& x) {
    detail::require_machine_valid(m);
    detail::require_input_over_sigma(m, x);
    detail::require_no_reserved(m, {sym::dollar(), sym::hash_l(), sym::hash_r()}, "tm-3h");
    if (!m.deterministic) throw NondeterministicMachine("tm-3h requires a deterministic machine");
    for (size_t i = 0; i < m.delta.size(); ++i)
        for (size_t j = i + 1; j < m.delta.size(); ++j)
            if (m.delta[i].from_state == m.delta[j].from_state &&
                m.delta[i].read == m.delta[j].read)
                throw NondeterministicMachine("duplicate transition on one (state, symbol)");

    uint64_t n = x.size();
    uint64_t pn = b.p.eval(n), qn = b.q.eval(n);
    if (pn < 1 || qn < 1) throw std::invalid_argument("resource polynomials must be >= 1");

    HDerivation deriv;
    deriv.kind = ReductionKind::TmTo3Hamming;
    deriv.n = n;
    deriv.c = b.c;
    deriv.base_pow = Cost::pow(Cost(b.c), qn);
    deriv.additive = Cost(2 * pn + 4 + n);
    deriv.threshold = deriv.base_pow + deriv.additive;
    Cost h(1);
    uint64_t mexp = 0;
    while (h <= deriv.threshold) {
        h = h * Cost(b.c);
        ++mexp;
    }
    deriv.m = mexp;
    deriv.h = h;

    const Symbol dollar = sym::dollar();
    const Symbol hl = sym::hash_l();
    const Symbol hr = sym::hash_r();
    const Symbol& blank = m.blank;

    Str v;
    v.push_back(dollar);
    for (uint64_t i = 0; i < pn + 1; ++i) v.push_back(blank);
    v.push_back(m.start);
    for (const Symbol& s : x) v.push_back(s);
    for (uint64_t i = 0; i < pn + 1; ++i) v.push_back(blank);
    v.push_back(dollar);

    Str w;
    w.push_back(dollar);
    for (uint64_t i = 0; i < 2 * pn + n + 3; ++i) w.push_back(blank);
    w.push_back(dollar);

    detail::RuleBag bag;
    for (const Transition& t : m.delta) {
        for (const Symbol& y : m.tape_alphabet) {
            if (t.move == 'R')
                bag.add(Operation::ksub({y, t.from_state, t.read}, {y, t.write, t.to_state}),
                        Cost(1));
            else
                bag.add(Operation::ksub({y, t.from_state, t.read}, {t.to_state, y, t.write}),
                        Cost(1));
        }
    }
    for (const Symbol& qs : m.accepting)
        for (const Symbol& a : m.tape_alphabet)
            for (const Symbol& c2 : m.tape_alphabet)
                bag.add(Operation::ksub({a, qs, c2}, {hl, blank, hr}), Cost(1));
    for (const Symbol& a : m.tape_alphabet)
        bag.add(Operation::ksub({a, hl, blank}, {hl, blank, blank}), Cost(1));
    bag.add(Operation::ksub({dollar, hl, blank}, {dollar, blank, blank}), Cost(1));
    for (const Symbol& a : m.tape_alphabet)
        bag.add(Operation::ksub({blank, hr, a}, {blank, blank, hr}), Cost(1));
    bag.add(Operation::ksub({blank, hr, dollar}, {blank, blank, dollar}), Cost(1));

    std::vector<Symbol> sigma = m.tape_alphabet;
    sigma.insert(sigma.end(), m.states.begin(), m.states.end());
    sigma.push_back(dollar);
    sigma.push_back(hl);
    sigma.push_back(hr);

    ReductionReport report;
    report.kind = ReductionKind::TmTo3Hamming;
    report.instance = Instance{std::move(v), std::move(w),
                               CostModel{3, OpSet::hamming(), Alphabet(std::move(sigma)),
                                         bag.take(), deriv.h + Cost(1)},
                               deriv.h};
    report.rule_count = report.instance.d.rules.size();
    report.alphabet_size = report.instance.d.alphabet.size();
    report.h_derivation = deriv;
    return report;
}

// --- TM -> 3-Edit -------------------------------------------------------------

// v = $ q0 x $, w = $$, h = 5*2^{p(n)} + 2(n+1). Interior moves cost 3;
// boundary moves cost 1 and complete to 3 with a fresh-blank insertion plus a
// tape-expansion rewrite; after acceptance the tape is converted to stars and
// deleted at unit cost.
inline ReductionReport compile_tm_to_3edit(const TuringMachine& m, const ResourceBounds& b,
                                           const Str& x) {
    detail::require_machine_valid(m);
    detail::require_input_over_sigma(m, x);
    detail::require_no_reserved(
        m, {sym::dollar(), sym::blank1(), sym::star(), sym::hash_l(), sym::hash_r()}, "tm-3e");

    uint64_t n = x.size();
    uint64_t pn = b.p.eval(n);
    if (pn < 1) throw std::invalid_argument("resource polynomials must be >= 1");

    HDerivation deriv;
    deriv.kind = ReductionKind::TmTo3Edit;
    deriv.n = n;
    deriv.base_pow = Cost::pow(Cost(2), pn);
    deriv.additive = Cost(2 * (n + 1));
    deriv.h = Cost(5) * deriv.base_pow + deriv.additive;

    const Symbol dollar = sym::dollar();
    const Symbol b1 = sym::blank1();
    const Symbol star = sym::star();
    const Symbol hl = sym::hash_l();
    const Symbol hr = sym::hash_r();
    const Symbol& blank = m.blank;

    Str v;
    v.push_back(dollar);
    v.push_back(m.start);
    for (const Symbol& s : x) v.push_back(s);
    v.push_back(dollar);
    Str w{dollar, dollar};

    detail::RuleBag bag;
    bag.add(Operation::insertion(b1), Cost(1));
    bag.add(Operation::deletion(star), Cost(1));

    for (const Transition& t : m.delta) {
        if (t.move == 'R') {
            for (const Symbol& y : m.tape_alphabet)
                bag.add(Operation::ksub({t.from_state, t.read, y}, {t.write, t.to_state, y}),
                        Cost(3));
            bag.add(Operation::ksub({t.from_state, t.read, dollar}, {t.write, t.to_state, dollar}),
                    Cost(m.is_accepting(t.to_state) ? 3 : 1));
        } else {
            for (const Symbol& y : m.tape_alphabet)
                bag.add(Operation::ksub({y, t.from_state, t.read}, {t.to_state, y, t.write}),
                        Cost(3));
            bag.add(Operation::ksub({dollar, t.from_state, t.read}, {t.to_state, dollar, t.write}),
                    Cost(1));
        }
    }
    for (const Symbol& q : m.states) {
        bag.add(Operation::ksub({q, b1, dollar}, {q, blank, dollar}), Cost(1));
        bag.add(Operation::ksub({q, dollar, b1}, {dollar, q, blank}), Cost(1));
    }
    for (const Symbol& p : m.accepting) {
        for (const Symbol& a : m.tape_alphabet) {
            for (const Symbol& c2 : m.tape_alphabet)
                bag.add(Operation::ksub({a, p, c2}, {hl, star, hr}), Cost(1));
            bag.add(Operation::ksub({dollar, p, a}, {dollar, star, hr}), Cost(1));
            bag.add(Operation::ksub({a, p, dollar}, {hl, star, dollar}), Cost(1));
        }
        bag.add(Operation::ksub({dollar, p, dollar}, {dollar, star, dollar}), Cost(1));
    }
    for (const Symbol& a : m.tape_alphabet) {
        bag.add(Operation::ksub({a, hl, star}, {hl, star, star}), Cost(1));
        bag.add(Operation::ksub({star, hr, a}, {star, star, hr}), Cost(1));
    }
    bag.add(Operation::ksub({dollar, hl, star}, {dollar, star, star}), Cost(1));
    bag.add(Operation::ksub({star, hr, dollar}, {star, star, dollar}), Cost(1));

    std::vector<Symbol> sigma = m.tape_alphabet;
    sigma.insert(sigma.end(), m.states.begin(), m.states.end());
    sigma.push_back(dollar);
    sigma.push_back(b1);
    sigma.push_back(star);
    sigma.push_back(hl);
    sigma.push_back(hr);

    ReductionReport report;
    report.kind = ReductionKind::TmTo3Edit;
    report.instance =
        Instance{std::move(v), std::move(w),
                 CostModel{3, OpSet::edit(), Alphabet(std::move(sigma)), bag.take(),
                           deriv.h + Cost(1)},
                 deriv.h};
    report.rule_count = report.instance.d.rules.size();
    report.alphabet_size = report.instance.d.alphabet.size();
    report.h_derivation = deriv;
    return report;
}

// --- pair codec ---------------------------------------------------------------

// Sliding window of length 2 and stride 1 over the $-padded string:
// ab -> P($,a) P(a,b) P(b,$). Length grows by exactly one.
inline Str pair_encode(const Str& v) {
    for (const Symbol& s : v)
        if (!s.is_atomic())
            throw std::invalid_argument("pair_encode requires an atomic-symbol string, found " +
                                        canonical_symbol_text(s));
    Str padded;
    padded.reserve(v.size() + 2);
    padded.push_back(sym::dollar());
    padded.insert(padded.end(), v.begin(), v.end());
    padded.push_back(sym::dollar());
    Str out;
    out.reserve(v.size() + 1);
    for (size_t i = 0; i + 1 < padded.size(); ++i) out.push_back(sym::pair(padded[i], padded[i + 1]));
    return out;
}

inline Str pair_decode(const Str& coded) {
    if (coded.empty()) throw BoundaryMissing("empty pair chain");
    for (const Symbol& s : coded)
        if (s.kind != SymbolKind::Pair)
            throw ChainBroken("non-pair symbol in chain: " + canonical_symbol_text(s));
    if (!(coded.front().parts[0] == sym::dollar()))
        throw BoundaryMissing("chain does not start at $");
    if (!(coded.back().parts[1] == sym::dollar()))
        throw BoundaryMissing("chain does not end at $");
    for (size_t i = 0; i + 1 < coded.size(); ++i)
        if (!(coded[i].parts[1] == coded[i + 1].parts[0]))
            throw ChainBroken("adjacent pairs disagree at position " + std::to_string(i + 1));
    Str out;
    out.reserve(coded.size() - 1);
    for (size_t i = 0; i + 1 < coded.size(); ++i) out.push_back(coded[i].parts[1]);
    return out;
}

// --- restricted classes -------------------------------------------------------

inline bool is_prime_3hamming(const Instance& inst) {
    const CostModel& d = inst.d;
    if (d.k != 3 || !(d.ops == OpSet::hamming())) return false;
    Cost hp1 = inst.h + Cost(1);
    if (!d.default_cost || !(*d.default_cost == Cost(1) || *d.default_cost == hp1)) return false;
    for (const Rule& r : d.rules)
        if (!(r.cost == Cost(1) || r.cost == hp1)) return false;
    return true;
}

inline bool is_prime_3edit(const Instance& inst) {
    const CostModel& d = inst.d;
    if (d.k != 3 || !(d.ops == OpSet::edit())) return false;
    Cost hp1 = inst.h + Cost(1);
    if (!d.default_cost || !(*d.default_cost == Cost(1) || *d.default_cost == hp1)) return false;
    for (const Rule& r : d.rules) {
        bool three_sub = r.op.type == Operation::Type::KSubstitution && r.op.lhs.size() == 3;
        if (three_sub) {
            if (!(r.cost == Cost(1) || r.cost == Cost(3) || r.cost == hp1)) return false;
        } else {
            if (!(r.cost == Cost(1) || r.cost == hp1)) return false;
        }
    }
    return true;
}

namespace detail {

inline void require_compilable_prime(const Instance& inst, bool edit, const char* what) {
    bool prime = edit ? is_prime_3edit(inst) : is_prime_3hamming(inst);
    if (!prime)
        throw NotPrimeInstance(std::string(what) + ": instance is not in the restricted class");
    // A default of 1 is within the class but stands for |Sigma|^6 implicit
    // unit-cost rules, which the sparse gadget compilation cannot enumerate.
    if (!(inst.d.default_cost && *inst.d.default_cost == inst.h + Cost(1)))
        throw NotPrimeInstance(std::string(what) + ": default cost must be h+1");
    for (const Symbol& s : inst.d.alphabet)
        if (!s.is_atomic())
            throw NotPrimeInstance(std::string(what) +
                                   ": source alphabet must be atomic, found " +
                                   canonical_symbol_text(s));
}

}  // namespace detail

// --- 3-Hamming -> 2-Hamming ---------------------------------------------------

// Pair-code both strings and replace each unit-cost 3-substitution abc -> def
// by a trigger plus one left-fix and one right-fix family of unit-cost
// 2-substitutions over directional gadget symbols; h' = 3h.
inline ReductionReport compile_3h_to_2h(const Instance& inst) {
    detail::require_compilable_prime(inst, false, "3h-2h");

    Str v2 = pair_encode(inst.v);
    Str w2 = pair_encode(inst.w);

    std::vector<Symbol> contexts = inst.d.alphabet.symbols();
    if (!inst.d.alphabet.contains(sym::dollar())) contexts.push_back(sym::dollar());

    detail::RuleBag bag;
    std::set<Symbol> used(v2.begin(), v2.end());
    used.insert(w2.begin(), w2.end());

    for (const Rule& r : inst.d.rules) {
        if (!(r.cost == Cost(1))) continue;  // h+1 rules stay inhibited via the default
        const Str& l = r.op.lhs;
        const Str& rr = r.op.rhs;
        const Symbol &a = l[0], &b = l[1], &c = l[2];
        const Symbol &d = rr[0], &e = rr[1], &f = rr[2];
        Symbol gl = sym::dir_l({a, b}, {d, e});
        Symbol gr = sym::dir_r({b, c}, {e, f});
        bag.add(Operation::ksub({sym::pair(a, b), sym::pair(b, c)}, {gl, gr}), Cost(1));
        for (const Symbol& xx : contexts) {
            bag.add(Operation::ksub({sym::pair(xx, a), gl}, {sym::pair(xx, d), sym::pair(d, e)}),
                    Cost(1));
            bag.add(Operation::ksub({gr, sym::pair(c, xx)}, {sym::pair(e, f), sym::pair(f, xx)}),
                    Cost(1));
        }
    }
    for (const auto& [op, cost] : bag.rules) {
        used.insert(op.lhs.begin(), op.lhs.end());
        used.insert(op.rhs.begin(), op.rhs.end());
    }

    HDerivation deriv;
    deriv.kind = ReductionKind::H3ToH2;
    deriv.source_h = inst.h;
    deriv.factor = 3;
    deriv.h = Cost(3) * inst.h;

    ReductionReport report;
    report.kind = ReductionKind::H3ToH2;
    report.instance =
        Instance{std::move(v2), std::move(w2),
                 CostModel{2, OpSet::hamming(),
                           Alphabet(std::vector<Symbol>(used.begin(), used.end())), bag.take(),
                           deriv.h + Cost(1)},
                 deriv.h};
    report.rule_count = report.instance.d.rules.size();
    report.alphabet_size = report.instance.d.alphabet.size();
    report.h_derivation = deriv;
    return report;
}

// --- 3-Edit -> 2-Edit ---------------------------------------------------------

// Strings are unchanged; h' = 5h. Unit-cost edit operations carry over at
// cost 5; each 3-substitution of cost kappa becomes an insertion of a staged
// symbol at cost 5*kappa-4 followed by four unit-cost steps that walk the
// stage across the window and retire through the support marker.
inline ReductionReport compile_3e_to_2e(const Instance& inst) {
    detail::require_compilable_prime(inst, true, "3e-2e");
    if (inst.d.alphabet.contains(sym::support()))
        throw SymbolClash("3e-2e: source already uses the support symbol *2");

    const Symbol sup = sym::support();
    detail::RuleBag bag;
    std::set<Symbol> used(inst.v.begin(), inst.v.end());
    used.insert(inst.w.begin(), inst.w.end());
    used.insert(inst.d.alphabet.begin(), inst.d.alphabet.end());
    used.insert(sup);

    bool any_chain = false;
    for (const Rule& r : inst.d.rules) {
        bool three_sub = r.op.type == Operation::Type::KSubstitution && r.op.lhs.size() == 3;
        if (!three_sub) {
            if (r.cost == Cost(1)) bag.add(r.op, Cost(5));
            continue;
        }
        if (inst.h < r.cost) continue;  // inhibited rules stay behind the default
        const Symbol &a = r.op.lhs[0], &b = r.op.lhs[1], &c = r.op.lhs[2];
        const Symbol &d = r.op.rhs[0], &e = r.op.rhs[1], &f = r.op.rhs[2];
        Symbol s1 = sym::stage(1, {a, b, c}, {d, e, f});
        Symbol s2 = sym::stage(2, {a, b, c}, {d, e, f});
        Symbol s3 = sym::stage(3, {a, b, c}, {d, e, f});
        bag.add(Operation::insertion(s1), Cost(5) * r.cost - Cost(4));
        bag.add(Operation::ksub({a, s1}, {d, s2}), Cost(1));
        bag.add(Operation::ksub({s2, b}, {e, s3}), Cost(1));
        bag.add(Operation::ksub({s3, c}, {f, sup}), Cost(1));
        used.insert({s1, s2, s3});
        any_chain = true;
    }
    if (any_chain) bag.add(Operation::deletion(sup), Cost(1));

    HDerivation deriv;
    deriv.kind = ReductionKind::E3ToE2;
    deriv.source_h = inst.h;
    deriv.factor = 5;
    deriv.h = Cost(5) * inst.h;

    ReductionReport report;
    report.kind = ReductionKind::E3ToE2;
    report.instance =
        Instance{inst.v, inst.w,
                 CostModel{2, OpSet::edit(),
                           Alphabet(std::vector<Symbol>(used.begin(), used.end())), bag.take(),
                           deriv.h + Cost(1)},
                 deriv.h};
    report.rule_count = report.instance.d.rules.size();
    report.alphabet_size = report.instance.d.alphabet.size();
    report.h_derivation = deriv;
    return report;
}

// --- arity lift ---------------------------------------------------------------

enum class LiftFlavor { Hamming, Edit };

// k -> k+1: append PAD to both strings and extend every k-rule by one fixed
// context symbol on the left and on the right; every other (k+1)-substitution
// is inhibited by the h+1 default. Distances are preserved exactly.
inline ReductionReport lift_k(const Instance& inst, LiftFlavor flavor) {
    const CostModel& d = inst.d;
    if (d.k < 2) throw std::invalid_argument("lift_k requires arity k >= 2");
    if (flavor == LiftFlavor::Hamming && !(d.ops == OpSet::hamming()))
        throw std::invalid_argument("Hamming lift requires op set {kS}");
    if (flavor == LiftFlavor::Edit && !d.ops.ksubstitution)
        throw std::invalid_argument("Edit lift requires kS in the op set");
    if (d.alphabet.contains(sym::pad())) throw PadClash("PAD already in the alphabet");
    // a usable default would let one (k+1)-window rewrite simulate more than
    // one k-operation, changing the distance
    if (d.default_cost && *d.default_cost <= inst.h)
        throw std::invalid_argument("lift_k requires an inhibiting default cost");

    const Symbol pad = sym::pad();
    Str v2 = inst.v;
    v2.push_back(pad);
    Str w2 = inst.w;
    w2.push_back(pad);

    std::vector<Symbol> contexts = d.alphabet.symbols();
    contexts.push_back(pad);

    detail::RuleBag bag;
    for (const Rule& r : d.rules) {
        bool wide = r.op.type == Operation::Type::KSubstitution && r.op.lhs.size() == d.k;
        if (!wide) {
            bag.add_min(r.op, r.cost);  // I/D/S carry over unchanged
            continue;
        }
        for (const Symbol& xx : contexts) {
            Str l1{xx};
            l1.insert(l1.end(), r.op.lhs.begin(), r.op.lhs.end());
            Str r1{xx};
            r1.insert(r1.end(), r.op.rhs.begin(), r.op.rhs.end());
            bag.add_min(Operation::ksub(std::move(l1), std::move(r1)), r.cost);

            Str l2 = r.op.lhs;
            l2.push_back(xx);
            Str r2 = r.op.rhs;
            r2.push_back(xx);
            bag.add_min(Operation::ksub(std::move(l2), std::move(r2)), r.cost);
        }
    }

    std::vector<Symbol> sigma = d.alphabet.symbols();
    sigma.push_back(pad);

    HDerivation deriv;
    deriv.kind = ReductionKind::Lift;
    deriv.source_h = inst.h;
    deriv.factor = 1;
    deriv.h = inst.h;

    ReductionReport report;
    report.kind = ReductionKind::Lift;
    report.instance = Instance{std::move(v2), std::move(w2),
                               CostModel{d.k + 1, d.ops, Alphabet(std::move(sigma)), bag.take(),
                                         inst.h + Cost(1)},
                               inst.h};
    report.rule_count = report.instance.d.rules.size();
    report.alphabet_size = report.instance.d.alphabet.size();
    report.h_derivation = deriv;
    return report;
}

}  // namespace strdist

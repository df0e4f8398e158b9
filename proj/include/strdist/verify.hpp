#pragma once

// End-to-end verification: enumerate inputs, run the machine simulator as
// ground truth, compile the reduction (optionally chained to a 2-ary
// instance or a higher arity), decide the compiled instance, and compare
// verdicts. The two sides share no code path: simulators walk configurations,
// the solver searches the rewriting graph.

#include <chrono>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "strdist/io.hpp"
#include "strdist/reductions.hpp"
#include "strdist/solver.hpp"
#include "strdist/turing.hpp"

namespace strdist {

enum class ChainKind { None, To2, Lift };

struct VerifySpec {
    ReductionKind kind = ReductionKind::TmTo3Hamming;  // tm-3h or tm-3e
    ChainKind chain = ChainKind::None;
    uint32_t lift_target = 4;  // target arity for ChainKind::Lift
    size_t max_input_len = 2;
    // when set, rules matching the predicate are deleted from the compiled
    // instance before chaining (mutation testing)
    std::function<bool(const Operation&)> drop_rule;
};

struct VerifyRow {
    Str input;
    std::string oracle;    // accept / reject / time-exceeded / space-exceeded / truncated
    std::string compiled;  // accept / reject / - (skipped)
    bool skipped = false;
    bool match = false;
    std::string solver_outcome;  // Exact / ExceedsBudget / Unreachable / -
    Cost cost;
    bool has_cost = false;
    double wall_ms = 0.0;
};

struct VerificationReport {
    std::string machine_id;
    std::string kind;
    std::string chain;
    std::vector<VerifyRow> rows;
    size_t total = 0;
    size_t matches = 0;
    size_t mismatches = 0;
    size_t skipped = 0;

    bool passed() const { return mismatches == 0; }
};

// All input strings over the machine's input alphabet with length <= max,
// shortest first, then lexicographic in canonical symbol order.
inline std::vector<Str> enumerate_inputs(const TuringMachine& m, size_t max_len) {
    std::vector<Symbol> sigma = m.input_alphabet;
    std::sort(sigma.begin(), sigma.end());
    std::vector<Str> out{Str{}};
    std::vector<Str> level{Str{}};
    for (size_t len = 1; len <= max_len && !sigma.empty(); ++len) {
        std::vector<Str> next;
        for (const Str& s : level)
            for (const Symbol& a : sigma) {
                Str t = s;
                t.push_back(a);
                next.push_back(std::move(t));
            }
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return out;
}

inline Instance compile_for_verify(const TuringMachine& m, const Str& x, const VerifySpec& spec) {
    ReductionReport report = spec.kind == ReductionKind::TmTo3Hamming
                                 ? compile_tm_to_3hamming(m, m.bounds, x)
                                 : compile_tm_to_3edit(m, m.bounds, x);
    Instance inst = std::move(report.instance);
    if (spec.drop_rule) {
        std::vector<Rule> kept;
        for (Rule& r : inst.d.rules)
            if (!spec.drop_rule(r.op)) kept.push_back(std::move(r));
        inst.d.rules = std::move(kept);
    }
    switch (spec.chain) {
        case ChainKind::None:
            break;
        case ChainKind::To2:
            inst = spec.kind == ReductionKind::TmTo3Hamming ? compile_3h_to_2h(inst).instance
                                                            : compile_3e_to_2e(inst).instance;
            break;
        case ChainKind::Lift: {
            LiftFlavor flavor = spec.kind == ReductionKind::TmTo3Hamming ? LiftFlavor::Hamming
                                                                         : LiftFlavor::Edit;
            while (inst.d.k < spec.lift_target) inst = lift_k(inst, flavor).instance;
            break;
        }
    }
    return inst;
}

inline VerificationReport verify_machine(const TuringMachine& m, const VerifySpec& spec,
                                         const SolverOptions& opts = {}) {
    VerificationReport report;
    report.machine_id = m.name.empty() ? "machine" : m.name;
    report.kind = reduction_kind_name(spec.kind);
    switch (spec.chain) {
        case ChainKind::None: report.chain = "none"; break;
        case ChainKind::To2: report.chain = "to-2"; break;
        case ChainKind::Lift: report.chain = "lift " + std::to_string(spec.lift_target); break;
    }

    for (const Str& x : enumerate_inputs(m, spec.max_input_len)) {
        VerifyRow row;
        row.input = x;
        auto t0 = std::chrono::steady_clock::now();

        bool oracle_accepts = false;
        if (spec.kind == ReductionKind::TmTo3Hamming) {
            RunVerdict v = run_dtm_bounded(m, x, m.bounds);
            row.oracle = verdict_name(v);
            row.skipped = v == RunVerdict::TimeExceeded || v == RunVerdict::SpaceExceeded;
            oracle_accepts = v == RunVerdict::Accept;
        } else {
            NtmRun r = run_ntm_bounded(m, x, m.bounds);
            oracle_accepts = r.accepted;
            if (r.accepted) {
                row.oracle = "accept";
            } else if (r.truncated) {
                // live branches were cut off at the step bound: no claim either way
                row.oracle = "truncated";
                row.skipped = true;
            } else {
                row.oracle = "reject";
            }
        }

        if (row.skipped) {
            row.compiled = "-";
            row.solver_outcome = "-";
        } else {
            Instance inst = compile_for_verify(m, x, spec);
            auto [member, result] = decide(inst, opts);
            row.compiled = member ? "accept" : "reject";
            row.solver_outcome = outcome_name(result.outcome);
            if (result.exact()) {
                row.cost = result.cost;
                row.has_cost = true;
            }
            row.match = member == oracle_accepts;
        }
        row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                          .count();

        ++report.total;
        if (row.skipped)
            ++report.skipped;
        else if (row.match)
            ++report.matches;
        else
            ++report.mismatches;
        report.rows.push_back(std::move(row));
    }
    return report;
}

inline Json verification_report_to_json(const VerificationReport& r) {
    Json j;
    j["machine"] = r.machine_id;
    j["kind"] = r.kind;
    j["chain"] = r.chain;
    Json rows = Json::array();
    for (const VerifyRow& row : r.rows) {
        Json jr;
        jr["input"] = detail::str_to_json(row.input);
        jr["oracle"] = row.oracle;
        jr["compiled"] = row.compiled;
        jr["skipped"] = row.skipped;
        jr["match"] = row.skipped ? Json() : Json(row.match);
        jr["solver"] = row.solver_outcome;
        jr["cost"] = row.has_cost ? Json(row.cost.to_decimal()) : Json();
        jr["wall_ms"] = row.wall_ms;
        rows.push_back(std::move(jr));
    }
    j["rows"] = std::move(rows);
    j["summary"] = Json{{"total", r.total},
                        {"matches", r.matches},
                        {"mismatches", r.mismatches},
                        {"skipped", r.skipped}};
    return j;
}

// The compiled 3-substitutions a single machine transition contributes
// (both reductions); used by mutation tests to knock out one transition.
inline std::vector<Operation> transition_rule_family(const TuringMachine& m, const Transition& t,
                                                     ReductionKind kind) {
    std::vector<Operation> out;
    if (kind == ReductionKind::TmTo3Hamming) {
        for (const Symbol& y : m.tape_alphabet) {
            if (t.move == 'R')
                out.push_back(Operation::ksub({y, t.from_state, t.read}, {y, t.write, t.to_state}));
            else
                out.push_back(Operation::ksub({y, t.from_state, t.read}, {t.to_state, y, t.write}));
        }
    } else {
        const Symbol dollar = sym::dollar();
        if (t.move == 'R') {
            for (const Symbol& y : m.tape_alphabet)
                out.push_back(Operation::ksub({t.from_state, t.read, y}, {t.write, t.to_state, y}));
            out.push_back(Operation::ksub({t.from_state, t.read, dollar},
                                          {t.write, t.to_state, dollar}));
        } else {
            for (const Symbol& y : m.tape_alphabet)
                out.push_back(Operation::ksub({y, t.from_state, t.read}, {t.to_state, y, t.write}));
            out.push_back(Operation::ksub({dollar, t.from_state, t.read},
                                          {t.to_state, dollar, t.write}));
        }
    }
    return out;
}

}  // namespace strdist

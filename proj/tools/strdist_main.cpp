// strdist — weighted k-Hamming / k-Edit distance toolkit.
//
// Subcommands: solve, decide, reduce, verify, oracle, gen.
// Exit codes: 0 member/found, 1 non-member/over budget, 2 unreachable,
// 3 usage, parse, or validation error.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "strdist/gen.hpp"
#include "strdist/io.hpp"
#include "strdist/oracle.hpp"
#include "strdist/reductions.hpp"
#include "strdist/solver.hpp"
#include "strdist/verify.hpp"

namespace {

using namespace strdist;

constexpr int kExitMember = 0;
constexpr int kExitNonMember = 1;
constexpr int kExitUnreachable = 2;
constexpr int kExitError = 3;

// Input strings: "a,b,q0" splits on commas, "ab" is one symbol per
// character, "" is the empty string.
Str parse_input_text(const std::string& text) {
    Str out;
    if (text.empty()) return out;
    if (text.find(',') != std::string::npos) {
        size_t start = 0;
        while (true) {
            size_t comma = text.find(',', start);
            out.push_back(parse_symbol_text(text.substr(
                start, comma == std::string::npos ? std::string::npos : comma - start)));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    } else {
        for (char c : text) out.push_back(parse_symbol_text(std::string(1, c)));
    }
    return out;
}

Instance load_validated_instance(const std::string& path) {
    Instance inst = load_instance(path);
    auto violations = validate_instance(inst);
    if (!violations.empty()) {
        for (const auto& v : violations) std::cerr << path << ": " << v.code << ": " << v.detail << "\n";
        throw std::runtime_error("instance failed validation");
    }
    return inst;
}

Json witness_to_json(const TransformationSequence& t) {
    Json steps = Json::array();
    for (const Step& s : t.steps) {
        Json js;
        switch (s.op.type) {
            case Operation::Type::Insertion: js["type"] = "I"; break;
            case Operation::Type::Deletion: js["type"] = "D"; break;
            default: js["type"] = s.op.lhs.size() == 1 ? "S" : "kS"; break;
        }
        js["lhs"] = detail::str_to_json(s.op.lhs);
        js["rhs"] = detail::str_to_json(s.op.rhs);
        js["pos"] = s.pos;
        steps.push_back(std::move(js));
    }
    return Json{{"steps", std::move(steps)}, {"total_cost", t.total_cost.to_decimal()}};
}

int do_solve(const std::string& path, const std::string& budget_text,
             const std::string& witness_path) {
    Instance inst = load_validated_instance(path);
    Cost budget = budget_text.empty() ? inst.h : Cost::from_decimal(budget_text);
    DistanceResult r = distance(inst.v, inst.w, inst.d, budget);
    switch (r.outcome) {
        case DistanceResult::Outcome::Exact:
            std::cout << "Exact " << r.cost.to_decimal() << "\n";
            if (!witness_path.empty())
                write_text_file(witness_path, json_to_bytes(witness_to_json(r.witness)));
            return kExitMember;
        case DistanceResult::Outcome::ExceedsBudget:
            std::cout << "ExceedsBudget\n";
            return kExitNonMember;
        default:
            std::cout << "Unreachable\n";
            return kExitUnreachable;
    }
}

int do_decide(const std::string& path) {
    Instance inst = load_validated_instance(path);
    auto [member, result] = decide(inst);
    std::cout << (member ? "yes" : "no") << "\n";
    return member ? kExitMember : kExitNonMember;
}

int do_oracle(const std::string& path, const std::string& budget_text) {
    Instance inst = load_validated_instance(path);
    Cost budget = budget_text.empty() ? inst.h : Cost::from_decimal(budget_text);
    auto best = brute_force_distance(inst.v, inst.w, inst.d, budget);
    if (best) {
        std::cout << "Exact " << best->to_decimal() << "\n";
        return kExitMember;
    }
    std::cout << "NoSequenceWithinBudget\n";
    return kExitNonMember;
}

int do_reduce(const std::string& kind, const std::string& machine_path,
              const std::string& input_text, const std::string& in_path,
              const std::string& out_path, const std::string& report_path) {
    ReductionReport report;
    if (kind == "tm-3h" || kind == "tm-3e") {
        if (machine_path.empty()) throw std::runtime_error(kind + " needs --machine");
        TuringMachine m = load_machine(machine_path);
        auto violations = validate_machine(m);
        if (!violations.empty()) {
            for (const auto& v : violations)
                std::cerr << machine_path << ": " << v.code << ": " << v.detail << "\n";
            throw std::runtime_error("machine failed validation");
        }
        Str x = parse_input_text(input_text);
        report = kind == "tm-3h" ? compile_tm_to_3hamming(m, m.bounds, x)
                                 : compile_tm_to_3edit(m, m.bounds, x);
    } else if (kind == "3h-2h" || kind == "3e-2e" || kind == "lift") {
        if (in_path.empty()) throw std::runtime_error(kind + " needs --in");
        Instance inst = load_validated_instance(in_path);
        if (kind == "3h-2h") {
            report = compile_3h_to_2h(inst);
        } else if (kind == "3e-2e") {
            report = compile_3e_to_2e(inst);
        } else {
            LiftFlavor flavor = inst.d.ops == OpSet::hamming() ? LiftFlavor::Hamming
                                                               : LiftFlavor::Edit;
            report = lift_k(inst, flavor);
        }
    } else {
        throw std::runtime_error("unknown reduction kind '" + kind +
                                 "' (expected tm-3h, tm-3e, 3h-2h, 3e-2e, lift)");
    }
    save_instance(out_path, report.instance);
    if (!report_path.empty())
        write_text_file(report_path, json_to_bytes(reduction_report_to_json(report)));
    std::cout << "wrote " << out_path << " (rules=" << report.rule_count
              << " alphabet=" << report.alphabet_size << " h=" << report.instance.h.to_decimal()
              << ")\n";
    return 0;
}

int do_verify(const std::string& machine_path, const std::string& kind, size_t max_len,
              const std::string& chain, const std::string& report_path) {
    TuringMachine m = load_machine(machine_path);
    auto violations = validate_machine(m);
    if (!violations.empty()) {
        for (const auto& v : violations)
            std::cerr << machine_path << ": " << v.code << ": " << v.detail << "\n";
        throw std::runtime_error("machine failed validation");
    }

    VerifySpec spec;
    if (kind == "tm-3h")
        spec.kind = ReductionKind::TmTo3Hamming;
    else if (kind == "tm-3e")
        spec.kind = ReductionKind::TmTo3Edit;
    else
        throw std::runtime_error("verify kind must be tm-3h or tm-3e");
    spec.max_input_len = max_len;
    if (chain == "none") {
        spec.chain = ChainKind::None;
    } else if (chain == "to-2") {
        spec.chain = ChainKind::To2;
    } else if (chain.rfind("lift:", 0) == 0) {
        spec.chain = ChainKind::Lift;
        spec.lift_target = static_cast<uint32_t>(std::stoul(chain.substr(5)));
        if (spec.lift_target < 4) throw std::runtime_error("lift target must be >= 4");
    } else {
        throw std::runtime_error("chain must be none, to-2, or lift:K");
    }

    VerificationReport report = verify_machine(m, spec);
    for (const VerifyRow& row : report.rows) {
        std::string input = row.input.empty() ? "(empty)" : str_text(row.input, "");
        std::cout << input << "  oracle=" << row.oracle << "  compiled=" << row.compiled;
        if (row.has_cost) std::cout << "  cost=" << row.cost.to_decimal();
        std::cout << "  " << (row.skipped ? "SKIP" : row.match ? "match" : "MISMATCH") << "  ("
                  << row.wall_ms << " ms)\n";
    }
    std::cout << "summary: " << report.matches << "/" << (report.total - report.skipped)
              << " matched, " << report.mismatches << " mismatched, " << report.skipped
              << " skipped\n";
    if (!report_path.empty())
        write_text_file(report_path, json_to_bytes(verification_report_to_json(report)));
    return report.passed() ? 0 : 1;
}

int do_gen(uint64_t seed, GenParams params, const std::string& out_path) {
    Instance inst = gen_random_instance(seed, params);
    save_instance(out_path, inst);
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted k-Hamming / k-Edit distances and reduction compilation"};
    app.require_subcommand(1);
    int rc = 0;

    auto* solve = app.add_subcommand("solve", "exact distance of an instance, within its budget");
    std::string solve_path, solve_budget, solve_witness;
    solve->add_option("instance", solve_path, "instance file")->required();
    solve->add_option("--budget", solve_budget, "budget override (decimal)");
    solve->add_option("--witness", solve_witness, "write the optimal witness to this file");
    solve->callback([&] { rc = do_solve(solve_path, solve_budget, solve_witness); });

    auto* dec = app.add_subcommand("decide", "is the distance at most h?");
    std::string decide_path;
    dec->add_option("instance", decide_path, "instance file")->required();
    dec->callback([&] { rc = do_decide(decide_path); });

    auto* oracle = app.add_subcommand("oracle", "brute-force distance (small instances only)");
    std::string oracle_path, oracle_budget;
    oracle->add_option("instance", oracle_path, "instance file")->required();
    oracle->add_option("--budget", oracle_budget, "budget override (decimal)");
    oracle->callback([&] { rc = do_oracle(oracle_path, oracle_budget); });

    auto* reduce = app.add_subcommand("reduce", "compile a reduction into an instance file");
    std::string reduce_kind, reduce_machine, reduce_input, reduce_in, reduce_out, reduce_report;
    reduce->add_option("kind", reduce_kind, "tm-3h | tm-3e | 3h-2h | 3e-2e | lift")->required();
    reduce->add_option("--machine", reduce_machine, "machine file (tm-* kinds)");
    reduce->add_option("--input", reduce_input, "machine input string (tm-* kinds)");
    reduce->add_option("--in", reduce_in, "source instance file (3h-2h, 3e-2e, lift)");
    reduce->add_option("--out", reduce_out, "output instance file")->required();
    reduce->add_option("--report", reduce_report, "also write a reduction report");
    reduce->callback([&] {
        rc = do_reduce(reduce_kind, reduce_machine, reduce_input, reduce_in, reduce_out,
                       reduce_report);
    });

    auto* verify = app.add_subcommand(
        "verify", "machine verdicts vs compiled-instance verdicts on all short inputs");
    std::string verify_machine_path, verify_kind = "tm-3h", verify_chain = "none", verify_report;
    size_t verify_max_len = 2;
    verify->add_option("machine", verify_machine_path, "machine file")->required();
    verify->add_option("--kind", verify_kind, "tm-3h | tm-3e");
    verify->add_option("--max-input-len", verify_max_len, "enumerate inputs up to this length");
    verify->add_option("--chain", verify_chain, "none | to-2 | lift:K");
    verify->add_option("--report", verify_report, "write the verification report");
    verify->callback([&] {
        rc = do_verify(verify_machine_path, verify_kind, verify_max_len, verify_chain,
                       verify_report);
    });

    auto* gen = app.add_subcommand("gen", "generate a random instance from a seed");
    uint64_t gen_seed = 0;
    GenParams params;
    std::string gen_out, gen_default = "forbidden";
    bool gen_edit = false;
    gen->add_option("--seed", gen_seed, "generator seed")->required();
    gen->add_option("--k", params.k, "substitution arity");
    gen->add_option("--sigma", params.sigma, "alphabet size");
    gen->add_option("--len", params.v_len, "length of v");
    gen->add_option("--wlen", params.w_len, "length of w (edit flavor)");
    gen->add_option("--rules", params.rule_count, "number of explicit rules");
    gen->add_option("--max-cost", params.max_cost, "maximum explicit rule cost");
    gen->add_option("--budget", params.h, "budget h of the generated instance");
    gen->add_flag("--edit", gen_edit, "edit flavor (default is Hamming)");
    gen->add_option("--default", gen_default, "forbidden | finite | inhibit");
    gen->add_option("--out", gen_out, "output instance file")->required();
    gen->callback([&] {
        params.edit = gen_edit;
        if (gen_default == "forbidden")
            params.default_mode = GenParams::DefaultMode::Forbidden;
        else if (gen_default == "finite")
            params.default_mode = GenParams::DefaultMode::Finite;
        else if (gen_default == "inhibit")
            params.default_mode = GenParams::DefaultMode::Inhibit;
        else
            throw std::runtime_error("--default must be forbidden, finite, or inhibit");
        rc = do_gen(gen_seed, params, gen_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return rc;
}

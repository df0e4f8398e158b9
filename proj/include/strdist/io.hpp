#pragma once

// File formats: instances, machines, and reduction reports are UTF-8 JSON
// documents with a fixed field order, so identical inputs serialize to
// identical bytes.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "strdist/core.hpp"
#include "strdist/reductions.hpp"
#include "strdist/turing.hpp"

namespace strdist {

using Json = nlohmann::ordered_json;

class FileFormatError : public std::runtime_error {
public:
    explicit FileFormatError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline Json str_to_json(const Str& s) {
    Json out = Json::array();
    for (const Symbol& c : s) out.push_back(canonical_symbol_text(c));
    return out;
}

inline Str str_from_json(const Json& j, const char* what) {
    if (!j.is_array()) throw FileFormatError(std::string(what) + " must be a list of symbol texts");
    Str out;
    for (const auto& e : j) {
        if (!e.is_string()) throw FileFormatError(std::string(what) + " must contain strings");
        try {
            out.push_back(parse_symbol_text(e.get<std::string>()));
        } catch (const ParseError& pe) {
            throw FileFormatError(std::string(what) + ": " + pe.what());
        }
    }
    return out;
}

inline const Json& field(const Json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw FileFormatError(std::string("missing field '") + name + "'");
    return *it;
}

inline Cost cost_from_json(const Json& j, const char* what) {
    if (!j.is_string()) throw FileFormatError(std::string(what) + " must be a decimal string");
    try {
        return Cost::from_decimal(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw FileFormatError(std::string(what) + ": " + e.what());
    }
}

}  // namespace detail

// --- instances ----------------------------------------------------------------

inline Json instance_to_json(const Instance& inst) {
    const CostModel& d = inst.d;
    Json j;
    j["k"] = d.k;
    Json ops = Json::array();
    if (d.ops.insertion) ops.push_back("I");
    if (d.ops.deletion) ops.push_back("D");
    if (d.ops.substitution) ops.push_back("S");
    if (d.ops.ksubstitution) ops.push_back("kS");
    j["ops"] = std::move(ops);
    Json alpha = Json::array();
    for (const Symbol& s : d.alphabet) alpha.push_back(canonical_symbol_text(s));
    j["alphabet"] = std::move(alpha);
    j["v"] = detail::str_to_json(inst.v);
    j["w"] = detail::str_to_json(inst.w);
    j["h"] = inst.h.to_decimal();
    j["default_cost"] = d.default_cost ? Json(d.default_cost->to_decimal()) : Json("forbidden");
    Json rules = Json::array();
    for (const Rule& r : d.rules) {
        Json jr;
        switch (r.op.type) {
            case Operation::Type::Insertion: jr["type"] = "I"; break;
            case Operation::Type::Deletion: jr["type"] = "D"; break;
            default: jr["type"] = r.op.lhs.size() == 1 ? "S" : "kS"; break;
        }
        jr["lhs"] = detail::str_to_json(r.op.lhs);
        jr["rhs"] = detail::str_to_json(r.op.rhs);
        jr["cost"] = r.cost.to_decimal();
        rules.push_back(std::move(jr));
    }
    j["rules"] = std::move(rules);
    return j;
}

inline Instance instance_from_json(const Json& j) {
    Instance inst;
    CostModel& d = inst.d;
    if (!detail::field(j, "k").is_number_unsigned()) throw FileFormatError("k must be an integer");
    d.k = detail::field(j, "k").get<uint32_t>();
    for (const auto& o : detail::field(j, "ops")) {
        std::string s = o.get<std::string>();
        if (s == "I")
            d.ops.insertion = true;
        else if (s == "D")
            d.ops.deletion = true;
        else if (s == "S")
            d.ops.substitution = true;
        else if (s == "kS")
            d.ops.ksubstitution = true;
        else
            throw FileFormatError("unknown op '" + s + "'");
    }
    d.alphabet = Alphabet(detail::str_from_json(detail::field(j, "alphabet"), "alphabet"));
    inst.v = detail::str_from_json(detail::field(j, "v"), "v");
    inst.w = detail::str_from_json(detail::field(j, "w"), "w");
    inst.h = detail::cost_from_json(detail::field(j, "h"), "h");
    const Json& def = detail::field(j, "default_cost");
    if (def.is_string() && def.get<std::string>() == "forbidden")
        d.default_cost = std::nullopt;
    else
        d.default_cost = detail::cost_from_json(def, "default_cost");
    for (const auto& jr : detail::field(j, "rules")) {
        std::string type = detail::field(jr, "type").get<std::string>();
        Str lhs = detail::str_from_json(detail::field(jr, "lhs"), "rule lhs");
        Str rhs = detail::str_from_json(detail::field(jr, "rhs"), "rule rhs");
        Cost cost = detail::cost_from_json(detail::field(jr, "cost"), "rule cost");
        Operation op;
        if (type == "I") {
            if (!lhs.empty() || rhs.size() != 1) throw FileFormatError("bad insertion rule shape");
            op = Operation::insertion(rhs[0]);
        } else if (type == "D") {
            if (lhs.size() != 1 || !rhs.empty()) throw FileFormatError("bad deletion rule shape");
            op = Operation::deletion(lhs[0]);
        } else if (type == "S") {
            if (lhs.size() != 1 || rhs.size() != 1) throw FileFormatError("bad substitution rule shape");
            op = Operation::ksub(std::move(lhs), std::move(rhs));
        } else if (type == "kS") {
            if (lhs.size() != rhs.size() || lhs.empty())
                throw FileFormatError("bad k-substitution rule shape");
            op = Operation::ksub(std::move(lhs), std::move(rhs));
        } else {
            throw FileFormatError("unknown rule type '" + type + "'");
        }
        d.rules.push_back({std::move(op), std::move(cost)});
    }
    return inst;
}

// --- machines -----------------------------------------------------------------

inline TuringMachine machine_from_json(const Json& j, const std::string& name = "") {
    TuringMachine m;
    m.name = name;
    auto syms = [&](const char* f) { return detail::str_from_json(detail::field(j, f), f); };
    m.states = syms("states");
    m.tape_alphabet = syms("tape_alphabet");
    m.blank = parse_symbol_text(detail::field(j, "blank").get<std::string>());
    m.input_alphabet = syms("input_alphabet");
    for (const auto& jt : detail::field(j, "delta")) {
        Transition t;
        t.from_state = parse_symbol_text(detail::field(jt, "from").get<std::string>());
        t.read = parse_symbol_text(detail::field(jt, "read").get<std::string>());
        t.to_state = parse_symbol_text(detail::field(jt, "to").get<std::string>());
        t.write = parse_symbol_text(detail::field(jt, "write").get<std::string>());
        std::string mv = detail::field(jt, "move").get<std::string>();
        if (mv != "L" && mv != "R") throw FileFormatError("move must be \"L\" or \"R\"");
        t.move = mv[0];
        m.delta.push_back(std::move(t));
    }
    m.start = parse_symbol_text(detail::field(j, "start").get<std::string>());
    m.accepting = syms("accept");
    const Json& jb = detail::field(j, "bounds");
    m.bounds.c = detail::field(jb, "c").get<uint64_t>();
    for (const auto& e : detail::field(jb, "p")) m.bounds.p.coeffs.push_back(e.get<uint64_t>());
    for (const auto& e : detail::field(jb, "q")) m.bounds.q.coeffs.push_back(e.get<uint64_t>());
    m.deterministic = detail::field(j, "deterministic").get<bool>();
    return m;
}

inline Json machine_to_json(const TuringMachine& m) {
    Json j;
    auto symlist = [](const std::vector<Symbol>& v) {
        Json out = Json::array();
        for (const Symbol& s : v) out.push_back(canonical_symbol_text(s));
        return out;
    };
    j["states"] = symlist(m.states);
    j["tape_alphabet"] = symlist(m.tape_alphabet);
    j["blank"] = canonical_symbol_text(m.blank);
    j["input_alphabet"] = symlist(m.input_alphabet);
    Json delta = Json::array();
    for (const Transition& t : m.delta) {
        Json jt;
        jt["from"] = canonical_symbol_text(t.from_state);
        jt["read"] = canonical_symbol_text(t.read);
        jt["to"] = canonical_symbol_text(t.to_state);
        jt["write"] = canonical_symbol_text(t.write);
        jt["move"] = std::string(1, t.move);
        delta.push_back(std::move(jt));
    }
    j["delta"] = std::move(delta);
    j["start"] = canonical_symbol_text(m.start);
    j["accept"] = symlist(m.accepting);
    j["bounds"] = Json{{"c", m.bounds.c}, {"p", m.bounds.p.coeffs}, {"q", m.bounds.q.coeffs}};
    j["deterministic"] = m.deterministic;
    return j;
}

// --- reduction reports ----------------------------------------------------------

inline Json reduction_report_to_json(const ReductionReport& r) {
    Json j;
    j["kind"] = reduction_kind_name(r.kind);
    j["rule_count"] = r.rule_count;
    j["alphabet_size"] = r.alphabet_size;
    j["v_length"] = r.instance.v.size();
    j["w_length"] = r.instance.w.size();
    Json d;
    const HDerivation& hd = r.h_derivation;
    switch (hd.kind) {
        case ReductionKind::TmTo3Hamming:
            d["n"] = hd.n;
            d["c"] = hd.c;
            d["c_pow_q"] = hd.base_pow.to_decimal();
            d["additive"] = hd.additive.to_decimal();
            d["threshold"] = hd.threshold.to_decimal();
            d["m"] = hd.m;
            break;
        case ReductionKind::TmTo3Edit:
            d["n"] = hd.n;
            d["two_pow_p"] = hd.base_pow.to_decimal();
            d["additive"] = hd.additive.to_decimal();
            break;
        default:
            d["source_h"] = hd.source_h.to_decimal();
            d["factor"] = hd.factor;
            break;
    }
    d["h"] = hd.h.to_decimal();
    j["h_derivation"] = std::move(d);
    return j;
}

// --- files ----------------------------------------------------------------------

inline std::string json_to_bytes(const Json& j) { return j.dump(2) + "\n"; }

inline void write_text_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << bytes;
    if (!out) throw std::runtime_error("write failed: " + path);
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Json parse_json_file(const std::string& path) {
    try {
        return Json::parse(read_text_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw FileFormatError(path + ": " + e.what());
    }
}

inline Instance load_instance(const std::string& path) {
    return instance_from_json(parse_json_file(path));
}

inline void save_instance(const std::string& path, const Instance& inst) {
    write_text_file(path, json_to_bytes(instance_to_json(inst)));
}

inline std::string path_stem(const std::string& path) {
    size_t slash = path.find_last_of("/\\");
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    size_t dot = base.find_last_of('.');
    return dot == std::string::npos ? base : base.substr(0, dot);
}

inline TuringMachine load_machine(const std::string& path) {
    return machine_from_json(parse_json_file(path), path_stem(path));
}

}  // namespace strdist

#pragma once

// Structured symbol universe: base characters plus the gadget symbols the
// reduction compilers synthesize (markers, pair symbols, directional and
// staged rewrite symbols). Structured kinds nest only atomic symbols, so
// gadget symbols can never collide with base symbols.

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace strdist {

// Kind order is the canonical total order on symbols:
// $ < B < B1 < * < *2 < #L < #R < PAD < Base < Pair < DirL < DirR < Stage.
enum class SymbolKind : uint8_t {
    Dollar,
    Blank,
    Blank1,
    Star,
    Support,  // the fresh deletion marker of the 2-ary edit construction, text "*2"
    HashL,
    HashR,
    Pad,
    Base,
    Pair,
    DirL,
    DirR,
    Stage,
};

class ParseError : public std::runtime_error {
public:
    size_t offset;
    ParseError(const std::string& what, size_t off)
        : std::runtime_error(what + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

struct Symbol {
    SymbolKind kind = SymbolKind::Blank;
    std::string name;           // Base only
    uint8_t stage = 0;          // Stage only, 1..3
    std::vector<Symbol> parts;  // Pair: l,r; DirL/DirR: old l,r then new l,r; Stage: old triple, new triple

    bool is_atomic() const { return kind < SymbolKind::Pair; }

    friend bool operator==(const Symbol& a, const Symbol& b) {
        return a.kind == b.kind && a.stage == b.stage && a.name == b.name && a.parts == b.parts;
    }

    friend bool operator<(const Symbol& a, const Symbol& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        switch (a.kind) {
            case SymbolKind::Base:
                return a.name < b.name;
            case SymbolKind::Stage:
                if (a.stage != b.stage) return a.stage < b.stage;
                return a.parts < b.parts;
            case SymbolKind::Pair:
            case SymbolKind::DirL:
            case SymbolKind::DirR:
                return a.parts < b.parts;
            default:
                return false;  // atomic marker kinds are singletons
        }
    }
    friend bool operator>(const Symbol& a, const Symbol& b) { return b < a; }
    friend bool operator<=(const Symbol& a, const Symbol& b) { return !(b < a); }
    friend bool operator>=(const Symbol& a, const Symbol& b) { return !(a < b); }
};

using Str = std::vector<Symbol>;

namespace sym {

inline Symbol dollar() { return {SymbolKind::Dollar, {}, 0, {}}; }
inline Symbol blank() { return {SymbolKind::Blank, {}, 0, {}}; }
inline Symbol blank1() { return {SymbolKind::Blank1, {}, 0, {}}; }
inline Symbol star() { return {SymbolKind::Star, {}, 0, {}}; }
inline Symbol support() { return {SymbolKind::Support, {}, 0, {}}; }
inline Symbol hash_l() { return {SymbolKind::HashL, {}, 0, {}}; }
inline Symbol hash_r() { return {SymbolKind::HashR, {}, 0, {}}; }
inline Symbol pad() { return {SymbolKind::Pad, {}, 0, {}}; }

inline bool valid_base_name(std::string_view n) {
    if (n.empty()) return false;
    for (char c : n)
        if (!((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_'))
            return false;
    return n != "B" && n != "B1" && n != "PAD";
}

inline Symbol base(std::string_view n) {
    if (!valid_base_name(n)) throw std::invalid_argument("invalid base symbol name: " + std::string(n));
    return {SymbolKind::Base, std::string(n), 0, {}};
}

inline void require_atomic(const Symbol& s, const char* where) {
    if (!s.is_atomic()) throw std::invalid_argument(std::string("non-atomic component in ") + where);
}

inline Symbol pair(Symbol l, Symbol r) {
    require_atomic(l, "Pair");
    require_atomic(r, "Pair");
    return {SymbolKind::Pair, {}, 0, {std::move(l), std::move(r)}};
}

inline Symbol dir(SymbolKind k, std::array<Symbol, 2> old_pair, std::array<Symbol, 2> new_pair) {
    for (const auto& p : old_pair) require_atomic(p, "Dir");
    for (const auto& p : new_pair) require_atomic(p, "Dir");
    return {k, {}, 0, {old_pair[0], old_pair[1], new_pair[0], new_pair[1]}};
}

inline Symbol dir_l(std::array<Symbol, 2> o, std::array<Symbol, 2> n) { return dir(SymbolKind::DirL, o, n); }
inline Symbol dir_r(std::array<Symbol, 2> o, std::array<Symbol, 2> n) { return dir(SymbolKind::DirR, o, n); }

inline Symbol stage(int i, std::array<Symbol, 3> old_triple, std::array<Symbol, 3> new_triple) {
    if (i < 1 || i > 3) throw std::invalid_argument("stage index out of range");
    for (const auto& p : old_triple) require_atomic(p, "Stage");
    for (const auto& p : new_triple) require_atomic(p, "Stage");
    return {SymbolKind::Stage, {}, static_cast<uint8_t>(i),
            {old_triple[0], old_triple[1], old_triple[2], new_triple[0], new_triple[1], new_triple[2]}};
}

}  // namespace sym

// --- canonical text ---------------------------------------------------------
//
// Atoms: "$" "B" "B1" "*" "*2" "#L" "#R" "PAD", or an identifier [A-Za-z0-9_]+
// (the identifier-shaped reserved texts B, B1, PAD are not valid base names).
// Composites: P(x,y), L(ab|de), R(ab|de), S1(abc|def), S2(...), S3(...).
// Components juxtapose when every component of the symbol is a single
// character; otherwise they are comma-separated, e.g. L(q0,B|q1,B). Both
// shapes keep the canonical text injective.

inline std::string canonical_symbol_text(const Symbol& s);

namespace detail {

inline std::string atom_text(const Symbol& s) {
    switch (s.kind) {
        case SymbolKind::Dollar: return "$";
        case SymbolKind::Blank: return "B";
        case SymbolKind::Blank1: return "B1";
        case SymbolKind::Star: return "*";
        case SymbolKind::Support: return "*2";
        case SymbolKind::HashL: return "#L";
        case SymbolKind::HashR: return "#R";
        case SymbolKind::Pad: return "PAD";
        case SymbolKind::Base: return s.name;
        default: throw std::logic_error("atom_text on composite symbol");
    }
}

inline std::string join_components(const Symbol& s, size_t lo, size_t hi, bool juxtapose) {
    std::string out;
    for (size_t i = lo; i < hi; ++i) {
        if (!juxtapose && i > lo) out += ',';
        out += atom_text(s.parts[i]);
    }
    return out;
}

inline bool all_single_char(const Symbol& s) {
    for (const auto& p : s.parts)
        if (atom_text(p).size() != 1) return false;
    return true;
}

}  // namespace detail

inline std::string canonical_symbol_text(const Symbol& s) {
    using detail::join_components;
    switch (s.kind) {
        case SymbolKind::Pair:
            return "P(" + detail::atom_text(s.parts[0]) + "," + detail::atom_text(s.parts[1]) + ")";
        case SymbolKind::DirL:
        case SymbolKind::DirR: {
            bool j = detail::all_single_char(s);
            std::string head = s.kind == SymbolKind::DirL ? "L(" : "R(";
            return head + join_components(s, 0, 2, j) + "|" + join_components(s, 2, 4, j) + ")";
        }
        case SymbolKind::Stage: {
            bool j = detail::all_single_char(s);
            return "S" + std::to_string(s.stage) + "(" + join_components(s, 0, 3, j) + "|" +
                   join_components(s, 3, 6, j) + ")";
        }
        default:
            return detail::atom_text(s);
    }
}

namespace detail {

inline Symbol parse_atom(std::string_view t, size_t off) {
    if (t == "$") return sym::dollar();
    if (t == "B") return sym::blank();
    if (t == "B1") return sym::blank1();
    if (t == "*") return sym::star();
    if (t == "*2") return sym::support();
    if (t == "#L") return sym::hash_l();
    if (t == "#R") return sym::hash_r();
    if (t == "PAD") return sym::pad();
    if (sym::valid_base_name(t)) return {SymbolKind::Base, std::string(t), 0, {}};
    throw ParseError("unrecognized symbol text '" + std::string(t) + "'", off);
}

// One half of a composite body: comma-separated atoms, or one atom per
// character when no comma is present and the half is longer than one atom.
inline std::vector<Symbol> parse_components(std::string_view half, size_t off, size_t want) {
    std::vector<Symbol> out;
    if (half.find(',') != std::string_view::npos) {
        size_t start = 0;
        while (true) {
            size_t comma = half.find(',', start);
            std::string_view piece = half.substr(start, comma == std::string_view::npos
                                                            ? std::string_view::npos
                                                            : comma - start);
            if (piece.empty()) throw ParseError("empty component", off + start);
            out.push_back(parse_atom(piece, off + start));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    } else if (half.size() == want) {
        for (size_t i = 0; i < half.size(); ++i) out.push_back(parse_atom(half.substr(i, 1), off + i));
    } else {
        // a single multi-character atom only makes sense when one component is wanted
        if (want == 1 || half.empty())
            out.push_back(parse_atom(half, off));
        else
            throw ParseError("cannot split components '" + std::string(half) + "'", off);
    }
    if (out.size() != want)
        throw ParseError("expected " + std::to_string(want) + " components", off);
    return out;
}

}  // namespace detail

inline Symbol parse_symbol_text(std::string_view text) {
    if (text.empty()) throw ParseError("empty symbol text", 0);
    auto composite_body = [&](size_t head_len) -> std::string_view {
        if (text.back() != ')') throw ParseError("missing ')'", text.size());
        return text.substr(head_len, text.size() - head_len - 1);
    };
    if (text.size() >= 2 && text[0] == 'P' && text[1] == '(') {
        std::string_view body = composite_body(2);
        size_t comma = body.find(',');
        if (comma == std::string_view::npos) throw ParseError("pair symbol needs a comma", 2);
        return sym::pair(detail::parse_atom(body.substr(0, comma), 2),
                         detail::parse_atom(body.substr(comma + 1), 2 + comma + 1));
    }
    if (text.size() >= 2 && (text[0] == 'L' || text[0] == 'R') && text[1] == '(') {
        std::string_view body = composite_body(2);
        size_t bar = body.find('|');
        if (bar == std::string_view::npos) throw ParseError("directional symbol needs '|'", 2);
        auto olds = detail::parse_components(body.substr(0, bar), 2, 2);
        auto news = detail::parse_components(body.substr(bar + 1), 2 + bar + 1, 2);
        return sym::dir(text[0] == 'L' ? SymbolKind::DirL : SymbolKind::DirR,
                        {olds[0], olds[1]}, {news[0], news[1]});
    }
    if (text.size() >= 3 && text[0] == 'S' && text[1] >= '1' && text[1] <= '3' && text[2] == '(') {
        std::string_view body = composite_body(3);
        size_t bar = body.find('|');
        if (bar == std::string_view::npos) throw ParseError("stage symbol needs '|'", 3);
        auto olds = detail::parse_components(body.substr(0, bar), 3, 3);
        auto news = detail::parse_components(body.substr(bar + 1), 3 + bar + 1, 3);
        return sym::stage(text[1] - '0', {olds[0], olds[1], olds[2]}, {news[0], news[1], news[2]});
    }
    return detail::parse_atom(text, 0);
}

// --- alphabet ---------------------------------------------------------------

// Ordered set of symbols; iteration order is the canonical total order, which
// makes every serialization deterministic. Also provides the dense ids the
// solver uses internally.
class Alphabet {
public:
    Alphabet() = default;

    explicit Alphabet(std::vector<Symbol> syms) : syms_(std::move(syms)) {
        std::sort(syms_.begin(), syms_.end());
        syms_.erase(std::unique(syms_.begin(), syms_.end()), syms_.end());
    }

    size_t size() const { return syms_.size(); }
    const Symbol& at(size_t id) const { return syms_.at(id); }
    const std::vector<Symbol>& symbols() const { return syms_; }

    bool contains(const Symbol& s) const {
        return std::binary_search(syms_.begin(), syms_.end(), s);
    }

    // Dense id by canonical rank; throws when absent.
    uint32_t id_of(const Symbol& s) const {
        auto it = std::lower_bound(syms_.begin(), syms_.end(), s);
        if (it == syms_.end() || !(*it == s))
            throw std::out_of_range("symbol not in alphabet: " + canonical_symbol_text(s));
        return static_cast<uint32_t>(it - syms_.begin());
    }

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.syms_ == b.syms_; }

    auto begin() const { return syms_.begin(); }
    auto end() const { return syms_.end(); }

private:
    std::vector<Symbol> syms_;
};

inline std::string str_text(const Str& s, const char* sep = " ") {
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += sep;
        out += canonical_symbol_text(s[i]);
    }
    return out;
}

inline bool str_less(const Str& a, const Str& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace strdist

#pragma once

// Bounded Turing-machine model and simulators. These are the ground truth
// the reduction verification harness compares compiled instances against.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "strdist/bigint.hpp"
#include "strdist/core.hpp"

namespace strdist {

class NondeterministicMachine : public std::runtime_error {
public:
    explicit NondeterministicMachine(const std::string& what) : std::runtime_error(what) {}
};

struct Polynomial {
    std::vector<uint64_t> coeffs;  // low-to-high

    uint64_t eval(uint64_t n) const {
        uint64_t acc = 0, pw = 1;
        for (size_t i = 0; i < coeffs.size(); ++i) {
            if (i > 0) pw *= n;
            acc += coeffs[i] * pw;
        }
        return acc;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

struct ResourceBounds {
    uint64_t c = 2;    // time is c^{q(n)} steps
    Polynomial p;      // space / step-exponent polynomial
    Polynomial q;      // time-exponent polynomial

    friend bool operator==(const ResourceBounds&, const ResourceBounds&) = default;
};

struct Transition {
    Symbol from_state;
    Symbol read;
    Symbol to_state;
    Symbol write;
    char move = 'R';  // 'L' or 'R'

    friend bool operator==(const Transition&, const Transition&) = default;
};

struct TuringMachine {
    std::string name;
    std::vector<Symbol> states;
    std::vector<Symbol> tape_alphabet;
    Symbol blank;
    std::vector<Symbol> input_alphabet;
    std::vector<Transition> delta;
    Symbol start;
    std::vector<Symbol> accepting;
    bool deterministic = true;
    ResourceBounds bounds;

    bool is_accepting(const Symbol& q) const {
        return std::find(accepting.begin(), accepting.end(), q) != accepting.end();
    }
    bool is_state(const Symbol& q) const {
        return std::find(states.begin(), states.end(), q) != states.end();
    }
    bool in_tape_alphabet(const Symbol& a) const {
        return std::find(tape_alphabet.begin(), tape_alphabet.end(), a) != tape_alphabet.end();
    }
};

// Instantaneous description: used tape window, head index into it, state.
struct Configuration {
    Str tape;
    size_t head = 0;
    Symbol state;
    uint64_t steps_taken = 0;
};

enum class RunVerdict { Accept, Reject, SpaceExceeded, TimeExceeded };

inline const char* verdict_name(RunVerdict v) {
    switch (v) {
        case RunVerdict::Accept: return "accept";
        case RunVerdict::Reject: return "reject";
        case RunVerdict::SpaceExceeded: return "space-exceeded";
        default: return "time-exceeded";
    }
}

inline std::vector<Violation> validate_machine(const TuringMachine& m) {
    std::vector<Violation> out;
    auto check_member = [&](const Symbol& s, const std::vector<Symbol>& set, const char* what,
                            const char* code) {
        if (std::find(set.begin(), set.end(), s) == set.end())
            out.push_back({code, std::string(what) + ": " + canonical_symbol_text(s)});
    };

    for (const Symbol& s : m.states)
        if (!s.is_atomic()) out.push_back({"SymbolViolation", "non-atomic state symbol"});
    for (const Symbol& s : m.tape_alphabet)
        if (!s.is_atomic()) out.push_back({"SymbolViolation", "non-atomic tape symbol"});
    for (const Symbol& s : m.states)
        if (m.in_tape_alphabet(s))
            out.push_back({"DisjointnessViolation",
                           "state also a tape symbol: " + canonical_symbol_text(s)});

    check_member(m.blank, m.tape_alphabet, "blank not in tape alphabet", "AlphabetViolation");
    for (const Symbol& s : m.input_alphabet) {
        check_member(s, m.tape_alphabet, "input symbol not in tape alphabet", "AlphabetViolation");
        if (s == m.blank)
            out.push_back({"AlphabetViolation", "blank may not be an input symbol"});
    }
    check_member(m.start, m.states, "start state unknown", "StateSetViolation");
    for (const Symbol& s : m.accepting)
        check_member(s, m.states, "accepting state unknown", "StateSetViolation");

    for (const Transition& t : m.delta) {
        check_member(t.from_state, m.states, "transition source unknown", "StateSetViolation");
        check_member(t.to_state, m.states, "transition target unknown", "StateSetViolation");
        check_member(t.read, m.tape_alphabet, "transition reads symbol outside alphabet",
                     "AlphabetViolation");
        check_member(t.write, m.tape_alphabet, "transition writes symbol outside alphabet",
                     "AlphabetViolation");
        if (t.move != 'L' && t.move != 'R')
            out.push_back({"MoveViolation", "transition move must be L or R"});
    }
    if (m.deterministic) {
        for (size_t i = 0; i < m.delta.size(); ++i)
            for (size_t j = i + 1; j < m.delta.size(); ++j)
                if (m.delta[i].from_state == m.delta[j].from_state &&
                    m.delta[i].read == m.delta[j].read) {
                    out.push_back({"DeterminismViolation",
                                   "two transitions on (" +
                                       canonical_symbol_text(m.delta[i].from_state) + ", " +
                                       canonical_symbol_text(m.delta[i].read) + ")"});
                }
    }
    if (m.bounds.c < 2) out.push_back({"BoundsViolation", "c must be >= 2"});
    if (m.bounds.p.coeffs.empty()) out.push_back({"BoundsViolation", "p has no coefficients"});
    if (m.bounds.q.coeffs.empty()) out.push_back({"BoundsViolation", "q has no coefficients"});
    return out;
}

namespace detail {

// Two-sided growable tape over absolute cell indices (input starts at 0).
struct TapeWindow {
    std::deque<Symbol> cells;
    long origin = 0;  // absolute index of cells.front()
    Symbol blank;

    explicit TapeWindow(const Str& input, const Symbol& b) : blank(b) {
        for (const Symbol& s : input) cells.push_back(s);
        if (cells.empty()) cells.push_back(blank);
    }

    const Symbol& read(long pos) {
        ensure(pos);
        return cells[static_cast<size_t>(pos - origin)];
    }
    void write(long pos, const Symbol& s) {
        ensure(pos);
        cells[static_cast<size_t>(pos - origin)] = s;
    }
    void ensure(long pos) {
        while (pos < origin) {
            cells.push_front(blank);
            --origin;
        }
        while (pos >= origin + static_cast<long>(cells.size())) cells.push_back(blank);
    }
};

inline const Transition* find_dtm_transition(const TuringMachine& m, const Symbol& state,
                                             const Symbol& read) {
    const Transition* found = nullptr;
    for (const Transition& t : m.delta)
        if (t.from_state == state && t.read == read) {
            if (found)
                throw NondeterministicMachine("two transitions on (" + canonical_symbol_text(state) +
                                              ", " + canonical_symbol_text(read) + ")");
            found = &t;
        }
    return found;
}

}  // namespace detail

// Deterministic bounded run. Acceptance is entering an accepting state at any
// point; a configuration without an applicable transition halts. Time is
// capped at exactly c^{q(n)} steps. Space mirrors the padded layout the
// 3-Hamming compilation provides: at most p(n)+1 cells left of the input,
// p(n)+1 (p(n) when the input is empty) right of it, and p(n)+n+2 cells
// total, so a simulator Accept never uses a cell the compiled instance lacks.
inline RunVerdict run_dtm_bounded(const TuringMachine& m, const Str& x, const ResourceBounds& b) {
    for (const Symbol& s : x)
        if (std::find(m.input_alphabet.begin(), m.input_alphabet.end(), s) == m.input_alphabet.end())
            throw std::invalid_argument("input symbol outside input alphabet: " +
                                        canonical_symbol_text(s));
    if (!m.deterministic) throw NondeterministicMachine("machine not declared deterministic");

    uint64_t n = x.size();
    uint64_t pn = b.p.eval(n), qn = b.q.eval(n);
    if (pn < 1 || qn < 1) throw std::invalid_argument("resource polynomials must be >= 1");
    uint64_t max_steps = BigUint::pow(BigUint(b.c), qn).to_u64_saturating();

    long input_end = n == 0 ? 0 : static_cast<long>(n) - 1;  // empty input: the start cell
    long left_cap = static_cast<long>(pn) + 1;
    long right_cap = n == 0 ? static_cast<long>(pn) : static_cast<long>(pn) + 1;
    uint64_t total_cap = pn + n + 2;

    detail::TapeWindow tape(x, m.blank);
    Symbol state = m.start;
    long head = 0;
    long min_head = 0, max_head = input_end;

    for (uint64_t steps = 0;; ++steps) {
        if (m.is_accepting(state)) return RunVerdict::Accept;
        const Transition* t = detail::find_dtm_transition(m, state, tape.read(head));
        if (!t) return RunVerdict::Reject;
        if (steps >= max_steps) return RunVerdict::TimeExceeded;

        long next = head + (t->move == 'R' ? 1 : -1);
        long nmin = std::min(min_head, next), nmax = std::max(max_head, next);
        uint64_t cells = static_cast<uint64_t>(nmax - nmin + 1);
        if (-nmin > left_cap || nmax - input_end > right_cap || cells > total_cap)
            return RunVerdict::SpaceExceeded;

        tape.write(head, t->write);
        state = t->to_state;
        head = next;
        min_head = nmin;
        max_head = nmax;
    }
}

struct NtmRun {
    bool accepted = false;
    // true when the step bound cut off branches that could still move
    bool truncated = false;
};

// Existential acceptance within 2^{p(n)} steps, breadth-first over
// configurations with deduplication. No space bound; growth is step-limited.
inline NtmRun run_ntm_bounded(const TuringMachine& m, const Str& x, const ResourceBounds& b) {
    for (const Symbol& s : x)
        if (std::find(m.input_alphabet.begin(), m.input_alphabet.end(), s) == m.input_alphabet.end())
            throw std::invalid_argument("input symbol outside input alphabet: " +
                                        canonical_symbol_text(s));
    uint64_t pn = b.p.eval(x.size());
    if (pn < 1) throw std::invalid_argument("resource polynomials must be >= 1");
    uint64_t max_steps = BigUint::pow(BigUint(2), pn).to_u64_saturating();

    auto key_of = [](const Configuration& cfg) {
        std::string k = canonical_symbol_text(cfg.state) + "@" + std::to_string(cfg.head) + ":";
        for (const Symbol& s : cfg.tape) k += canonical_symbol_text(s) + " ";
        return k;
    };
    auto normalize = [&](Configuration cfg) {
        size_t lo = 0, hi = cfg.tape.size();
        while (lo < cfg.head && cfg.tape[lo] == m.blank) ++lo;
        while (hi > cfg.head + 1 && cfg.tape[hi - 1] == m.blank) --hi;
        cfg.tape = Str(cfg.tape.begin() + lo, cfg.tape.begin() + hi);
        cfg.head -= lo;
        return cfg;
    };

    Configuration start{x.empty() ? Str{m.blank} : x, 0, m.start, 0};
    start = normalize(std::move(start));
    std::unordered_set<std::string> seen{key_of(start)};
    std::vector<Configuration> level{start};
    NtmRun out;

    for (uint64_t step = 0; !level.empty(); ++step) {
        std::vector<Configuration> next_level;
        for (const Configuration& cfg : level) {
            if (m.is_accepting(cfg.state)) {
                out.accepted = true;
                return out;
            }
            const Symbol& cur = cfg.tape[cfg.head];
            for (const Transition& t : m.delta) {
                if (!(t.from_state == cfg.state && t.read == cur)) continue;
                if (step >= max_steps) {
                    out.truncated = true;  // a live branch was cut off
                    continue;
                }
                Configuration nxt = cfg;
                nxt.steps_taken = step + 1;
                nxt.tape[nxt.head] = t.write;
                nxt.state = t.to_state;
                if (t.move == 'R') {
                    ++nxt.head;
                    if (nxt.head == nxt.tape.size()) nxt.tape.push_back(m.blank);
                } else {
                    if (nxt.head == 0)
                        nxt.tape.insert(nxt.tape.begin(), m.blank);
                    else
                        --nxt.head;
                }
                nxt = normalize(std::move(nxt));
                if (seen.insert(key_of(nxt)).second) next_level.push_back(std::move(nxt));
            }
        }
        level = std::move(next_level);
    }
    return out;
}

inline bool accepts_ntm_bounded(const TuringMachine& m, const Str& x, const ResourceBounds& b) {
    return run_ntm_bounded(m, x, b).accepted;
}

}  // namespace strdist

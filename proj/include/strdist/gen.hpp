#pragma once

// Seeded random instance generation for property tests and the CLI `gen`
// command. Uses its own splitmix64 stream so identical seeds reproduce the
// same instance on every platform.

#include <cstdint>
#include <string>

#include "strdist/core.hpp"

namespace strdist {

struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }
};

struct GenParams {
    uint32_t k = 2;
    uint32_t sigma = 2;       // base symbols a, b, c, ...
    size_t v_len = 3;
    size_t w_len = 3;         // forced equal to v_len for Hamming flavor
    size_t rule_count = 2;
    uint64_t max_cost = 3;    // explicit rule costs drawn from 1..max_cost
    uint64_t h = 4;
    bool edit = false;
    enum class DefaultMode { Forbidden, Finite, Inhibit } default_mode = DefaultMode::Forbidden;
};

inline Instance gen_random_instance(uint64_t seed, const GenParams& p) {
    if (p.sigma < 1 || p.sigma > 26) throw std::invalid_argument("sigma must be in 1..26");
    if (p.k < 1) throw std::invalid_argument("k must be >= 1");
    SplitMix64 rng(seed);

    std::vector<Symbol> sigma;
    for (uint32_t i = 0; i < p.sigma; ++i) sigma.push_back(sym::base(std::string(1, 'a' + i)));

    auto random_str = [&](size_t len) {
        Str s;
        for (size_t i = 0; i < len; ++i) s.push_back(sigma[rng.below(p.sigma)]);
        return s;
    };

    Instance inst;
    inst.d.k = p.k;
    inst.d.ops = p.edit ? OpSet::edit() : OpSet::hamming();
    inst.d.alphabet = Alphabet(sigma);
    inst.v = random_str(p.v_len);
    inst.w = random_str(p.edit ? p.w_len : p.v_len);
    inst.h = Cost(p.h);

    auto random_cost = [&] { return Cost(1 + rng.below(p.max_cost)); };

    for (size_t i = 0; i < p.rule_count; ++i) {
        Operation op;
        uint64_t pick = p.edit ? rng.below(4) : 3;
        switch (pick) {
            case 0:
                op = Operation::insertion(sigma[rng.below(p.sigma)]);
                break;
            case 1:
                op = Operation::deletion(sigma[rng.below(p.sigma)]);
                break;
            case 2: {
                Symbol from = sigma[rng.below(p.sigma)];
                Symbol to = sigma[rng.below(p.sigma)];
                if (to == from) to = sigma[(inst.d.alphabet.id_of(from) + 1) % p.sigma];
                if (to == from) continue;  // single-letter alphabet: no substitution possible
                op = Operation::ksub({from}, {to});
                break;
            }
            default: {
                Str lhs = random_str(p.k);
                Str rhs = random_str(p.k);
                if (rhs == lhs) rhs[rng.below(p.k)] = sigma[(inst.d.alphabet.id_of(rhs[0]) + 1) % p.sigma];
                if (rhs == lhs) continue;
                op = Operation::ksub(std::move(lhs), std::move(rhs));
                break;
            }
        }
        bool dup = false;
        for (const Rule& r : inst.d.rules) dup = dup || r.op == op;
        if (!dup) inst.d.rules.push_back({std::move(op), random_cost()});
    }

    switch (p.default_mode) {
        case GenParams::DefaultMode::Forbidden:
            inst.d.default_cost = std::nullopt;
            break;
        case GenParams::DefaultMode::Finite:
            inst.d.default_cost = random_cost();
            break;
        case GenParams::DefaultMode::Inhibit:
            inst.d.default_cost = inst.h + Cost(1);
            break;
    }
    return inst;
}

}  // namespace strdist

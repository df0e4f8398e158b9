#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "strdist/core.hpp"
#include "strdist/gen.hpp"

using namespace strdist;

namespace {

Str s_(const char* text) {
    Str out;
    for (const char* p = text; *p; ++p) out.push_back(sym::base(std::string(1, *p)));
    return out;
}

CostModel two_sub_model(std::vector<Rule> rules, std::optional<Cost> def = std::nullopt) {
    CostModel d;
    d.k = 2;
    d.ops = OpSet::hamming();
    d.alphabet = Alphabet({sym::base("a"), sym::base("b"), sym::base("c"), sym::base("d")});
    d.rules = std::move(rules);
    d.default_cost = std::move(def);
    return d;
}

}  // namespace

TEST_CASE("apply_operation examples") {
    CHECK(apply_operation(s_("abc"), Operation::ksub(s_("bc"), s_("dd")), 2) == s_("add"));
    CHECK(apply_operation(s_("ab"), Operation::insertion(sym::base("c")), 3) == s_("abc"));
    CHECK(apply_operation(s_("abc"), Operation::deletion(sym::base("b")), 2) == s_("ac"));
}

TEST_CASE("apply_operation length laws") {
    Str s = s_("abcd");
    CHECK(apply_operation(s, Operation::insertion(sym::base("a")), 1).size() == s.size() + 1);
    CHECK(apply_operation(s, Operation::deletion(sym::base("c")), 3).size() == s.size() - 1);
    CHECK(apply_operation(s, Operation::ksub(s_("ab"), s_("ba")), 1).size() == s.size());
}

TEST_CASE("apply_operation rejects bad positions and mismatched sides") {
    CHECK_THROWS_AS(apply_operation(s_("ab"), Operation::insertion(sym::base("c")), 4), ApplyError);
    CHECK_THROWS_AS(apply_operation(s_("ab"), Operation::insertion(sym::base("c")), 0), ApplyError);
    CHECK_THROWS_AS(apply_operation(s_("ab"), Operation::deletion(sym::base("a")), 2), ApplyError);
    CHECK_THROWS_AS(apply_operation(s_("ab"), Operation::ksub(s_("bb"), s_("aa")), 1), ApplyError);
    CHECK_THROWS_AS(apply_operation(s_("ab"), Operation::ksub(s_("ab"), s_("ba")), 2), ApplyError);
}

TEST_CASE("apply_sequence composes left to right") {
    TransformationSequence t;
    t.steps = {{Operation::ksub(s_("aa"), s_("ab")), 1}, {Operation::ksub(s_("ab"), s_("bb")), 1}};
    CHECK(apply_sequence(s_("aa"), t) == s_("bb"));

    CHECK(apply_sequence(s_("x") , {}) == s_("x"));

    TransformationSequence positional;
    positional.steps = {{Operation::ksub(s_("aa"), s_("bb")), 2}};
    CHECK(apply_sequence(s_("aaa"), positional) == s_("abb"));

    TransformationSequence bad;
    bad.steps = {{Operation::ksub(s_("aa"), s_("bb")), 1}, {Operation::ksub(s_("aa"), s_("bb")), 1}};
    CHECK_THROWS_WITH_AS(apply_sequence(s_("aa"), bad),
                         doctest::Contains("step 2"), ApplyError);
}

TEST_CASE("sequence_cost sums per-step costs") {
    CostModel d = two_sub_model({{Operation::ksub(s_("aa"), s_("ab")), Cost(2)},
                                 {Operation::ksub(s_("ab"), s_("bb")), Cost(3)}});
    TransformationSequence t;
    CHECK(sequence_cost(t, d) == Cost(0));

    t.steps = {{Operation::ksub(s_("aa"), s_("ab")), 1}, {Operation::ksub(s_("ab"), s_("bb")), 1}};
    CHECK(sequence_cost(t, d) == Cost(5));

    // unlisted operation falls back to the default cost
    CostModel with_default = two_sub_model({}, Cost(7));
    t.steps = {{Operation::ksub(s_("cc"), s_("dd")), 1}};
    CHECK(sequence_cost(t, with_default) == Cost(7));

    CostModel forbidden = two_sub_model({});
    CHECK_THROWS_AS(sequence_cost(t, forbidden), ForbiddenOperation);
}

TEST_CASE("sequence_cost splits additively") {
    CostModel d = two_sub_model({}, Cost(2));
    SplitMix64 rng(7);
    Str cur = s_("abab");
    TransformationSequence all;
    for (int i = 0; i < 6; ++i) {
        size_t pos = 1 + rng.below(cur.size() - 1);
        Str lhs(cur.begin() + pos - 1, cur.begin() + pos + 1);
        Str rhs = lhs;
        std::swap(rhs[0], rhs[1]);
        if (rhs == lhs) rhs[0] = sym::base("c");
        all.steps.push_back({Operation::ksub(lhs, rhs), pos});
        cur = apply_operation(cur, all.steps.back().op, pos);
    }
    for (size_t cut = 0; cut <= all.steps.size(); ++cut) {
        TransformationSequence left{{all.steps.begin(), all.steps.begin() + cut}, {}};
        TransformationSequence right{{all.steps.begin() + cut, all.steps.end()}, {}};
        CHECK(sequence_cost(left, d) + sequence_cost(right, d) == sequence_cost(all, d));
        CHECK(apply_sequence(apply_sequence(s_("abab"), left), right) == cur);
    }
}

TEST_CASE("validate_instance accepts a well-formed instance") {
    Instance inst{s_("aa"), s_("bb"),
                  two_sub_model({{Operation::ksub(s_("aa"), s_("bb")), Cost(1)}}, Cost(5)),
                  Cost(4)};
    CHECK(validate_instance(inst).empty());
}

TEST_CASE("validate_instance flags the spec'd violations") {
    auto has = [](const std::vector<Violation>& vs, const char* code) {
        for (const auto& v : vs)
            if (v.code == code) return true;
        return false;
    };

    Instance zero_cost{s_("aa"), s_("bb"),
                       two_sub_model({{Operation::ksub(s_("aa"), s_("bb")), Cost(0)}}), Cost(4)};
    CHECK(has(validate_instance(zero_cost), "PositiveCostViolation"));

    Instance foreign{s_("aa"), s_("bb"), two_sub_model({}), Cost(4)};
    foreign.v.push_back(sym::base("z"));
    CHECK(has(validate_instance(foreign), "AlphabetViolation"));

    Instance bad_opset{s_("aa"), s_("bb"),
                       two_sub_model({{Operation::insertion(sym::base("a")), Cost(1)}}), Cost(4)};
    CHECK(has(validate_instance(bad_opset), "OpSetViolation"));

    Instance identity{s_("aa"), s_("bb"),
                      two_sub_model({{Operation::ksub(s_("aa"), s_("aa")), Cost(1)}}), Cost(4)};
    CHECK(has(validate_instance(identity), "IdentityRuleViolation"));

    Instance dup{s_("aa"), s_("bb"),
                 two_sub_model({{Operation::ksub(s_("aa"), s_("bb")), Cost(1)},
                                {Operation::ksub(s_("aa"), s_("bb")), Cost(1)}}),
                 Cost(4)};
    CHECK(has(validate_instance(dup), "DuplicateRuleViolation"));

    Instance wrong_arity{s_("aa"), s_("bb"),
                         two_sub_model({{Operation::ksub(s_("aaa"), s_("bbb")), Cost(1)}}),
                         Cost(4)};
    CHECK(has(validate_instance(wrong_arity), "ArityViolation"));
}

TEST_CASE("generated instances validate and respect the Hamming length constraint") {
    for (uint64_t seed = 0; seed < 200; ++seed) {
        GenParams p;
        p.k = 1 + seed % 3;
        p.sigma = 2 + seed % 2;
        p.v_len = 1 + seed % 4;
        p.w_len = 1 + (seed / 2) % 4;
        p.edit = seed % 2 == 0;
        p.rule_count = seed % 4;
        p.default_mode = static_cast<GenParams::DefaultMode>(seed % 3);
        Instance inst = gen_random_instance(seed, p);
        CHECK(validate_instance(inst).empty());
        if (!inst.d.ops.insertion) CHECK(inst.v.size() == inst.w.size());
    }
    // reproducible
    GenParams p;
    CHECK(gen_random_instance(99, p) == gen_random_instance(99, p));
}

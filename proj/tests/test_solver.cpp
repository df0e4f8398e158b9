#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "strdist/gen.hpp"
#include "strdist/oracle.hpp"
#include "strdist/solver.hpp"

using namespace strdist;

namespace {

Str s_(const char* text) {
    Str out;
    for (const char* p = text; *p; ++p) out.push_back(sym::base(std::string(1, *p)));
    return out;
}

CostModel model2(std::vector<Rule> rules, std::optional<Cost> def = std::nullopt,
                 OpSet ops = OpSet::hamming()) {
    CostModel d;
    d.k = 2;
    d.ops = ops;
    d.alphabet = Alphabet({sym::base("a"), sym::base("b")});
    d.rules = std::move(rules);
    d.default_cost = std::move(def);
    return d;
}

Rule r2(const char* lhs, const char* rhs, uint64_t cost) {
    return {Operation::ksub(s_(lhs), s_(rhs)), Cost(cost)};
}

}  // namespace

TEST_CASE("neighbors: single matching rule, no match, zero budget") {
    CostModel d = model2({r2("aa", "bb", 1)});
    auto ns = neighbors(s_("aa"), d, Cost(5));
    REQUIRE(ns.size() == 1);
    CHECK(ns[0].op == Operation::ksub(s_("aa"), s_("bb")));
    CHECK(ns[0].pos == 1);
    CHECK(ns[0].cost == Cost(1));
    CHECK(ns[0].result == s_("bb"));

    CHECK(neighbors(s_("ab"), d, Cost(5)).empty());
    CHECK(neighbors(s_("aa"), d, Cost(0)).empty());
}

TEST_CASE("neighbors enumerate defaults and overlay explicit rules") {
    CostModel d = model2({r2("aa", "ab", 1)}, Cost(4));
    auto ns = neighbors(s_("aa"), d, Cost(10));
    // window aa: rhs ab (explicit, 1), then ba and bb at the default; identity skipped
    REQUIRE(ns.size() == 3);
    CHECK(ns[0].cost == Cost(1));
    CHECK(ns[1].cost == Cost(4));
    CHECK(ns[2].cost == Cost(4));
    // a budget below the default hides default successors
    CHECK(neighbors(s_("aa"), d, Cost(2)).size() == 1);
}

TEST_CASE("neighbors cap on default enumeration") {
    CostModel d;
    d.k = 13;
    d.ops = OpSet::hamming();
    d.alphabet = Alphabet({sym::base("a"), sym::base("b")});
    d.default_cost = Cost(1);
    Str s(13, sym::base("a"));
    CHECK_THROWS_AS(neighbors(s, d, Cost(5)), EnumerationCapExceeded);  // 2^13 > 4096
    SolverOptions wide;
    wide.enumeration_cap = 10000;
    CHECK(neighbors(s, d, Cost(5), wide).size() == 8191);
    // the search propagates the cap error
    Str t(13, sym::base("b"));
    CHECK_THROWS_AS(distance(s, t, d, Cost(5)), EnumerationCapExceeded);
    // below the default the enumeration never starts, so the search just
    // reports that the budget cut everything off
    CHECK(distance(s, t, d, Cost(0)).outcome == DistanceResult::Outcome::ExceedsBudget);
}

TEST_CASE("decide examples") {
    Instance one_step{s_("aa"), s_("bb"), model2({r2("aa", "bb", 1)}), Cost(1)};
    auto [yes, res] = decide(one_step);
    CHECK(yes);
    CHECK(res.cost == Cost(1));
    REQUIRE(res.witness.steps.size() == 1);
    CHECK(res.witness.steps[0].pos == 1);

    Instance two_steps{s_("aa"), s_("bb"), model2({r2("aa", "ab", 1), r2("ab", "bb", 1)}), Cost(1)};
    auto [yes2, res2] = decide(two_steps);
    CHECK(!yes2);
    CHECK(res2.outcome == DistanceResult::Outcome::ExceedsBudget);

    Instance identity{s_("ab"), s_("ab"), model2({}), Cost(0)};
    auto [yes3, res3] = decide(identity);
    CHECK(yes3);
    CHECK(res3.cost == Cost(0));
    CHECK(res3.witness.steps.empty());
}

TEST_CASE("distance examples") {
    CostModel d = model2({r2("aa", "ab", 1), r2("ab", "bb", 1)}, Cost(10));
    DistanceResult r = distance(s_("aa"), s_("bb"), d, Cost(100));
    CHECK(r.outcome == DistanceResult::Outcome::Exact);
    CHECK(r.cost == Cost(2));
    // the oracle agrees once its bound covers the default-cost routes
    CHECK(brute_force_distance(s_("aa"), s_("bb"), d, Cost(10)) == Cost(2));

    // substitutions preserve length
    CostModel subs_only;
    subs_only.k = 1;
    subs_only.ops = {false, false, true, false};
    subs_only.alphabet = Alphabet({sym::base("a")});
    subs_only.default_cost = Cost(1);
    DistanceResult r2 = distance(s_("a"), s_("aa"), subs_only, Cost(1000));
    CHECK(r2.outcome == DistanceResult::Outcome::Unreachable);

    DistanceResult r3 = distance(s_("ab"), s_("ab"), model2({}), Cost(0));
    CHECK(r3.outcome == DistanceResult::Outcome::Exact);
    CHECK(r3.cost == Cost(0));
}

TEST_CASE("brute force basics") {
    CostModel d = model2({r2("aa", "bb", 1)});
    CHECK(!brute_force_distance(s_("aa"), s_("bb"), d, Cost(0)).has_value());
    CHECK(brute_force_distance(s_("aa"), s_("bb"), d, Cost(3)) == Cost(1));
    CHECK(brute_force_distance(s_("aa"), s_("aa"), d, Cost(3)) == Cost(0));
}

TEST_CASE("witness replays to the target with the reported cost") {
    for (uint64_t seed = 0; seed < 150; ++seed) {
        GenParams p;
        p.k = 1 + seed % 3;
        p.sigma = 2 + seed % 2;
        p.v_len = 2 + seed % 3;
        p.w_len = 2 + (seed / 3) % 3;
        p.edit = seed % 2 == 1;
        p.rule_count = 1 + seed % 3;
        p.max_cost = 3;
        p.h = 6;
        p.default_mode = seed % 4 == 0 ? GenParams::DefaultMode::Finite
                                       : GenParams::DefaultMode::Forbidden;
        Instance inst = gen_random_instance(seed, p);
        DistanceResult r = distance(inst.v, inst.w, inst.d, inst.h);
        if (r.exact()) {
            CHECK(apply_sequence(inst.v, r.witness) == inst.w);
            CHECK(sequence_cost(r.witness, inst.d) == r.cost);
            CHECK(r.witness.total_cost == r.cost);
        }
    }
}

TEST_CASE("uniform-cost search equals brute force on random instances") {
    size_t exact_hits = 0;
    for (uint64_t seed = 1000; seed < 1300; ++seed) {
        GenParams p;
        p.k = 1 + seed % 3;
        p.sigma = 2 + seed % 2;
        p.v_len = 1 + seed % 4;
        p.w_len = 1 + (seed / 2) % 4;
        p.edit = seed % 2 == 1;
        p.rule_count = 1 + seed % 4;
        p.max_cost = seed % 3 == 0 ? 5 : 2;
        p.h = 2 + seed % 4;
        p.default_mode = seed % 5 == 0 ? GenParams::DefaultMode::Finite
                                       : GenParams::DefaultMode::Forbidden;
        Instance inst = gen_random_instance(seed, p);
        Cost budget = inst.h;
        DistanceResult ucs = distance(inst.v, inst.w, inst.d, budget);
        auto bf = brute_force_distance(inst.v, inst.w, inst.d, budget);
        if (ucs.exact()) {
            REQUIRE(bf.has_value());
            CHECK(*bf == ucs.cost);
            ++exact_hits;
        } else {
            CHECK(!bf.has_value());
        }
    }
    CHECK(exact_hits > 20);  // the corpus exercises both verdicts
}

TEST_CASE("budget monotonicity") {
    for (uint64_t seed = 0; seed < 120; ++seed) {
        GenParams p;
        p.k = 2;
        p.sigma = 2;
        p.v_len = 3;
        p.w_len = 3;
        p.edit = seed % 2 == 0;
        p.rule_count = 2 + seed % 2;
        p.max_cost = 2;
        p.h = 3;
        Instance inst = gen_random_instance(seed * 31 + 7, p);
        auto low = decide(inst);
        Instance higher = inst;
        higher.h = inst.h + Cost(1 + seed % 3);
        auto high = decide(higher);
        if (low.first) CHECK(high.first);
        if (!high.first) CHECK(!low.first);
    }
}

TEST_CASE("identical inputs produce identical witnesses") {
    CostModel d = model2({r2("aa", "ab", 1), r2("ab", "bb", 1), r2("aa", "ba", 1),
                          r2("ba", "bb", 1)});
    DistanceResult r1 = distance(s_("aa"), s_("bb"), d, Cost(4));
    DistanceResult r2 = distance(s_("aa"), s_("bb"), d, Cost(4));
    REQUIRE(r1.exact());
    CHECK(r1.witness == r2.witness);
    CHECK(r1.cost == Cost(2));
}

TEST_CASE("k-Hamming instances with different lengths are unreachable") {
    CostModel d = model2({r2("aa", "bb", 1)});
    DistanceResult r = distance(s_("aa"), s_("bbb"), d, Cost(100));
    CHECK(r.outcome == DistanceResult::Outcome::Unreachable);
}

TEST_CASE("exhausting the whole reachable set is Unreachable, cutting it is not") {
    // aa -> ab is the only rule: ba is off the reachable set no matter the budget
    CostModel d = model2({r2("aa", "ab", 1)});
    CHECK(distance(s_("aa"), s_("ba"), d, Cost(100)).outcome ==
          DistanceResult::Outcome::Unreachable);
    // with a chained second rule the zero-remainder frontier is a budget cut
    CostModel chain = model2({r2("aa", "ab", 1), r2("ab", "ba", 1)});
    CHECK(distance(s_("aa"), s_("ba"), chain, Cost(1)).outcome ==
          DistanceResult::Outcome::ExceedsBudget);
    CHECK(distance(s_("aa"), s_("ba"), chain, Cost(2)).outcome ==
          DistanceResult::Outcome::Exact);
}

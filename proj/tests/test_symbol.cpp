#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "strdist/symbol.hpp"

using namespace strdist;

TEST_CASE("canonical texts of the marker symbols") {
    CHECK(canonical_symbol_text(sym::dollar()) == "$");
    CHECK(canonical_symbol_text(sym::blank()) == "B");
    CHECK(canonical_symbol_text(sym::blank1()) == "B1");
    CHECK(canonical_symbol_text(sym::star()) == "*");
    CHECK(canonical_symbol_text(sym::support()) == "*2");
    CHECK(canonical_symbol_text(sym::hash_l()) == "#L");
    CHECK(canonical_symbol_text(sym::hash_r()) == "#R");
    CHECK(canonical_symbol_text(sym::pad()) == "PAD");
    CHECK(canonical_symbol_text(sym::base("q0")) == "q0");
}

TEST_CASE("frozen composite texts") {
    Symbol a = sym::base("a"), b = sym::base("b"), c = sym::base("c");
    Symbol d = sym::base("d"), e = sym::base("e"), f = sym::base("f");
    CHECK(canonical_symbol_text(sym::pair(a, sym::dollar())) == "P(a,$)");
    CHECK(canonical_symbol_text(sym::stage(1, {a, b, c}, {d, e, f})) == "S1(abc|def)");
    CHECK(canonical_symbol_text(sym::dir_l({a, b}, {d, e})) == "L(ab|de)");
    CHECK(canonical_symbol_text(sym::dir_r({b, c}, {e, f})) == "R(bc|ef)");
    // any multi-character component forces the comma form for the whole symbol
    CHECK(canonical_symbol_text(sym::dir_l({sym::base("q0"), sym::blank()}, {a, b})) ==
          "L(q0,B|a,b)");
    CHECK(canonical_symbol_text(sym::stage(2, {a, sym::hash_l(), sym::star()}, {d, e, f})) ==
          "S2(a,#L,*|d,e,f)");
}

TEST_CASE("parse inverts canonical text") {
    Symbol cases[] = {
        sym::dollar(),
        sym::blank1(),
        sym::support(),
        sym::pad(),
        sym::base("q12"),
        sym::pair(sym::base("q0"), sym::dollar()),
        sym::pair(sym::blank(), sym::blank()),
        sym::dir_l({sym::base("a"), sym::base("b")}, {sym::base("d"), sym::base("e")}),
        sym::dir_r({sym::hash_l(), sym::blank()}, {sym::dollar(), sym::star()}),
        sym::stage(3, {sym::base("a"), sym::base("b"), sym::base("c")},
                   {sym::base("x"), sym::base("y"), sym::base("z")}),
        sym::stage(1, {sym::base("q0"), sym::blank1(), sym::dollar()},
                   {sym::star(), sym::base("t"), sym::hash_r()}),
    };
    for (const Symbol& s : cases) CHECK(parse_symbol_text(canonical_symbol_text(s)) == s);
}

TEST_CASE("parse errors carry a byte offset") {
    CHECK_THROWS_AS(parse_symbol_text(""), ParseError);
    CHECK_THROWS_AS(parse_symbol_text("a b"), ParseError);
    CHECK_THROWS_AS(parse_symbol_text("P(a)"), ParseError);
    CHECK_THROWS_AS(parse_symbol_text("P(a,b"), ParseError);
    CHECK_THROWS_AS(parse_symbol_text("L(ab|d)"), ParseError);
    CHECK_THROWS_AS(parse_symbol_text("S4(abc|def)"), ParseError);
    CHECK_THROWS_AS(parse_symbol_text("S1(ab|def)"), ParseError);
    try {
        parse_symbol_text("P(a,!)");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.offset > 0);
    }
}

TEST_CASE("reserved texts are not base names") {
    CHECK(!sym::valid_base_name("B"));
    CHECK(!sym::valid_base_name("B1"));
    CHECK(!sym::valid_base_name("PAD"));
    CHECK(!sym::valid_base_name(""));
    CHECK(!sym::valid_base_name("a-b"));
    CHECK(sym::valid_base_name("B2"));
    CHECK(sym::valid_base_name("qf"));
    CHECK(parse_symbol_text("B").kind == SymbolKind::Blank);
    CHECK(parse_symbol_text("PAD").kind == SymbolKind::Pad);
}

TEST_CASE("structured kinds reject nested gadgets") {
    Symbol p = sym::pair(sym::base("a"), sym::base("b"));
    CHECK_THROWS_AS(sym::pair(p, sym::base("a")), std::invalid_argument);
    CHECK_THROWS_AS(sym::stage(1, {p, p, p}, {p, p, p}), std::invalid_argument);
    CHECK_THROWS_AS(sym::stage(4, {sym::base("a"), sym::base("a"), sym::base("a")},
                               {sym::base("a"), sym::base("a"), sym::base("a")}),
                    std::invalid_argument);
}

TEST_CASE("total order follows the kind ranking") {
    std::vector<Symbol> expected = {
        sym::dollar(),
        sym::blank(),
        sym::blank1(),
        sym::star(),
        sym::support(),
        sym::hash_l(),
        sym::hash_r(),
        sym::pad(),
        sym::base("a"),
        sym::base("b"),
        sym::pair(sym::base("a"), sym::base("a")),
        sym::dir_l({sym::base("a"), sym::base("a")}, {sym::base("a"), sym::base("a")}),
        sym::dir_r({sym::base("a"), sym::base("a")}, {sym::base("a"), sym::base("a")}),
        sym::stage(1, {sym::base("a"), sym::base("a"), sym::base("a")},
                   {sym::base("a"), sym::base("a"), sym::base("a")}),
    };
    for (size_t i = 0; i + 1 < expected.size(); ++i) {
        CHECK(expected[i] < expected[i + 1]);
        CHECK(!(expected[i + 1] < expected[i]));
    }
}

TEST_CASE("serialization is injective over a generated symbol universe") {
    // all atoms over a small pool, all pairs, directionals, and stages
    std::vector<Symbol> atoms = {sym::dollar(),   sym::blank(),   sym::blank1(),
                                 sym::star(),     sym::support(), sym::hash_l(),
                                 sym::hash_r(),   sym::pad(),     sym::base("a"),
                                 sym::base("ab"), sym::base("b"), sym::base("q0"),
                                 sym::base("q1"), sym::base("x"), sym::base("y_2"),
                                 sym::base("0"),  sym::base("1"), sym::base("z"),
                                 sym::base("zz"), sym::base("q10")};
    std::vector<Symbol> universe = atoms;
    for (const Symbol& x : atoms)
        for (const Symbol& y : atoms) universe.push_back(sym::pair(x, y));
    for (const Symbol& x : atoms)
        for (const Symbol& y : atoms) {
            universe.push_back(sym::dir_l({x, y}, {y, x}));
            universe.push_back(sym::dir_r({x, y}, {x, x}));
            for (int i = 1; i <= 3; ++i) universe.push_back(sym::stage(i, {x, y, x}, {y, x, y}));
        }
    CHECK(universe.size() > 2000);

    std::set<std::string> texts;
    std::set<Symbol> distinct;
    for (const Symbol& s : universe) {
        std::string t = canonical_symbol_text(s);
        CHECK(parse_symbol_text(t) == s);
        texts.insert(t);
        distinct.insert(s);
    }
    CHECK(texts.size() == distinct.size());
}

TEST_CASE("alphabet orders, dedupes, and assigns dense ids") {
    Alphabet a({sym::base("b"), sym::dollar(), sym::base("a"), sym::base("a"), sym::blank()});
    CHECK(a.size() == 4);
    CHECK(a.at(0) == sym::dollar());
    CHECK(a.at(1) == sym::blank());
    CHECK(a.at(2) == sym::base("a"));
    CHECK(a.at(3) == sym::base("b"));
    CHECK(a.id_of(sym::base("b")) == 3);
    CHECK(a.contains(sym::blank()));
    CHECK(!a.contains(sym::star()));
    CHECK_THROWS_AS(a.id_of(sym::star()), std::out_of_range);
}

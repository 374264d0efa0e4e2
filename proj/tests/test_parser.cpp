#include <doctest.h>

#include <random>

#include "modlp/parser.hpp"
#include "modlp/semantics.hpp"
#include "fixtures.hpp"
#include "testutil.hpp"

using namespace modlp;
using testutil::names_to_set;

TEST_CASE("module parsing") {
  workspace ws = make_workspace();

  SUBCASE("directives, rules, comments and blank lines") {
    dlp_function fn = parse_module(
        "% a module with one shared disjunction\n"
        "#module demo.\n"
        "#input a, c.\n"
        "#output b.\n"
        "#hidden d.\n"
        "\n"
        "a | b :- c.\n"
        "d :- a, not d.  % odd loop on d\n",
        ws);
    CHECK(fn == fixtures::share_pair_left(ws));
  }

  SUBCASE("empty text gives the empty module") {
    CHECK(parse_module("", ws) == empty_module(ws));
  }

  SUBCASE("facts and constraints") {
    dlp_function fn = parse_module("#output a, b.\na | b.\n:- a, b.\n", ws);
    CHECK(fn.rules().size() == 2);
    CHECK(fn.rules()[0].is_constraint());
    CHECK(fn.rules()[1].is_fact());
  }

  SUBCASE("parenthesised atoms are opaque tokens") {
    dlp_function fn = parse_module("#input act(1), act(2).\n#output x1.\nx1 :- act(1).\n", ws);
    CHECK(fn.input() == names_to_set(ws, {"act(1)", "act(2)"}));
    CHECK(render_module(fn) == "#input act(1), act(2).\n#output x1.\nx1 :- act(1).\n");
  }

  SUBCASE("undeclared atoms are rejected") {
    CHECK_THROWS_WITH_AS(parse_module("a | b :- c.\n", ws),
                         doctest::Contains("UndeclaredAtom"), error);
    CHECK_THROWS_WITH_AS(parse_module("#output a.\na :- b.\n", ws),
                         doctest::Contains("'b'"), error);
  }

  SUBCASE("syntax errors carry positions") {
    CHECK_THROWS_WITH_AS(parse_module("#output a.\na :- \n", ws),
                         doctest::Contains("line 2"), error);
    CHECK_THROWS_WITH_AS(parse_module("#output a.\nA :- a.\n", ws),
                         doctest::Contains("SyntaxError"), error);
    CHECK_THROWS_WITH_AS(parse_module("#output a.\na", ws), doctest::Contains("SyntaxError"),
                         error);
    CHECK_THROWS_WITH_AS(parse_module("#frobnicate a.\n", ws),
                         doctest::Contains("unknown directive"), error);
  }

  SUBCASE("duplicate directives and declarations") {
    CHECK_THROWS_WITH_AS(parse_module("#input a.\n#input b.\n", ws),
                         doctest::Contains("duplicate"), error);
    CHECK_THROWS_WITH_AS(parse_module("#input a, a.\n", ws),
                         doctest::Contains("declared more than once"), error);
    CHECK_THROWS_WITH_AS(parse_module("#input a.\n#output a.\n", ws),
                         doctest::Contains("declared more than once"), error);
  }

  SUBCASE("'not' is a keyword") {
    CHECK_THROWS_WITH_AS(parse_module("#output not.\n", ws), doctest::Contains("keyword"),
                         error);
  }
}

TEST_CASE("module rendering") {
  workspace ws = make_workspace();

  SUBCASE("canonical text") {
    dlp_function fn = fixtures::share_pair_left(ws);
    CHECK(render_module(fn) ==
          "#input a, c.\n#output b.\n#hidden d.\na | b :- c.\nd :- a, not d.\n");
    CHECK(render_module(fn, "part_a") ==
          "#module part_a.\n#input a, c.\n#output b.\n#hidden d.\n"
          "a | b :- c.\nd :- a, not d.\n");
  }

  SUBCASE("empty module renders as empty text") {
    CHECK(render_module(empty_module(ws)) == "");
  }

  SUBCASE("round-trip through text") {
    std::mt19937 rng(7010);
    for (int i = 0; i < 100; ++i) {
      dlp_function fn = testutil::random_module(rng, ws);
      dlp_function back = parse_module(render_module(fn), ws);
      CHECK(back == fn);
      CHECK(render_module(back) == render_module(fn));
    }
  }
}

TEST_CASE("model rendering") {
  workspace ws = make_workspace();

  SUBCASE("stable models of the guarded choice module") {
    model_set sm = stable_models(fixtures::guarded_choice(ws));
    CHECK(render_models(sm) == "{a}\n{a, c}\n{b}\n{b, c}\n");
  }

  SUBCASE("empty model and empty set") {
    CHECK(render_models(model_set(ws, {interpretation{}})) == "{}\n");
    CHECK(render_models(model_set(ws, {})) == "");
  }

  SUBCASE("distinct model sets over one signature render differently") {
    std::mt19937 rng(7011);
    std::vector<atom_id> pool = {ws->intern("a"), ws->intern("b"), ws->intern("c")};
    for (int i = 0; i < 50; ++i) {
      std::vector<interpretation> a, b;
      for (int j = 0; j < 3; ++j) {
        a.push_back(testutil::random_subset(rng, pool, 3));
        b.push_back(testutil::random_subset(rng, pool, 3));
      }
      model_set ma(ws, a), mb(ws, b);
      CHECK((ma == mb) == (render_models(ma) == render_models(mb)));
    }
  }
}

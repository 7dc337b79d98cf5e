#include <doctest.h>

#include "settop/io.hpp"

using namespace settop;

TEST_CASE("space files round trip and stay byte stable") {
  const PointTopology t(
      3, {PointSet::of(3, {0}), PointSet::of(3, {0, 1}), PointSet::of(3, {0, 1, 2})});
  const std::string text = save_space(t);
  CHECK(load_space(text) == t);
  CHECK(save_space(load_space(text)) == text);
  // lexicographic member order in the output
  const PointTopology back = load_space(text);
  REQUIRE(back.closed().size() == 3);
  CHECK(back.closed()[0] == PointSet::of(3, {0}));
  CHECK(back.closed()[1] == PointSet::of(3, {0, 1}));
  CHECK(back.closed()[2] == PointSet::of(3, {0, 1, 2}));

  CHECK_THROWS_AS(load_space("{\"points\": 2, \"closed\": [[0]]}"), std::invalid_argument);
  CHECK_THROWS_AS(load_space("not json"), std::invalid_argument);
}

TEST_CASE("hyperspace export carries the base, the table and the topology") {
  std::vector<PointSet> family;
  for (std::uint32_t m = 1; m < 4; ++m) family.emplace_back(2, m);
  const HyperSpace h = exp_space(PointTopology(2, family), KBound::unbounded());
  const std::string text = save_hyperspace(h);
  CHECK(text.find("\"base\"") != std::string::npos);
  CHECK(text.find("\"points\"") != std::string::npos);
  CHECK(text.find("\"topology\"") != std::string::npos);
}

TEST_CASE("map files") {
  int from = 0, to = 0;
  const auto table = load_map("{\"from\": 2, \"to\": 1, \"table\": [0, 0]}", &from, &to);
  CHECK(from == 2);
  CHECK(to == 1);
  CHECK(table == std::vector<int>{0, 0});
  CHECK_THROWS_AS(load_map("{\"from\": 2, \"to\": 1, \"table\": [0]}"), std::invalid_argument);
  CHECK_THROWS_AS(load_map("{\"from\": 1, \"to\": 1, \"table\": [4]}"), std::invalid_argument);
}

TEST_CASE("structure files use container-to-element edges") {
  const std::string text =
      "{\"nodes\": 2, \"atom\": [false, true], \"edges\": [[0, 1]]}";
  const MembershipStructure m = load_structure(text);
  CHECK(m.has_element(0, 1));
  CHECK(!m.has_element(1, 0));
  const std::string saved = save_structure(m);
  const MembershipStructure again = load_structure(saved);
  CHECK(again.elements_of == m.elements_of);
  CHECK_THROWS_AS(load_structure("{\"nodes\": 1, \"atom\": [true], \"edges\": [[0,0]]}"),
                  std::invalid_argument);
}

TEST_CASE("choice files") {
  const std::string text =
      "{\"carrier\": 2, \"choice\": {\"[0]\": 0, \"[1]\": 1, \"[0,1]\": 1}}";
  const ChoiceFunction f = load_choice(text);
  CHECK(f(3) == 1);
  const std::string saved = save_choice(f);
  CHECK(load_choice(saved)(3) == 1);
  CHECK(saved == save_choice(load_choice(saved)));
  CHECK_THROWS_AS(load_choice("{\"carrier\": 2, \"choice\": {\"[0]\": 0}}"),
                  std::invalid_argument);
}

TEST_CASE("formula files take one expression per line with comments") {
  const auto fs = load_formulas("; header\n(in x1 x2)\n\n(= x1 x1) ; trailing\n");
  REQUIRE(fs.size() == 2);
  CHECK(fs[0]->kind == FormulaKind::Member);
  CHECK(fs[1]->kind == FormulaKind::Equal);
  CHECK_THROWS_AS(load_formulas("(in x1\n"), std::invalid_argument);
}

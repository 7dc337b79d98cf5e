#include <doctest.h>

#include "settop/hf.hpp"
#include "settop/rng.hpp"

using namespace settop;

namespace {

HfObject random_hf(Rng& rng, int depth, bool atoms_allowed) {
  if (depth == 0 || rng.below(4) == 0) {
    if (atoms_allowed && rng.coin()) return HfObject::atom(std::string(1, 'a' + rng.below(3)));
    return HfObject::empty_set();
  }
  std::vector<HfObject> elems;
  const std::size_t width = rng.below(4);
  for (std::size_t i = 0; i < width; ++i)
    elems.push_back(random_hf(rng, depth - 1, atoms_allowed));
  return HfObject::set(std::move(elems));
}

}  // namespace

TEST_CASE("canonicalisation deduplicates and orders") {
  const HfObject a = HfObject::set({HfObject::empty_set(), HfObject::empty_set()});
  CHECK(a == HfObject::singleton(HfObject::empty_set()));
  const HfObject xs = HfObject::singleton(HfObject::atom("x"));
  CHECK(HfObject::set({xs, xs}) == HfObject::singleton(xs));
  // degenerate kuratowski pair <0,0> collapses to {{0}}
  const HfObject p = HfObject::kuratowski_pair(HfObject::empty_set(), HfObject::empty_set());
  CHECK(p == HfObject::singleton(HfObject::singleton(HfObject::empty_set())));
  CHECK(p.to_string() == "{{{}}}");
}

TEST_CASE("structural order: atoms first, then by size, then by children") {
  const HfObject a = HfObject::atom("a");
  const HfObject b = HfObject::atom("b");
  const HfObject empty = HfObject::empty_set();
  CHECK(a < b);
  CHECK(a < empty);
  CHECK(empty < HfObject::singleton(empty));
  CHECK(HfObject::singleton(empty) < HfObject::set({empty, HfObject::singleton(empty)}));
}

TEST_CASE("pair sugar parses to the exact kuratowski expansion") {
  const HfObject p = parse_hf("<{}, {{}}>");
  CHECK(p == HfObject::kuratowski_pair(HfObject::empty_set(),
                                       HfObject::singleton(HfObject::empty_set())));
  CHECK(p.to_string() == "<{}, {{}}>");
  // a proper pair decodes; the degenerate one prints raw
  auto decoded = p.as_pair();
  REQUIRE(decoded.has_value());
  CHECK(decoded->first == HfObject::empty_set());
  CHECK(parse_hf("<{}, {}>").to_string() == "{{{}}}");
}

TEST_CASE("text format errors carry positions") {
  CHECK_THROWS_AS(parse_hf("{"), std::invalid_argument);
  CHECK_THROWS_AS(parse_hf("{}, {}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_hf("#"), std::invalid_argument);
  CHECK_THROWS_AS(parse_hf("<{}>"), std::invalid_argument);
}

TEST_CASE("print-parse round trip on random objects") {
  Rng rng(2024);
  for (int i = 0; i < 500; ++i) {
    const HfObject x = random_hf(rng, 4, true);
    CHECK(parse_hf(x.to_string()) == x);
  }
}

TEST_CASE("membership and atoms") {
  const HfObject e = HfObject::empty_set();
  const HfObject se = HfObject::singleton(e);
  CHECK(se.contains(e));
  CHECK(!e.contains(e));
  CHECK(HfObject::atom("w").elements().empty());
  CHECK(e.rank() == 1);
  CHECK(se.rank() == 2);
  CHECK(HfObject::atom("w").rank() == 0);
}

TEST_CASE("set algebra") {
  const HfObject e = HfObject::empty_set();
  const HfObject one = HfObject::singleton(e);
  const HfObject two = HfObject::set({e, one});
  CHECK(hf_union(one, two) == two);
  CHECK(hf_intersection(one, two) == one);
  CHECK(hf_difference(two, one) == HfObject::singleton(one));
  CHECK(hf_big_union(HfObject::singleton(one)) == one);
  CHECK(hf_big_union(HfObject::singleton(HfObject::singleton(one))) ==
        HfObject::singleton(one));
  CHECK_THROWS_AS(hf_union(HfObject::atom("a"), e), std::invalid_argument);
}

TEST_CASE("cumulative hierarchy levels") {
  CHECK(hierarchy(0).empty());
  CHECK(hierarchy(1).size() == 1);
  CHECK(hierarchy(2).size() == 2);
  CHECK(hierarchy(3).size() == 4);
  CHECK(hierarchy(4).size() == 16);
  // U_3 holds exactly the four objects of rank at most 3
  for (const auto& x : hierarchy(3)) CHECK(x.rank() <= 3);
  // each level contains the previous one
  const auto u3 = hierarchy(3);
  for (const auto& x : hierarchy(2))
    CHECK(std::find(u3.begin(), u3.end(), x) != u3.end());
}

TEST_CASE("relative hierarchy over a nontrivial zero mirrors the plain one") {
  const HfObject z = HfObject::set(
      {HfObject::singleton(HfObject::atom("x")), HfObject::singleton(HfObject::atom("y"))});
  const auto rel = relative_hierarchy(z, {}, 3);
  const auto plain = hierarchy(3);
  REQUIRE(rel.size() == plain.size());
  CHECK(std::find(rel.begin(), rel.end(), z) != rel.end());
  CHECK(std::find(rel.begin(), rel.end(), hf_union(z, HfObject::singleton(z))) != rel.end());
}

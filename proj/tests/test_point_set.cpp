#include <doctest.h>

#include "settop/point_set.hpp"

using namespace settop;

TEST_CASE("point set basics") {
  PointSet a = PointSet::of(3, {0, 2});
  CHECK(a.size() == 2);
  CHECK(a.contains(0));
  CHECK(!a.contains(1));
  CHECK(a.to_string() == "{0,2}");
  CHECK(a.complement() == PointSet::of(3, {1}));
  CHECK(a.unite(PointSet::of(3, {1})) == PointSet::full(3));
  CHECK(a.intersect(PointSet::of(3, {2})) == PointSet::of(3, {2}));
  CHECK_THROWS_AS(PointSet::of(3, {3}), std::invalid_argument);
  CHECK_THROWS_AS(PointSet(2, 0x4), std::invalid_argument);
}

TEST_CASE("lexicographic order matches the index sequences") {
  // {0} < {0,1} < {0,1,2} < {0,2} < {1} < {1,2} < {2}
  std::vector<PointSet> expected = {
      PointSet::of(3, {0}),    PointSet::of(3, {0, 1}), PointSet::of(3, {0, 1, 2}),
      PointSet::of(3, {0, 2}), PointSet::of(3, {1}),    PointSet::of(3, {1, 2}),
      PointSet::of(3, {2}),
  };
  for (std::size_t i = 0; i < expected.size(); ++i)
    for (std::size_t j = 0; j < expected.size(); ++j)
      CHECK(lex_less(expected[i], expected[j]) == (i < j));

  // oracle: compare materialised index vectors
  for (std::uint32_t x = 0; x < 8; ++x)
    for (std::uint32_t y = 0; y < 8; ++y) {
      PointSet a(3, x), b(3, y);
      CHECK(lex_less(a, b) == (a.indices() < b.indices()));
    }
}

TEST_CASE("k bound") {
  CHECK(KBound::unbounded().small(1000));
  CHECK(KBound::of(3).small(2));
  CHECK(!KBound::of(3).small(3));
  CHECK_THROWS_AS(KBound::of(0), std::invalid_argument);
}

TEST_CASE("bit vector") {
  BitVec v(130);
  v.set(0);
  v.set(129);
  CHECK(v.test(129));
  CHECK(v.count() == 2);
  BitVec w(130);
  w.set(0);
  CHECK(w.subset_of(v));
  CHECK(!v.subset_of(w));
  w |= v;
  CHECK(w == v);
}

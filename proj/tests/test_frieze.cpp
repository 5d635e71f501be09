#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "cfl/frieze.hpp"
#include "oracles.hpp"

using namespace cfl;

namespace {

ExchangeMatrix base(const char* name) { return from_dynkin(DynkinType::parse(name)); }

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::vector<std::vector<Integer>> initial_slices(const std::vector<IntFrieze>& fs) {
  std::vector<std::vector<Integer>> out;
  for (const auto& f : fs) out.push_back(f.slices.front());
  return out;
}

}  // namespace

TEST_CASE("D5 frieze from its initial slice") {
  IntFrieze f = knit(base("D5"), ints({1, 3, 5, 1, 3}));
  CHECK(f.satisfies_mesh());
  const std::vector<std::vector<long>> shown{
      {1, 3, 5, 1, 3}, {4, 3, 2, 3, 1}, {1, 2, 5, 2, 6}, {3, 8, 5, 3, 1}, {3, 2, 5, 2, 6}};
  for (long m = 0; m < 5; ++m)
    for (std::size_t v = 0; v < 5; ++v) CHECK(f.at(m, v) == shown[m][v]);
  CHECK(f.at(-1, 1) == 2);
  // The leaves 3 and 4 hang off vertex 2, so the mesh relation at (0, leaf)
  // reads a(0, leaf) a(-1, leaf) = 1 + a(0, 2). Slice -1 is slice 4 with
  // the two leaves exchanged, not slice 4 itself.
  CHECK(f.at(-1, 3) == (1 + f.at(0, 2)) / f.at(0, 3));
  CHECK(f.at(-1, 4) == (1 + f.at(0, 2)) / f.at(0, 4));
  CHECK(f.at(-1, 3) == 6);
  CHECK(f.at(-1, 4) == 2);
}

TEST_CASE("B4 frieze") {
  IntFrieze f = knit(base("B4"), ints({3, 2, 11, 4}));
  CHECK(f.satisfies_mesh());
  const std::vector<std::vector<long>> shown{{3, 2, 11, 4}, {1, 2, 3, 1}, {3, 2, 1, 2}, {1, 5, 9, 5}, {6, 17, 14, 3}};
  for (long m = 0; m < 5; ++m)
    for (std::size_t v = 0; v < 4; ++v) CHECK(f.at(m, v) == shown[m][v]);
  CHECK(f.at(-1, 1) == 17);
  CHECK(f.at(-1, 3) == 3);
}

TEST_CASE("G2 friezes") {
  const ExchangeMatrix g2 = base("G2");
  const std::vector<std::vector<std::vector<long>>> shown{
      {{1, 1}, {2, 3}, {14, 5}, {9, 2}, {1, 1}},
      {{1, 2}, {9, 5}, {14, 3}, {2, 1}, {1, 2}},
      {{3, 2}, {3, 2}, {3, 2}, {3, 2}, {3, 2}},
  };
  for (const auto& rows : shown) {
    IntFrieze f = knit(g2, ints({rows[0][0], rows[0][1]}));
    CHECK(f.satisfies_mesh());
    for (long m = 0; m < 5; ++m)
      for (std::size_t v = 0; v < 2; ++v) CHECK(f.at(m, v) == rows[m][v]);
  }
  CHECK(knit(g2, ints({3, 2})).period == 1);
}

TEST_CASE("knitting agrees with the rational oracle") {
  std::mt19937 rng(9);
  for (const char* name : {"A3", "B3", "C3", "D4", "G2", "F4", "A1xB2"}) {
    const ExchangeMatrix m = base(name);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Rational> init;
      for (std::size_t i = 0; i < m.rank(); ++i) init.push_back(oracle::random_positive_rational(rng));
      RationalFrieze f = knit(m, init);
      CHECK(f.satisfies_mesh());
      auto cols = oracle::columns(m, init, f.period + 1);
      CHECK(oracle::mesh_ok(m, cols));
      for (std::size_t j = 0; j < f.period; ++j) CHECK(cols[j] == f.slices[j]);
      CHECK(cols[f.period] == init);
      // A window on both sides of slice 0 wraps around the period.
      auto window = knit_window(m, init, -3, 4);
      CHECK(window.size() == 8);
      for (long k = -3; k <= 4; ++k) CHECK(window[static_cast<std::size_t>(k + 3)] == f.slices[static_cast<std::size_t>(((k % static_cast<long>(f.period)) + f.period) % f.period)]);
      CHECK(satisfies_mesh(m, window));
    }
  }
}

TEST_CASE("knit errors") {
  CHECK_THROWS_AS(knit(base("A2"), ints({1, 2, 3})), std::invalid_argument);
  CHECK_THROWS_AS(knit(base("A2"), ints({0, 1})), std::domain_error);
  CHECK_THROWS_AS(knit(base("A2"), ints({2, 2})), std::domain_error);  // 3/2 is not integral
  CHECK_THROWS_AS(knit(ExchangeMatrix({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}}), ints({1, 1, 1})),
                  std::invalid_argument);
}

TEST_CASE("general frieze contains every cluster variable of a Dynkin type") {
  for (const char* name : {"A3", "B3", "D4", "G2", "A1xA2"}) {
    Pattern p = enumerate_pattern(base(name));
    LaurentFrieze gf = general_frieze(p.registry, p.pattern);
    CHECK(gf.satisfies_mesh());
    auto ids = general_frieze_ids(p.registry, gf);
    std::set<VarId> seen;
    for (const auto& s : ids) seen.insert(s.begin(), s.end());
    CHECK(seen.size() == p.registry.size());
  }
}

TEST_CASE("enumeration matches brute force and closed forms") {
  // Small cases against an exhaustive search over every slice in the box.
  struct Small {
    const char* name;
    long bound;
  };
  for (Small s : {Small{"A2", 6}, Small{"A3", 6}, Small{"B2", 8}, Small{"G2", 16}, Small{"A1xA1", 4}}) {
    const ExchangeMatrix m = base(s.name);
    const std::size_t span = period_cap(m);
    FriezeSearch search;
    search.bound = s.bound;
    auto found = enumerate_friezes(m, search);
    CAPTURE(s.name);
    CHECK(static_cast<std::int64_t>(found.size()) == oracle::count_integral_friezes(m, s.bound, span));
  }
  for (const char* name : {"A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "D5", "G2", "A1xG2"}) {
    const DynkinType t = DynkinType::parse(name);
    auto found = enumerate_friezes(from_dynkin(t));
    std::int64_t expect = 1;
    for (const auto& c : t.components()) expect *= oracle::friezes(static_cast<char>(c.family), c.rank);
    CAPTURE(name);
    CHECK(static_cast<std::int64_t>(found.size()) == expect);
    for (const auto& f : found) {
      CHECK(f.satisfies_mesh());
      for (const auto& slice : f.slices)
        for (const auto& v : slice) CHECK(v >= 1);
    }
    auto init = initial_slices(found);
    CHECK(std::is_sorted(init.begin(), init.end()));
    CHECK(std::adjacent_find(init.begin(), init.end()) == init.end());
  }
}

TEST_CASE("parallel enumeration is deterministic") {
  const ExchangeMatrix m = base("D5");
  FriezeSearch one, four;
  four.jobs = 4;
  CHECK(initial_slices(enumerate_friezes(m, one)) == initial_slices(enumerate_friezes(m, four)));
}

TEST_CASE("enumerate_and_check reports a small bound") {
  FriezeSearch s;
  s.bound = 3;
  FriezeEnumeration e = enumerate_and_check(base("G2"), s);
  CHECK(e.friezes.size() < 9);
  CHECK_FALSE(e.diagnostic.empty());
  FriezeEnumeration ok = enumerate_and_check(base("G2"));
  CHECK(ok.friezes.size() == 9);
  CHECK(ok.diagnostic.empty());
  REQUIRE(ok.expected);
  CHECK(ok.expected->value == 9);
}

TEST_CASE("G2 frieze points") {
  Pattern p = enumerate_pattern(base("G2"));
  auto points = find_frieze_points(p.registry, 32);
  std::set<std::vector<Integer>> got;
  for (const auto& fp : points) got.insert(fp.values);
  const std::set<std::vector<Integer>> shown{ints({1, 1}), ints({1, 2}), ints({9, 2}), ints({14, 3}), ints({14, 5}),
                                            ints({9, 5}),  ints({2, 3}), ints({2, 1}), ints({3, 2})};
  CHECK(got == shown);
  // The knitting search finds the same initial slices.
  auto slices = initial_slices(enumerate_friezes(base("G2")));
  CHECK(std::set<std::vector<Integer>>(slices.begin(), slices.end()) == shown);

  LaurentFrieze gf = general_frieze(p.registry, p.pattern);
  long unitary = 0;
  for (const auto& fp : points) {
    IntFrieze f = specialize(gf, fp);
    CHECK(f == knit(base("G2"), fp.values));
    FriezeClass cls = classify_frieze(p.registry, p.pattern, f);
    unitary += cls.is_unitary;
    if (fp.values == ints({3, 2})) CHECK(cls.face.subcluster.empty());
  }
  CHECK(unitary == 8);
}

TEST_CASE("frieze points agree with knitting in rank three and four") {
  for (const char* name : {"A3", "B3", "C3", "D4"}) {
    Pattern p = enumerate_pattern(base(name));
    auto points = find_frieze_points(p.registry, 16);
    FriezeSearch search;
    search.bound = 16;
    auto slices = initial_slices(enumerate_friezes(base(name), search));
    std::vector<std::vector<Integer>> via_points;
    for (const auto& fp : points) via_points.push_back(fp.values);
    std::sort(via_points.begin(), via_points.end());
    CHECK(via_points == slices);
  }
}

TEST_CASE("unitary extension and restriction") {
  for (const char* name : {"A3", "B3", "D4"}) {
    const ExchangeMatrix m = base(name);
    Pattern p = enumerate_pattern(m);
    Atlas atlas(p.registry, p.pattern);
    auto subs = enumerate_subclusters(p.pattern);
    for (const auto& c : subs) {
      if (c.empty() || c.size() == m.rank()) continue;
      Deletion d = delete_subcluster(p.pattern, c);
      if (!d.matrix.is_acyclic()) continue;
      for (const auto& inner : enumerate_friezes(d.matrix)) {
        IntFrieze outer = unitary_extension(atlas, d, c, inner);
        CHECK(outer.satisfies_mesh());
        FriezeClass cls = classify_frieze(p.registry, p.pattern, outer);
        for (VarId id : c) CHECK(std::binary_search(cls.face.subcluster.begin(), cls.face.subcluster.end(), id));
        CHECK(restrict_to_deletion(atlas, d, outer).slices.front() == inner.slices.front());
      }
    }
  }
  // An inner frieze on a differently oriented base is rejected.
  Pattern p = enumerate_pattern(base("A3"));
  Atlas atlas(p.registry, p.pattern);
  Deletion d = delete_subcluster(p.pattern, {1});
  REQUIRE(d.type);
  CHECK(d.type->to_string() == "A2");
  ExchangeMatrix flipped({{0, -d.matrix(0, 1)}, {-d.matrix(1, 0), 0}});
  IntFrieze wrong = knit(flipped, ints({1, 1}));
  CHECK_THROWS_AS(unitary_extension(atlas, d, {1}, wrong), std::invalid_argument);
}

TEST_CASE("default bounds") {
  CHECK(default_bound(base("G2")) == 32);
  CHECK(default_bound(base("A4")) == 64);
  CHECK(default_bound(base("F4")) >= 307);
}

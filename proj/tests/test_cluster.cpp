#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "cfl/cluster.hpp"
#include "oracles.hpp"

using namespace cfl;

namespace {

Pattern enumerate(const char* name) { return enumerate_pattern(from_dynkin(DynkinType::parse(name))); }

std::set<std::string> rendered(const ClusterRegistry& reg) {
  std::set<std::string> out;
  for (const auto& v : reg.variables()) out.insert(v.to_string());
  return out;
}

std::set<std::string> rendered(std::initializer_list<const char*> num_den) {
  std::set<std::string> out;
  const char* const* it = num_den.begin();
  for (; it != num_den.end(); it += 2)
    out.insert(exact_div(LaurentPoly::parse(it[0], 2), LaurentPoly::parse(it[1], 2)).to_string());
  return out;
}

}  // namespace

TEST_CASE("variable and cluster counts") {
  struct Row {
    const char* name;
    std::size_t vars, clusters;
  };
  for (Row row : {Row{"A2", 5, 5}, Row{"A3", 9, 14}, Row{"B3", 12, 20}, Row{"C3", 12, 20}, Row{"D4", 16, 50},
                  Row{"G2", 8, 8}, Row{"B2", 6, 6}}) {
    Pattern p = enumerate(row.name);
    CAPTURE(row.name);
    CHECK(p.pattern.finite);
    CHECK(p.registry.size() == row.vars);
    CHECK(p.pattern.seeds.size() == row.clusters);
    CHECK(p.pattern.cluster_index.size() == row.clusters);
  }
}

TEST_CASE("cluster counts match the closed forms") {
  for (const char* name : {"A1", "A4", "A5", "B4", "C4", "D5", "F4", "G2", "A1xA2", "B2xA1"}) {
    const DynkinType t = DynkinType::parse(name);
    Pattern p = enumerate_pattern(from_dynkin(t));
    std::int64_t expect = 1;
    for (const auto& c : t.components()) expect *= oracle::clusters(static_cast<char>(c.family), c.rank);
    CAPTURE(name);
    CHECK(static_cast<std::int64_t>(p.pattern.cluster_index.size()) == expect);
  }
}

TEST_CASE("rank two expansions") {
  CHECK(rendered(enumerate("A2").registry) ==
        rendered({"x1", "1", "x2", "1", "x2 + 1", "x1", "x1 + x2 + 1", "x1*x2", "x1 + 1", "x2"}));
  CHECK(rendered(enumerate("B2").registry) ==
        rendered({"x1", "1", "x2", "1", "x2^2 + 1", "x1", "x1 + x2^2 + 1", "x1*x2", "x1^2 + x2^2 + 2*x1 + 1",
                  "x1*x2^2", "x1 + 1", "x2"}));
  CHECK(rendered(enumerate("G2").registry) ==
        rendered({"x1", "1", "x2", "1", "x2^3 + 1", "x1", "x1 + x2^3 + 1", "x1*x2",
                  "x2^6 + 3*x1*x2^3 + 2*x2^3 + x1^3 + 3*x1^2 + 3*x1 + 1", "x1^2*x2^3",
                  "x2^3 + x1^2 + 2*x1 + 1", "x1*x2^2", "x1^3 + x2^3 + 3*x1^2 + 3*x1 + 1", "x1*x2^3", "x1 + 1",
                  "x2"}));
  // The first mutation of the A2 seed at position 0.
  Pattern a2 = enumerate("A2");
  Seed s0 = a2.pattern.seeds.front();
  Seed s1 = mutate_seed(a2.registry, s0, 0);
  CHECK(a2.registry.expansion(s1.cluster[0]) == LaurentPoly::parse("x1^-1*x2 + x1^-1", 2));
  CHECK(exchange_polynomial(a2.registry, s0, 0) == LaurentPoly::parse("x2 + 1", 2));
}

TEST_CASE("initial seed and neighbor structure") {
  Pattern p = enumerate("D4");
  const auto& seeds = p.pattern.seeds;
  CHECK(seeds.front().cluster == std::vector<VarId>{1, 2, 3, 4});
  for (std::size_t s = 0; s < seeds.size(); ++s)
    for (std::size_t k = 0; k < 4; ++k) {
      // Seeds are stored once per cluster, so the exchanged variable may sit
      // at another position of the neighbor.
      std::size_t t = p.pattern.neighbors[s][k];
      std::size_t j = 4;
      for (std::size_t i = 0; i < 4; ++i)
        if (std::find(seeds[s].cluster.begin(), seeds[s].cluster.end(), seeds[t].cluster[i]) == seeds[s].cluster.end())
          j = i;
      REQUIRE(j < 4);
      CHECK(p.pattern.neighbors[t][j] == s);
      Subcluster a = seeds[s].sorted_cluster(), b = seeds[t].sorted_cluster();
      std::vector<VarId> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      CHECK(common.size() == 3);
      // Same exchange matrix once positions are matched by variable.
      ExchangeMatrix mk = mutate_matrix(seeds[s].matrix, k);
      std::vector<std::size_t> pos(4);
      for (std::size_t i = 0; i < 4; ++i) {
        VarId id = i == k ? seeds[t].cluster[j] : seeds[s].cluster[i];
        pos[i] = static_cast<std::size_t>(
            std::find(seeds[t].cluster.begin(), seeds[t].cluster.end(), id) - seeds[t].cluster.begin());
      }
      for (std::size_t a2 = 0; a2 < 4; ++a2)
        for (std::size_t b2 = 0; b2 < 4; ++b2) CHECK(mk(a2, b2) == seeds[t].matrix(pos[a2], pos[b2]));
    }
}

TEST_CASE("expansions agree with numeric mutation") {
  std::mt19937 rng(3);
  for (const char* name : {"A3", "B3", "C3", "G2", "D4"}) {
    Pattern p = enumerate(name);
    const std::size_t r = p.registry.rank();
    const ExchangeMatrix m0 = p.pattern.seeds.front().matrix;
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Rational> start;
      for (std::size_t i = 0; i < r; ++i) start.push_back(oracle::random_positive_rational(rng));
      RationalPoint pt(start);
      // Walk labeled seeds: ids[i] is the variable at labeled position i.
      std::vector<std::size_t> path;
      std::size_t seed = 0;
      std::vector<VarId> ids = p.pattern.seeds[0].cluster;
      std::uniform_int_distribution<std::size_t> pick(0, r - 1);
      for (int step = 0; step < 12; ++step) {
        std::size_t k = pick(rng);
        path.push_back(k);
        const auto& cur = p.pattern.seeds[seed].cluster;
        std::size_t stored = static_cast<std::size_t>(std::find(cur.begin(), cur.end(), ids[k]) - cur.begin());
        seed = p.pattern.neighbors[seed][stored];
        for (VarId id : p.pattern.seeds[seed].cluster)
          if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids[k] = id;
      }
      auto values = oracle::mutate_values(m0, start, path);
      for (std::size_t i = 0; i < r; ++i) CHECK(evaluate(p.registry.expansion(ids[i]), pt) == values[i]);
    }
  }
}

TEST_CASE("verify_exact gives the same pattern") {
  for (const char* name : {"A3", "B3", "G2", "D4"}) {
    const ExchangeMatrix m = from_dynkin(DynkinType::parse(name));
    EnumerationOptions fast, exact;
    exact.verify_exact = true;
    Pattern a = enumerate_pattern(m, fast), b = enumerate_pattern(m, exact);
    CHECK(a.registry.variables() == b.registry.variables());
    CHECK(a.pattern.neighbors == b.pattern.neighbors);
  }
}

TEST_CASE("positivity and the unit coefficient sum criterion") {
  for (const char* name : {"A3", "B3", "C3", "G2", "A2xA1"}) {
    Pattern p = enumerate(name);
    Atlas atlas(p.registry, p.pattern);
    for (std::size_t s = 0; s < p.pattern.seeds.size(); ++s) {
      const auto& chart = atlas.chart(s);
      const Subcluster cl = p.pattern.seeds[s].sorted_cluster();
      for (VarId id = 1; id <= p.registry.size(); ++id) {
        const LaurentPoly& e = chart[id - 1];
        CHECK(e.is_positive());
        CHECK((coefficient_sum(e) == 1) == std::binary_search(cl.begin(), cl.end(), id));
      }
    }
  }
}

TEST_CASE("charts agree with the initial expansions") {
  Pattern p = enumerate("B3");
  Atlas atlas(p.registry, p.pattern);
  std::mt19937 rng(8);
  for (std::size_t s = 0; s < p.pattern.seeds.size(); s += 3) {
    std::vector<Rational> init;
    for (int i = 0; i < 3; ++i) init.push_back(oracle::random_positive_rational(rng));
    RationalPoint x(init);
    std::vector<Rational> local;
    for (VarId id : p.pattern.seeds[s].cluster) local.push_back(evaluate(p.registry.expansion(id), x));
    RationalPoint y(local);
    for (VarId id = 1; id <= p.registry.size(); ++id)
      CHECK(evaluate(atlas.chart(s)[id - 1], y) == evaluate(p.registry.expansion(id), x));
  }
}

TEST_CASE("subclusters and compatibility") {
  Pattern p = enumerate("A3");
  auto subs = enumerate_subclusters(p.pattern);
  std::vector<std::size_t> by_size(4, 0);
  for (const auto& c : subs) ++by_size[c.size()];
  CHECK(by_size == std::vector<std::size_t>{1, 9, 21, 14});
  CHECK(subs.front().empty());
  CHECK(std::is_sorted(subs.begin(), subs.end(), [](const Subcluster& a, const Subcluster& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  }));
  CHECK(p.pattern.compatible(1, 2));
  CHECK(make_subcluster(p.pattern, {3, 1}) == Subcluster{1, 3});
  // The variable exchanged with x1 in the initial seed is not compatible with it.
  VarId x1p = p.pattern.seeds[p.pattern.neighbors[0][0]].cluster[0];
  CHECK_FALSE(p.pattern.compatible(1, x1p));
  CHECK_THROWS_AS(make_subcluster(p.pattern, {1, x1p}), std::invalid_argument);
}

TEST_CASE("deletion") {
  Pattern p = enumerate("A3");
  Atlas atlas(p.registry, p.pattern);
  // Deleting the middle initial variable leaves A1 x A1.
  Deletion d = delete_subcluster(p.pattern, {2});
  REQUIRE(d.type);
  CHECK(d.type->to_string() == "A1xA1");
  CHECK(d.kept.size() == 2);
  CHECK(d.matrix.is_acyclic());
  // Deleting an end variable leaves A2.
  Deletion e = delete_subcluster(p.pattern, {1});
  CHECK(e.type->to_string() == "A2");
  // Images of compatible variables under the deletion map are cluster
  // variables of the smaller algebra; x2 itself maps to 1.
  CHECK(deletion_map_image(atlas, {2}, 2) == LaurentPoly::one(2));
  Pattern a1a1 = enumerate_pattern(d.matrix);
  for (VarId y = 1; y <= p.registry.size(); ++y) {
    if (y == 2 || !p.pattern.compatible(2, y)) continue;
    CHECK(a1a1.registry.find(deletion_map_image(atlas, d, {2}, y)).has_value());
  }
}

TEST_CASE("infinite type guard") {
  Pattern k23 = enumerate_pattern(ExchangeMatrix({{0, 2}, {-3, 0}}));
  CHECK_FALSE(k23.pattern.finite);
  CHECK(k23.pattern.reason.find("infinite type") != std::string::npos);
  Pattern markov = enumerate_pattern(ExchangeMatrix({{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}}));
  CHECK_FALSE(markov.pattern.finite);
  // A cyclic quiver of finite type (A3) must not trip the guard.
  Pattern a3cyc = enumerate_pattern(ExchangeMatrix({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}}));
  CHECK(a3cyc.pattern.finite);
  CHECK(a3cyc.pattern.cluster_index.size() == 14);
  // The seed cap stops large enumerations.
  Pattern capped = enumerate_pattern(from_dynkin(DynkinType::parse("D5")), 10);
  CHECK_FALSE(capped.pattern.finite);
  CHECK(capped.pattern.seeds.size() <= 10);
}

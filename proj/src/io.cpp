#include "cfl/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cfl {

namespace {

Json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(j.get<long>());
}

std::string matrix_key(const ExchangeMatrix& m) {
  std::string key = std::to_string(m.rank());
  for (const auto& row : m.rows())
    for (int e : row) key += "_" + std::to_string(e);
  return key;
}

}  // namespace

Json quiver_to_json(const ExchangeMatrix& m) {
  Json arrows = Json::array();
  for (const auto& a : m.arrows()) arrows.push_back({{"from", a.from + 1}, {"to", a.to + 1}, {"b", a.b}, {"c", a.c}});
  return {{"rank", m.rank()}, {"arrows", arrows}};
}

ExchangeMatrix quiver_from_json(const Json& j) {
  const auto rank = j.at("rank").get<std::size_t>();
  std::vector<ValuedArrow> arrows;
  for (const auto& a : j.value("arrows", Json::array())) {
    auto from = a.at("from").get<std::size_t>(), to = a.at("to").get<std::size_t>();
    if (from == 0 || to == 0) throw std::invalid_argument("quiver vertices are 1-based");
    arrows.push_back({from - 1, to - 1, a.value("b", 1), a.value("c", 1)});
  }
  return ExchangeMatrix::from_arrows(rank, arrows);
}

Json pattern_to_json(const Pattern& p) {
  Json vars = Json::array(), clusters = Json::array();
  for (const auto& v : p.registry.variables()) vars.push_back(v.to_string());
  for (const auto& s : p.pattern.seeds) clusters.push_back(s.cluster);
  Json out = {{"variables", vars}, {"clusters", clusters}};
  if (!p.pattern.finite) out["not_finite_within_cap"] = p.pattern.reason;
  return out;
}

Json pattern_to_cache_json(const Pattern& p) {
  Json out = pattern_to_json(p);
  out["rank"] = p.registry.rank();
  out["finite"] = p.pattern.finite;
  out["reason"] = p.pattern.reason;
  Json matrices = Json::array();
  for (const auto& s : p.pattern.seeds) matrices.push_back(s.matrix.rows());
  out["matrices"] = matrices;
  out["neighbors"] = p.pattern.neighbors;
  return out;
}

Pattern pattern_from_cache_json(const Json& j) {
  const auto rank = j.at("rank").get<std::size_t>();
  Pattern out{ClusterRegistry(rank), {}};
  const auto& vars = j.at("variables");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    VarId id = out.registry.intern(LaurentPoly::parse(vars[i].get<std::string>(), rank));
    if (id != i + 1) throw std::runtime_error("cached pattern lists variables out of order");
  }
  const auto& clusters = j.at("clusters");
  const auto& matrices = j.at("matrices");
  SeedPattern& pat = out.pattern;
  for (std::size_t s = 0; s < clusters.size(); ++s) {
    Seed seed{clusters[s].get<std::vector<VarId>>(), ExchangeMatrix(matrices[s].get<std::vector<std::vector<int>>>())};
    pat.cluster_index.emplace(seed.sorted_cluster(), s);
    pat.seeds.push_back(std::move(seed));
  }
  pat.neighbors = j.at("neighbors").get<std::vector<std::vector<std::size_t>>>();
  pat.finite = j.at("finite").get<bool>();
  pat.reason = j.value("reason", "");
  pat.seeds_of_variable.assign(out.registry.size(), {});
  for (std::size_t s = 0; s < pat.seeds.size(); ++s)
    for (VarId id : pat.seeds[s].cluster) pat.seeds_of_variable.at(id - 1).push_back(s);
  return out;
}

Json frieze_to_json(const IntFrieze& f) {
  Json rows = Json::array();
  for (std::size_t v = 0; v < f.rank(); ++v) {
    Json row = Json::array();
    for (std::size_t m = 0; m < f.period; ++m) row.push_back(integer_to_json(f.slices[m][v]));
    rows.push_back(row);
  }
  return {{"type", f.type ? f.type->to_string() : std::string("unknown")}, {"period", f.period}, {"rows", rows}};
}

IntFrieze frieze_from_json(const Json& j, const std::optional<ExchangeMatrix>& base) {
  IntFrieze f;
  f.base = base ? *base : from_dynkin(DynkinType::parse(j.at("type").get<std::string>()));
  f.type = recognize_dynkin(f.base);
  f.period = j.at("period").get<std::size_t>();
  const auto& rows = j.at("rows");
  if (rows.size() != f.base.rank()) throw std::invalid_argument("frieze rows do not match the quiver rank");
  f.slices.assign(f.period, std::vector<Integer>(f.base.rank()));
  for (std::size_t v = 0; v < rows.size(); ++v) {
    if (rows[v].size() != f.period) throw std::invalid_argument("frieze row length differs from the period");
    for (std::size_t m = 0; m < f.period; ++m) f.slices[m][v] = integer_from_json(rows[v][m]);
  }
  return f;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << contents;
}

ExchangeMatrix load_quiver(const std::string& source) {
  if (source.ends_with(".json") || std::filesystem::is_regular_file(source))
    return quiver_from_json(Json::parse(read_file(source)));
  return from_dynkin(DynkinType::parse(source));
}

Pattern cached_pattern(const ExchangeMatrix& m, std::size_t cap) {
  const char* dir = std::getenv("CFL_CACHE_DIR");
  if (!dir || !*dir) return enumerate_pattern(m, cap);
  const auto path = std::filesystem::path(dir) / ("pattern_" + matrix_key(m) + ".json");
  if (std::filesystem::is_regular_file(path)) {
    try {
      Pattern p = pattern_from_cache_json(Json::parse(read_file(path)));
      if (p.pattern.finite && p.pattern.seeds.front().matrix == m) return p;
    } catch (const std::exception&) {
      // Unreadable cache entries are recomputed and overwritten.
    }
  }
  Pattern p = enumerate_pattern(m, cap);
  if (p.pattern.finite) write_file(path, pattern_to_cache_json(p).dump());
  return p;
}

}  // namespace cfl

// cfl: command-line front end for cluster patterns, friezes and type counts.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cfl/cluster.hpp"
#include "cfl/frieze.hpp"
#include "cfl/io.hpp"
#include "cfl/quiver.hpp"
#include "cfl/region.hpp"
#include "cfl/typecomb.hpp"

using namespace cfl;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct RunConfig {
  std::string type;
  std::string sub;
  std::string what = "clusters";
  std::string suite = "all";
  std::string format = "text";
  std::string out;
  std::string plot;
  std::string csv;
  std::string point;
  long bound = 0;
  std::size_t cap = 100000;
  std::size_t resolution = 256;
  int max_rank = 4;
  unsigned jobs = 1;
  bool list = false;
  bool count_only = false;
  bool allow_slow = false;
  int verbosity = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ExchangeMatrix parse_quiver(const std::string& text) {
  try {
    return load_quiver(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("unknown type: ") + e.what());
  }
}

DynkinType parse_type(const std::string& text) {
  try {
    return DynkinType::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("unknown type: ") + e.what());
  }
}

std::string type_name(const ExchangeMatrix& m) {
  auto t = recognize_dynkin(m);
  return t ? t->to_string() : "non-Dynkin";
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) std::cout << text;
  else write_file(cfg.out, text);
}

// ---------------------------------------------------------------- commands

int cmd_enumerate(const RunConfig& cfg) {
  const ExchangeMatrix m = parse_quiver(cfg.type);
  const Pattern p = cached_pattern(m, cfg.cap);
  if (!p.pattern.finite) {
    std::cerr << "not finite within cap: " << p.pattern.reason << "\n";
    std::cout << "not finite within cap (" << p.pattern.seeds.size() << " seeds, " << p.registry.size()
              << " variables explored)\n";
    return kMismatch;
  }
  if (cfg.format == "json" || !cfg.out.empty()) {
    emit(cfg, pattern_to_json(p).dump(2) + "\n");
    if (cfg.out.empty()) return kOk;
  }
  std::cout << "type " << type_name(m) << ": " << p.registry.size() << " cluster variables, " << p.pattern.seeds.size()
            << " clusters\n";
  if (cfg.verbosity > 0)
    for (std::size_t i = 0; i < p.registry.size(); ++i)
      std::cout << "x" << i + 1 << " = " << p.registry.variables()[i] << "\n";
  return kOk;
}

bool is_slow(const ExchangeMatrix& m) {
  auto t = recognize_dynkin(m);
  if (!t) return true;
  for (const auto& c : t->components())
    if (c.family == Family::E || c.rank > 6) return true;
  return false;
}

int cmd_friezes(const RunConfig& cfg) {
  const ExchangeMatrix m = parse_quiver(cfg.type);
  if (!m.is_acyclic()) throw UsageError("frieze enumeration needs an acyclic quiver");
  if (is_slow(m) && !cfg.allow_slow)
    throw UsageError("frieze enumeration for " + type_name(m) + " is slow; pass --allow-slow");
  FriezeSearch search;
  search.bound = cfg.bound;
  search.jobs = cfg.jobs;
  const FriezeEnumeration result = enumerate_and_check(m, search);

  std::size_t unitary = 0;
  std::vector<bool> flags;
  if (!cfg.count_only) {
    const Pattern p = cached_pattern(m, cfg.cap);
    for (const auto& f : result.friezes) {
      bool u = classify_frieze(p.registry, p.pattern, f).is_unitary;
      flags.push_back(u);
      unitary += u;
    }
  }

  if (cfg.format == "json") {
    Json out = {{"type", type_name(m)}, {"bound", result.bound}, {"count", result.friezes.size()}};
    if (!cfg.count_only) out["unitary"] = unitary;
    if (result.expected) {
      out["expected"] = result.expected->value.get_str();
      out["conjectural"] = result.expected->conjectural;
    }
    if (cfg.list) {
      Json list = Json::array();
      for (std::size_t i = 0; i < result.friezes.size(); ++i) {
        Json j = frieze_to_json(result.friezes[i]);
        j["unitary"] = static_cast<bool>(flags[i]);
        list.push_back(j);
      }
      out["friezes"] = list;
    }
    emit(cfg, out.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << type_name(m) << ": " << result.friezes.size() << " friezes";
    if (!cfg.count_only) os << ", " << unitary << " unitary";
    os << " (bound " << result.bound << ")\n";
    if (cfg.list) {
      for (std::size_t i = 0; i < result.friezes.size(); ++i) {
        const auto& f = result.friezes[i];
        os << "frieze " << i + 1 << (flags[i] ? " unitary" : "") << " period " << f.period << "\n";
        for (std::size_t v = 0; v < f.rank(); ++v) {
          os << " ";
          for (std::size_t k = 0; k < f.period; ++k) os << ' ' << f.slices[k][v];
          os << "\n";
        }
      }
    }
    emit(cfg, os.str());
  }
  if (!result.diagnostic.empty()) {
    std::cerr << "bound exhausted: " << result.diagnostic << "\n";
    return kMismatch;
  }
  return kOk;
}

int cmd_count(const RunConfig& cfg) {
  const DynkinType t = parse_type(cfg.type);
  Integer value;
  std::string provenance;
  if (cfg.what == "clusters") {
    value = cluster_count(t);
    provenance = "recursion";
  } else if (cfg.what == "friezes") {
    auto c = frieze_count_closed_form(t);
    value = c->value;
    provenance = c->provenance;
    if (c->conjectural) provenance = "conjectural";
  } else if (cfg.what == "mu") {
    if (cfg.sub.empty()) throw UsageError("count --what mu needs --sub");
    value = multiplicity(parse_type(cfg.sub), t);
    provenance = "recursion";
  } else {
    throw UsageError("unknown --what '" + cfg.what + "'");
  }
  if (cfg.format == "json")
    std::cout << Json{{"what", cfg.what}, {"type", t.to_string()}, {"value", value.get_str()}, {"provenance", provenance}}.dump()
              << "\n";
  else
    std::cout << value << "\n" << "provenance: " << provenance << "\n";
  return kOk;
}

RationalPoint parse_point(const std::string& text, std::size_t rank) {
  std::vector<Rational> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      Rational q(item);
      q.canonicalize();
      coords.push_back(q);
    } catch (const std::invalid_argument&) {
      throw UsageError("bad coordinate '" + item + "'");
    }
  }
  if (coords.size() != rank) throw UsageError("point needs " + std::to_string(rank) + " coordinates");
  try {
    return RationalPoint(coords);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
}

std::string face_text(const FaceLabel& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.subcluster.size(); ++i) s += (i ? ",x" : "x") + std::to_string(f.subcluster[i]);
  return s + "}";
}

int cmd_region(const RunConfig& cfg) {
  const ExchangeMatrix m = parse_quiver(cfg.type);
  const Pattern p = cached_pattern(m, cfg.cap);
  if (!p.pattern.finite) {
    std::cerr << "not finite within cap: " << p.pattern.reason << "\n";
    return kMismatch;
  }
  Atlas atlas(p.registry, p.pattern);
  if (!cfg.point.empty()) {
    PositivePoint pt{0, parse_point(cfg.point, m.rank())};
    auto face = superunitary_membership(atlas, pt);
    if (face) std::cout << "member, face " << face_text(*face) << (face->subcluster.empty() ? " (interior)" : "") << "\n";
    else std::cout << "not a member\n";
  }
  if (!cfg.plot.empty() || !cfg.csv.empty() || cfg.format != "text") {
    if (m.rank() != 2 && m.rank() != 3) throw UsageError("plots need rank 2 or 3");
    PlotConfig pc;
    pc.resolution = cfg.resolution;
    const BoundaryPlot plot = sample_boundary(atlas, pc);
    if (cfg.format == "svg" && cfg.plot.empty()) std::cout << render_svg(plot, pc);
    if (cfg.format == "csv" && cfg.csv.empty()) std::cout << render_csv(plot);
    if (!cfg.plot.empty()) write_file(cfg.plot, render_svg(plot, pc));
    if (!cfg.csv.empty()) write_file(cfg.csv, render_csv(plot));
    if (cfg.format == "text")
      std::cout << plot.curves.size() << " boundary curves covering " << plot.variables_with_arcs().size()
              << " cluster variables\n";
  }
  if (cfg.point.empty() && cfg.plot.empty() && cfg.csv.empty() && cfg.format == "text") {
    const FacePoset fp = face_poset(p.pattern);
    std::cout << "f-vector";
    for (long f : fp.f_vector) std::cout << ' ' << f;
    std::cout << "\neuler characteristic " << fp.euler_characteristic << "\n";
  }
  return kOk;
}

std::vector<DynkinType> connected_types(int max_rank, bool allow_slow) {
  std::vector<DynkinType> out;
  for (int n = 1; n <= max_rank; ++n) {
    out.emplace_back(Family::A, n);
    if (n >= 2) out.emplace_back(Family::B, n);
    if (n >= 3) out.emplace_back(Family::C, n);
    if (n >= 4) out.emplace_back(Family::D, n);
    if (n == 2) out.emplace_back(Family::G, 2);
    if (n == 4) out.emplace_back(Family::F, 4);
    if (n == 6 && allow_slow) out.emplace_back(Family::E, 6);
  }
  return out;
}

int cmd_verify(const RunConfig& cfg) {
  if (cfg.suite != "table1" && cfg.suite != "appendix" && cfg.suite != "all")
    throw UsageError("unknown suite '" + cfg.suite + "'");
  bool ok = true;
  auto report = [&](const std::string& label, const Integer& got, const Integer& want) {
    bool good = got == want;
    ok = ok && good;
    std::cout << label << ": " << got << (good ? " ok" : " MISMATCH (expected " + want.get_str() + ")") << "\n";
  };
  if (cfg.suite != "appendix") {
    for (const auto& t : connected_types(cfg.max_rank, cfg.allow_slow)) {
      const ExchangeMatrix m = from_dynkin(t);
      const Pattern p = cached_pattern(m, cfg.cap);
      report(t.to_string() + " clusters", static_cast<long>(p.pattern.seeds.size()), cluster_count_closed_form(t));
      FriezeSearch search;
      search.jobs = cfg.jobs;
      auto result = enumerate_and_check(m, search);
      report(t.to_string() + " friezes", static_cast<long>(result.friezes.size()), result.expected->value);
    }
  }
  if (cfg.suite != "table1") {
    const char* const mu[][3] = {{"A1", "A2", "5"},     {"A2", "A3", "6"},     {"A1xA1", "A3", "3"},
                                 {"A1", "A3", "21"},    {"B3", "F4", "7"},     {"D4", "D5", "5"},
                                 {"D4", "D6", "21"},    {"D4", "E6", "35"},    {"D4", "D7", "84"},
                                 {"D4", "E7", "220"},   {"D4", "E8", "1596"},  {"D6", "E7", "10"},
                                 {"D6", "E8", "136"}};
    for (const auto& row : mu)
      report(std::string("mu(") + row[0] + "," + row[1] + ")", multiplicity(DynkinType::parse(row[0]), DynkinType::parse(row[1])),
             Integer(row[2]));
    for (const char* name : {"A2", "A3", "A4", "A5", "B2", "B3", "B4", "C3", "D4", "D5", "G2", "F4", "E6", "E7", "E8"}) {
      const DynkinType t = DynkinType::parse(name);
      if (t.rank() > std::max(cfg.max_rank, 8)) continue;
      Count faces = frieze_count_via_faces(t);
      report(std::string(name) + " friezes via faces" + (faces.conjectural ? " (conjectural)" : ""), faces.value,
             frieze_count_closed_form(t)->value);
    }
  }
  return ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-type cluster algebras, superunitary regions and friezes"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_flag("-v,--verbose", cfg.verbosity, "More output");

  auto type_opt = [&](CLI::App* sub, bool required = true) {
    auto* o = sub->add_option("-t,--type", cfg.type, "Dynkin type such as D5 or A1xG2, or a quiver JSON file");
    if (required) o->required();
  };
  auto format_opt = [&](CLI::App* sub, std::vector<std::string> choices) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(choices));
  };

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate cluster variables and clusters");
  type_opt(enumerate);
  enumerate->add_option("--cap", cfg.cap, "Maximum number of seeds");
  enumerate->add_option("-o,--out", cfg.out, "Write the pattern as JSON");
  format_opt(enumerate, {"text", "json"});

  auto* friezes = app.add_subcommand("friezes", "Enumerate positive integral friezes");
  type_opt(friezes);
  friezes->add_option("--bound", cfg.bound, "Per-coordinate bound on the initial slice");
  friezes->add_option("--jobs", cfg.jobs, "Worker threads");
  friezes->add_flag("--list", cfg.list, "Print every frieze");
  friezes->add_flag("--count-only", cfg.count_only, "Skip classification");
  friezes->add_flag("--allow-slow", cfg.allow_slow, "Permit slow types (E6 and up)");
  friezes->add_option("-o,--out", cfg.out, "Write output to a file");
  format_opt(friezes, {"text", "json"});

  auto* count = app.add_subcommand("count", "Cluster, frieze and face counts");
  type_opt(count);
  count->add_option("--what", cfg.what, "clusters, friezes or mu")->check(CLI::IsMember({"clusters", "friezes", "mu"}));
  count->add_option("--sub", cfg.sub, "Face type for --what mu");
  format_opt(count, {"text", "json"});

  auto* region = app.add_subcommand("region", "Superunitary region membership and plots");
  type_opt(region);
  region->add_option("--point", cfg.point, "Initial-chart coordinates, e.g. 3/2,3/2");
  region->add_option("--plot", cfg.plot, "SVG output path");
  region->add_option("--csv", cfg.csv, "CSV output path");
  region->add_option("--resolution", cfg.resolution, "Samples per boundary curve");
  format_opt(region, {"text", "svg", "csv"});

  auto* verify = app.add_subcommand("verify", "Re-run the count cross-checks");
  verify->add_option("--suite", cfg.suite, "table1, appendix or all");
  verify->add_option("--max-rank", cfg.max_rank, "Largest rank for table1");
  verify->add_option("--jobs", cfg.jobs, "Worker threads");
  verify->add_flag("--allow-slow", cfg.allow_slow, "Include E6");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(cfg);
    if (*friezes) return cmd_friezes(cfg);
    if (*count) return cmd_count(cfg);
    if (*region) return cmd_region(cfg);
    if (*verify) return cmd_verify(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
  return kUsage;
}

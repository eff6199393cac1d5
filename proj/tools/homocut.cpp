#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "homocut/cuts.hpp"
#include "homocut/generators.hpp"
#include "homocut/oracles.hpp"
#include "json.hpp"

using namespace homocut;
using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

struct Globals {
  std::uint64_t seed = 0;
  std::string mode = "naive";
  bool verify = false;
  bool json_out = false;

  CutOptions cut() const { return CutOptions{search_mode()}; }
  SearchMode search_mode() const { return mode == "sliced" ? SearchMode::sliced : SearchMode::naive; }
};

Surface load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_crs(buf.str());
}

std::string dart_token(Dart d) { return std::to_string(edge_of(d)) + ((d & 1) ? "-" : "+"); }

json cut_json(const CutResult& r) {
  return json{{"weight", r.weight},
              {"edges", r.edges},
              {"side_s", r.side_s},
              {"side_t", r.side_t},
              {"provenance", r.provenance}};
}

json stats_json(const Surface& s) {
  const SurfaceStats st = surface_stats(s);
  return json{{"n", s.num_vertices()}, {"m", s.num_edges()},       {"f", s.num_faces()},
              {"b", st.boundaries},    {"chi", st.euler_characteristic}, {"g", st.genus},
              {"beta", st.betti}};
}

json class_json(const Surface& s, const std::string& hex, const EvenSubgraph& h) {
  return json{{"class", hex},
              {"weight", weight_of(s, h)},
              {"edges", h.edges},
              {"components", count_components(s, h.edges)}};
}

std::vector<fs::path> corpus_files(const std::string& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".crs") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  return files;
}

int cmd_gen(const GenSpec& spec, const std::string& out) {
  const std::string text = emit_crs(generate(spec));
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << text;
  }
  return 0;
}

int cmd_info(const Globals& g, const std::string& path) {
  const json j = stats_json(load(path));
  if (g.json_out) {
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& [k, v] : j.items()) std::cout << k << " " << v.dump() << "\n";
  }
  return 0;
}

int cmd_signatures(const Globals& g, const std::string& path) {
  const Surface s = homology_surface(load(path));
  const auto sigs = edge_signatures(s);
  for (int e = 0; e < s.num_edges(); ++e) {
    if (g.json_out)
      std::cout << json{{"edge", e}, {"signature", sigs[e].to_hex()}}.dump() << "\n";
    else
      std::cout << e << " " << sigs[e].to_hex() << "\n";
  }
  return 0;
}

int cmd_arcs(const Globals& g, const std::string& path) {
  const Surface s = homology_surface(load(path));
  const ForestCotree fc = forest_cotree_greedy(s);
  for (const auto& arc : fc.arcs) {
    std::vector<std::string> tokens;
    for (Dart d : arc) tokens.push_back(dart_token(d));
    if (g.json_out) {
      std::cout << json(tokens).dump() << "\n";
    } else {
      for (std::size_t i = 0; i < tokens.size(); ++i) std::cout << (i ? " " : "") << tokens[i];
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_min_even(const Globals& g, const std::string& path, const std::string& cls, bool all) {
  const Surface base = load(path);
  const Surface s = homology_surface(base);
  const CoverGraph c(s);
  const CycleSearchOptions opt{g.search_mode()};
  std::unique_ptr<EvenClassOracle> oracle;
  if (g.verify) oracle = std::make_unique<EvenClassOracle>(oracle_instance(s));
  int mismatches = 0;
  auto emit = [&](const HomologySignature& h, const EvenSubgraph& x) {
    json j = class_json(s, h.to_hex(), x);
    if (oracle) {
      const Weight want = oracle->minimum(representative_of_class(s, c.signatures(), h).edges).weight;
      j["oracle_weight"] = want;
      if (want != weight_of(s, x)) ++mismatches;
    }
    std::cout << j.dump() << "\n";
  };
  if (all) {
    const ClassTable t = all_classes(c, opt);
    for (std::uint64_t h = 0; h < c.sheets(); ++h) {
      const auto x = even_subgraph_from_table(c, t, h);
      if (!x) throw std::logic_error("class without an even subgraph");
      emit(HomologySignature::from_mask(c.beta(), h), *x);
    }
  } else {
    const auto h = HomologySignature::from_hex(c.beta(), cls);
    emit(h, min_even_in_class(c, h, opt));
  }
  return mismatches ? 2 : 0;
}

int cmd_mincut(const Globals& g, const std::string& path, int source, int sink) {
  const Surface s = load(path);
  const CutResult r = min_st_cut(s, source, sink, g.cut());
  json j = cut_json(r);
  int status = 0;
  if (g.verify) {
    const Weight want = oracle_max_flow_min_cut(s.num_vertices(), s.edges(), source, sink).value;
    j["oracle_weight"] = want;
    if (want != r.weight) status = 2;
  }
  std::cout << j.dump() << "\n";
  return status;
}

int cmd_global(const Globals& g, const std::string& path, int source) {
  const Surface s = load(path);
  const CutResult r = global_min_cut(s, source, g.cut());
  json j = cut_json(r);
  int status = 0;
  if (g.verify) {
    const Weight want = oracle_global_min_cut(s.num_vertices(), s.edges()).value;
    j["oracle_weight"] = want;
    if (want != r.weight) status = 2;
  }
  std::cout << j.dump() << "\n";
  return status;
}

json report_json(const OracleReport& r) {
  return json{{"instance", r.instance},
              {"quantity", r.quantity},
              {"oracle", r.oracle_value},
              {"solver", r.solver_value},
              {"match", r.match}};
}

int cmd_verify(const Globals& g, const std::string& dir) {
  int mismatches = 0;
  auto emit = [&](const OracleReport& r) {
    if (!r.match) ++mismatches;
    std::cout << report_json(r).dump() << "\n";
  };
  for (const auto& file : corpus_files(dir)) {
    const std::string name = file.filename().string();
    try {
      const Surface s = load(file.string());
      const int n = s.num_vertices();
      if (n >= 2) {
        const Weight st = min_st_cut(s, 0, n - 1, g.cut()).weight;
        emit(make_report(name, "st-cut 0 " + std::to_string(n - 1),
                         oracle_max_flow_min_cut(n, s.edges(), 0, n - 1).value, st));
        const Weight gl = global_min_cut(s, 0, g.cut()).weight;
        emit(make_report(name, "global-cut", oracle_global_min_cut(n, s.edges()).value, gl));
      }
      if (s.num_edges() <= EvenClassOracle::kMaxEdges) {
        const Surface h = homology_surface(s);
        const CoverGraph c(h);
        const EvenClassOracle oracle(oracle_instance(h));
        const ClassTable t = all_classes(c, {g.search_mode()});
        for (std::uint64_t k = 0; k < c.sheets(); ++k) {
          const auto cls = HomologySignature::from_mask(c.beta(), k);
          const auto x = even_subgraph_from_table(c, t, k);
          const Weight want = oracle.minimum(representative_of_class(h, c.signatures(), cls).edges).weight;
          emit(make_report(name, "min-even " + cls.to_hex(), want, x ? weight_of(h, *x) : -1));
        }
      }
    } catch (const std::exception& e) {
      ++mismatches;
      std::cout << json{{"instance", name}, {"error", e.what()}, {"match", false}}.dump() << "\n";
    }
  }
  return std::min(mismatches, 255);
}

int cmd_bench(const Globals& g, const std::string& dir, const std::string& solver) {
  std::cout << "instance,n,g,beta,solver,wall_ms,weight\n";
  if (dir.empty()) return 0;
  for (const auto& file : corpus_files(dir)) {
    const std::string name = file.filename().string();
    try {
      const Surface s = load(file.string());
      const SurfaceStats st = surface_stats(s);
      const auto start = std::chrono::steady_clock::now();
      Weight weight = 0;
      if (solver == "global") {
        weight = global_min_cut(s, 0, g.cut()).weight;
      } else if (solver == "st") {
        weight = min_st_cut(s, 0, s.num_vertices() - 1, g.cut()).weight;
      } else {
        const CoverGraph c(homology_surface(s));
        weight = weight_of(c.base(), *even_subgraph_from_table(c, all_classes(c, {g.search_mode()}),
                                                               c.sheets() - 1));
      }
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      std::cout << name << "," << s.num_vertices() << "," << st.genus << "," << st.betti << "," << solver << "-"
                << g.mode << "," << ms << "," << weight << "\n";
    } catch (const std::exception& e) {
      std::cerr << name << ": " << e.what() << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cuts and homology-class even subgraphs on surface-embedded graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Seed for generators");
  app.add_option("--mode", g.mode, "Cover search mode")->check(CLI::IsMember({"naive", "sliced"}));
  app.add_flag("--verify", g.verify, "Compare against the brute-force oracle");
  app.add_flag("--json", g.json_out, "JSON output for info, signatures and arcs");

  GenSpec spec;
  std::string kind = "torus-grid", weights = "unit", out;
  auto* gen = app.add_subcommand("gen", "Write a generated instance as .crs");
  gen->add_option("--kind", kind)->check(CLI::IsMember({"planar-grid", "torus-grid", "genus-schema", "random-rotation"}));
  gen->add_option("--rows", spec.rows);
  gen->add_option("--cols", spec.cols);
  gen->add_option("--genus", spec.genus);
  gen->add_option("--vertices", spec.vertices);
  gen->add_option("--edges", spec.edges);
  gen->add_option("--subdivisions", spec.subdivisions);
  gen->add_option("--chords", spec.chords);
  gen->add_option("--boundary", spec.boundary);
  gen->add_option("--weights", weights)->check(CLI::IsMember({"unit", "uniform", "file"}));
  gen->add_option("--lo", spec.weight_lo);
  gen->add_option("--hi", spec.weight_hi);
  gen->add_option("--weight-file", spec.weight_file);
  gen->add_option("-o,--output", out);

  std::string path;
  auto* info = app.add_subcommand("info", "Print n, m, f, b, chi, g and beta");
  auto* sigs = app.add_subcommand("signatures", "Print one homology signature per edge");
  auto* arcs = app.add_subcommand("arcs", "Print the greedy arcs as dart sequences");
  auto* even = app.add_subcommand("min-even", "Minimum even subgraph per homology class");
  auto* st = app.add_subcommand("mincut", "Minimum (s,t)-cut");
  auto* global = app.add_subcommand("global-mincut", "Global minimum cut");
  for (auto* sub : {info, sigs, arcs, even, st, global}) sub->add_option("file", path)->required();

  std::string cls;
  bool all = false;
  auto* cls_opt = even->add_option("--class", cls, "Class as hex bits");
  auto* all_opt = even->add_flag("--all", all, "Every class");
  cls_opt->excludes(all_opt);

  int source = 0, sink = 1;
  st->add_option("--s", source)->required();
  st->add_option("--t", sink)->required();
  global->add_option("--s", source);

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Solver against oracle over a corpus");
  verify->add_option("--suite", suite)->required();

  std::string corpus, solver = "global";
  auto* bench = app.add_subcommand("bench", "CSV timings over a corpus");
  bench->add_option("--corpus", corpus);
  bench->add_option("--solver", solver)->check(CLI::IsMember({"global", "st", "even"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      spec.kind = parse_gen_kind(kind);
      spec.weights = weights == "uniform" ? WeightKind::uniform : weights == "file" ? WeightKind::file : WeightKind::unit;
      spec.seed = g.seed;
      return cmd_gen(spec, out);
    }
    if (*info) return cmd_info(g, path);
    if (*sigs) return cmd_signatures(g, path);
    if (*arcs) return cmd_arcs(g, path);
    if (*even) {
      if (!all && cls.empty()) throw std::invalid_argument("min-even needs --class or --all");
      return cmd_min_even(g, path, cls, all);
    }
    if (*st) return cmd_mincut(g, path, source, sink);
    if (*global) return cmd_global(g, path, source);
    if (*verify) return cmd_verify(g, suite);
    if (*bench) return cmd_bench(g, corpus, solver);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

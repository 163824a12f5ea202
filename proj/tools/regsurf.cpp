// Command-line front end: regularity and Betti tables of edge ideals and
// squarefree monomial ideals, reduced homology over exact fields, closed
// surface recognition and search, and the corpus verification harness.
//
// Exit codes: 0 success/agreement, 1 disagreement or counterexample found,
// 2 usage or parse error, 3 budget exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "regsurf/betti.hpp"
#include "regsurf/complex.hpp"
#include "regsurf/field.hpp"
#include "regsurf/graph.hpp"
#include "regsurf/graph6.hpp"
#include "regsurf/homology.hpp"
#include "regsurf/ideal.hpp"
#include "regsurf/surfaces.hpp"
#include "regsurf/verify.hpp"

using namespace regsurf;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Options {
  std::string field = "f0";
  std::string format;
  std::string input = "-";
  bool json = false;
  bool timings = false;
  int threads = 1;
  std::uint64_t max_subsets = 1ull << 22;
  std::uint64_t max_nodes = 1ull << 22;
  int max_triangles = 64;
  long long time_limit_ms = 0;
  int var_cap = 20;

  FieldSpec field_spec() const { return FieldSpec::parse(field); }

  HochsterCaps hochster_caps() const {
    HochsterCaps caps;
    caps.var_cap = var_cap;
    caps.max_subsets = max_subsets;
    caps.time_limit_ms = time_limit_ms;
    caps.threads = threads;
    return caps;
  }

  SurfaceSearchCaps surface_caps() const {
    SurfaceSearchCaps caps;
    caps.max_nodes = max_nodes;
    caps.max_triangles = max_triangles;
    caps.threads = threads;
    return caps;
  }
};

void add_common(CLI::App* cmd, Options& opt, bool with_field = true) {
  if (with_field)
    cmd->add_option("--field", opt.field, "coefficient field: f2, f0, fp:<p>, f0exact")
        ->capture_default_str();
  cmd->add_option("--input,-i", opt.input, "input path ('-' = stdin)")->capture_default_str();
  cmd->add_flag("--json", opt.json, "emit a single JSON document");
  cmd->add_flag("--timings", opt.timings, "include timing blocks in reports");
  cmd->add_option("--threads", opt.threads, "worker threads")->capture_default_str();
  cmd->add_option("--max-subsets", opt.max_subsets, "subset budget per Betti table")
      ->capture_default_str();
  cmd->add_option("--max-nodes", opt.max_nodes, "surface search node budget")
      ->capture_default_str();
  cmd->add_option("--max-triangles", opt.max_triangles, "surface candidate size cap")
      ->capture_default_str();
  cmd->add_option("--time-limit-ms", opt.time_limit_ms, "wall clock budget (0 = none)")
      ->capture_default_str();
  cmd->add_option("--var-cap", opt.var_cap, "hard variable cap for Hochster tables")
      ->capture_default_str();
}

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string require_format(const Options& opt, std::initializer_list<std::string> allowed) {
  if (opt.format.empty())
    throw parse_error("--format is required (no auto-detection); expected one of: " +
                      [&] {
                        std::string s;
                        for (const auto& a : allowed) s += a + " ";
                        return s;
                      }());
  for (const auto& a : allowed)
    if (opt.format == a) return opt.format;
  throw parse_error("--format '" + opt.format + "' is not valid for this command");
}

Graph load_graph(const Options& opt) {
  std::string fmt = require_format(opt, {"graph6", "edges"});
  std::string text = read_all(opt.input);
  if (fmt == "graph6") {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) return parse_graph6(line);
    throw parse_error("no graph6 line in input");
  }
  return parse_edge_list(text);
}

SquarefreeIdeal load_ideal_like(const Options& opt) {
  std::string fmt = require_format(opt, {"graph6", "edges", "ideal"});
  std::string text = read_all(opt.input);
  if (fmt == "ideal") return parse_ideal(text);
  if (fmt == "graph6") {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) return edge_ideal(parse_graph6(line));
    throw parse_error("no graph6 line in input");
  }
  return edge_ideal(parse_edge_list(text));
}

SimplicialComplex load_complex_like(const Options& opt) {
  std::string fmt = require_format(opt, {"graph6", "edges", "ideal", "complex"});
  std::string text = read_all(opt.input);
  if (fmt == "complex") return parse_complex(text);
  if (fmt == "ideal") return stanley_reisner_complex(parse_ideal(text));
  // graphs are read as their independence complex
  if (fmt == "graph6") {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) return independence_complex(parse_graph6(line));
    throw parse_error("no graph6 line in input");
  }
  return independence_complex(parse_edge_list(text));
}

int cmd_reg(const Options& opt) {
  SquarefreeIdeal ideal = load_ideal_like(opt);
  HochsterEngine engine(opt.hochster_caps());
  auto start = std::chrono::steady_clock::now();
  int reg = engine.regularity(ideal, opt.field_spec());
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                  start)
                .count();
  if (opt.json) {
    std::cout << "{\"command\":\"reg\",\"field\":\"" << opt.field_spec().to_string()
              << "\",\"nvars\":" << ideal.nvars << ",\"regularity\":" << reg;
    if (opt.timings) std::cout << ",\"timings\":{\"total_ms\":" << ms << "}";
    std::cout << "}\n";
  } else {
    std::cout << "regularity " << reg << "\n";
  }
  return kExitOk;
}

int cmd_betti(const Options& opt) {
  SquarefreeIdeal ideal = load_ideal_like(opt);
  HochsterEngine engine(opt.hochster_caps());
  BettiTable t = engine.table(ideal, opt.field_spec());
  if (opt.json) {
    std::cout << t.to_json() << "\n";
  } else {
    std::cout << t.macaulay_text();
    std::cout << "regularity " << t.regularity() << ", projective dimension "
              << t.projective_dimension() << " over " << t.field.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_homology(const Options& opt) {
  SimplicialComplex d = load_complex_like(opt);
  ReducedBetti rb = reduced_betti(d, opt.field_spec());
  if (opt.json) {
    std::cout << "{\"command\":\"homology\",\"field\":\"" << opt.field_spec().to_string()
              << "\",\"dims\":[";
    for (std::size_t k = 0; k < rb.dims.size(); ++k) {
      if (k) std::cout << ",";
      std::cout << "[" << static_cast<int>(k) - 1 << "," << rb.dims[k] << "]";
    }
    std::cout << "]}\n";
  } else {
    for (std::size_t k = 0; k < rb.dims.size(); ++k)
      std::cout << "H~_" << static_cast<int>(k) - 1 << " = " << rb.dims[k] << "\n";
  }
  return kExitOk;
}

int cmd_surface(const Options& opt) {
  SimplicialComplex d = load_complex_like(opt);
  std::vector<std::array<int, 3>> tris;
  for (const Bits128& f : d.facets) {
    if (f.count() != 3)
      throw parse_error("surface: input must be a pure 2-complex (all facets triangles)");
    auto idx = f.to_indices();
    tris.push_back({idx[0], idx[1], idx[2]});
  }
  SurfaceCheck check = is_closed_surface(PureTwoComplex(d.nvars, std::move(tris)));
  if (opt.json) {
    std::cout << "{\"command\":\"surface\",\"defect\":\"" << to_string(check.defect)
              << "\",\"certificate\":"
              << (check.certificate ? check.certificate->to_json() : std::string("null")) << "}\n";
  } else if (check.certificate) {
    std::cout << "closed surface: " << check.certificate->label << " (euler "
              << check.certificate->euler << ", "
              << (check.certificate->orientable ? "orientable" : "non-orientable") << ")\n";
  } else {
    std::cout << "not a closed surface: " << to_string(check.defect) << "\n";
  }
  return kExitOk;
}

int cmd_find_surface(const Options& opt, bool in_complement, bool orientable,
                     bool exclude_tetrahedra) {
  Graph g = load_graph(opt);
  PureTwoComplex pool = triangles_of_clique_complex(in_complement ? complement(g) : g);
  SurfaceSearchResult res =
      find_surface_subcomplex(pool, orientable, opt.surface_caps(), exclude_tetrahedra);
  const char* status = res.status == SearchStatus::found
                           ? "found"
                           : (res.status == SearchStatus::none ? "none" : "indeterminate");
  if (opt.json) {
    std::cout << "{\"command\":\"find-surface\",\"status\":\"" << status << "\",\"certificate\":"
              << (res.certificate ? res.certificate->to_json() : std::string("null"));
    if (opt.timings) std::cout << ",\"timings\":{\"nodes\":" << res.nodes << "}";
    std::cout << "}\n";
  } else if (res.certificate) {
    std::cout << "found " << res.certificate->label << ": " << res.certificate->to_json() << "\n";
  } else {
    std::cout << status << "\n";
  }
  return res.status == SearchStatus::capped ? kExitBudget : kExitOk;
}

void write_counterexamples(const std::string& cert_dir, const CorpusSummary& sum,
                           const HochsterEngine& engine, const SurfaceSearchCaps& caps) {
  if (cert_dir.empty()) return;
  bool made_dir = false;
  long long id = 0;
  for (const Verdict& v : sum.verdicts) {
    if (!v.disagree_nondegenerate()) continue;
    if (!made_dir) {
      std::filesystem::create_directories(cert_dir);
      made_dir = true;
    }
    Graph g = parse_graph6(v.graph6);
    std::ofstream out(cert_dir + "/counterexample-" + std::to_string(id++) + ".json");
    out << counterexample_json(v, engine.table(g, FieldSpec::f0()),
                               engine.table(g, FieldSpec::f2()), caps)
        << "\n";
  }
}

int cmd_verify(const Options& opt, const std::string& cert_dir) {
  std::string text = read_all(opt.input);
  std::istringstream in(text);
  HochsterEngine engine(opt.hochster_caps());
  CorpusSummary sum = corpus_run(in, engine, opt.surface_caps(), {}, opt.threads);
  for (const Verdict& v : sum.verdicts) std::cout << v.to_json(opt.timings) << "\n";
  for (const auto& [line, msg] : sum.parse_errors)
    std::cerr << "line " << line << ": " << msg << "\n";
  write_counterexamples(cert_dir, sum, engine, opt.surface_caps());
  if (!sum.clean()) return kExitDisagreement;
  if (sum.indeterminate > 0) return kExitBudget;
  return kExitOk;
}

int cmd_corpus(const Options& opt, int max_n, bool with_verdicts, const std::string& cert_dir) {
  std::string text = read_all(opt.input);
  std::istringstream in(text);
  HochsterEngine engine(opt.hochster_caps());
  CorpusFilters filters;
  filters.max_n = max_n;
  CorpusSummary sum = corpus_run(in, engine, opt.surface_caps(), filters, opt.threads);
  write_counterexamples(cert_dir, sum, engine, opt.surface_caps());
  if (opt.json) {
    std::cout << "{\"command\":\"corpus\",\"summary\":" << sum.to_json();
    if (with_verdicts) {
      std::cout << ",\"verdicts\":[";
      for (std::size_t k = 0; k < sum.verdicts.size(); ++k) {
        if (k) std::cout << ",";
        std::cout << sum.verdicts[k].to_json(opt.timings);
      }
      std::cout << "]";
    }
    std::cout << "}\n";
  } else {
    std::cout << "graphs " << sum.graphs << ", skipped " << sum.skipped << ", parse errors "
              << sum.parse_errors.size() << "\n";
    std::cout << "disagreements f0 " << sum.disagreements_f0 << " (degenerate "
              << sum.degenerate_f0 << "), f2 " << sum.disagreements_f2 << " (degenerate "
              << sum.degenerate_f2 << ")\n";
    std::cout << "indeterminate " << sum.indeterminate << "\n";
    if (with_verdicts)
      for (const Verdict& v : sum.verdicts) std::cout << v.to_json(opt.timings) << "\n";
  }
  for (const auto& [line, msg] : sum.parse_errors)
    std::cerr << "line " << line << ": " << msg << "\n";
  if (!sum.clean()) return kExitDisagreement;
  if (sum.indeterminate > 0) return kExitBudget;
  return kExitOk;
}

int cmd_bounds(const Options& opt) {
  Graph g = load_graph(opt);
  RegInterval iv = reg_interval(g, opt.max_nodes);
  int im = induced_matching_number(g);
  int mat = matching_number(g);
  if (opt.json) {
    std::cout << "{\"command\":\"bounds\",\"lo\":" << iv.lo << ",\"hi\":" << iv.hi
              << ",\"exact\":" << (iv.exact ? "true" : "false")
              << ",\"budget_hit\":" << (iv.budget_hit ? "true" : "false")
              << ",\"induced_matching\":" << im << ",\"matching\":" << mat << "}\n";
  } else {
    std::cout << "reg in [" << iv.lo << ", " << iv.hi << "]"
              << (iv.exact ? " (exact)" : "") << ", im " << im << ", mat " << mat
              << (iv.budget_hit ? " [budget hit]" : "") << "\n";
  }
  return iv.budget_hit ? kExitBudget : kExitOk;
}

int cmd_splitting(const Options& opt, int var) {
  SquarefreeIdeal ideal = load_ideal_like(opt);
  if (var < 0 || var >= ideal.nvars) throw parse_error("splitting: --var out of range");
  HochsterEngine engine(opt.hochster_caps());
  SplittingReport r = splitting_check(ideal, var, opt.field_spec(), engine);
  if (opt.json) {
    std::cout << "{\"command\":\"splitting\",\"var\":" << var
              << ",\"degenerate\":" << (r.degenerate ? "true" : "false")
              << ",\"is_splitting\":" << (r.is_splitting ? "true" : "false")
              << ",\"iprime_linear\":" << (r.iprime_linear ? "true" : "false")
              << ",\"reg\":{\"ideal\":" << r.reg_i << ",\"iprime\":" << r.reg_p
              << ",\"idoubleprime\":" << r.reg_pp << ",\"intersection\":" << r.reg_cap
              << ",\"formula_ok\":" << (r.reg_formula_ok ? "true" : "false")
              << "},\"pd\":{\"ideal\":" << r.pd_i << ",\"iprime\":" << r.pd_p
              << ",\"idoubleprime\":" << r.pd_pp << ",\"intersection\":" << r.pd_cap
              << ",\"formula_ok\":" << (r.pd_formula_ok ? "true" : "false") << "}}\n";
  } else if (r.degenerate) {
    std::cout << "degenerate partition (one side is zero)\n";
  } else {
    std::cout << (r.is_splitting ? "betti splitting" : "NOT a betti splitting")
              << (r.iprime_linear ? " (I' linear)" : "") << "; reg " << r.reg_i << " pd " << r.pd_i
              << "\n";
  }
  return kExitOk;
}

int cmd_gadget(const Options& opt, int a, int b) {
  Graph g = load_graph(opt);
  if (a < 0 || b < 0) {
    auto pair = common_neighbor_pair(g);
    if (!pair) throw parse_error("gadget: no non-adjacent pair with a common neighbor exists");
    a = pair->first;
    b = pair->second;
  }
  HochsterEngine engine(opt.hochster_caps());
  GadgetBundle bundle = build_gadgets(g, a, b);
  GadgetReport report = gadget_step_checks(bundle, opt.field_spec(), engine);
  if (opt.json) {
    std::cout << "{\"command\":\"gadget\",\"a\":" << a << ",\"b\":" << b
              << ",\"report\":" << report.to_json() << "}\n";
  } else {
    std::cout << "pair (" << a << "," << b << "): regs " << report.reg_gprime << " "
              << report.reg_gdoubleprime << " " << report.reg_gtripleprime << " " << report.reg_h
              << ", T1/T2 " << report.reg_t1 << "/" << report.reg_t2 << ", contraction "
              << (report.contraction_iso ? "ok" : "FAIL") << "\n";
  }
  bool ok = report.all_three && report.t_equal && report.contraction_iso;
  return ok ? kExitOk : kExitDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorial regularity of edge ideals and surface verification"};
  app.require_subcommand(1);

  Options opt;

  auto* reg = app.add_subcommand("reg", "Castelnuovo-Mumford regularity of R/I");
  add_common(reg, opt);
  reg->add_option("--format", opt.format, "graph6 | edges | ideal");

  auto* betti = app.add_subcommand("betti", "full graded Betti table of R/I");
  add_common(betti, opt);
  betti->add_option("--format", opt.format, "graph6 | edges | ideal");

  auto* homology = app.add_subcommand("homology", "reduced homology of a complex");
  add_common(homology, opt);
  homology->add_option("--format", opt.format, "graph6 | edges | ideal | complex");

  auto* surface = app.add_subcommand("surface", "closed-surface check of a pure 2-complex");
  add_common(surface, opt, false);
  surface->add_option("--format", opt.format, "complex");

  auto* find_surface = app.add_subcommand("find-surface", "search for a surface subcomplex");
  bool in_complement = false, orientable = false, exclude_tetra = false;
  add_common(find_surface, opt, false);
  find_surface->add_option("--format", opt.format, "graph6 | edges");
  find_surface->add_flag("--complement", in_complement, "search the complement's clique complex");
  find_surface->add_flag("--orientable", orientable, "require an orientable surface");
  find_surface->add_flag("--exclude-tetrahedra", exclude_tetra,
                         "ignore boundary-of-4-clique certificates");

  auto* verify = app.add_subcommand("verify", "per-graph theorem verdicts (graph6 lines)");
  std::string cert_dir;
  add_common(verify, opt, false);
  verify->add_option("--cert-dir", cert_dir, "write counterexample bundles here");
  verify->add_option("file", opt.input, "graph6 file (default stdin)");

  auto* corpus = app.add_subcommand("corpus", "aggregate verdicts over a graph6 stream");
  int max_n = Bits128::capacity;
  bool with_verdicts = false;
  add_common(corpus, opt, false);
  corpus->add_option("--max-n", max_n, "skip graphs with more vertices")->capture_default_str();
  corpus->add_flag("--verdicts", with_verdicts, "include per-graph verdicts in the report");
  corpus->add_option("--cert-dir", cert_dir, "write counterexample bundles here");
  corpus->add_option("file", opt.input, "graph6 file (default stdin)");

  auto* bounds = app.add_subcommand("bounds", "regularity interval without homology");
  add_common(bounds, opt, false);
  bounds->add_option("--format", opt.format, "graph6 | edges");

  auto* splitting = app.add_subcommand("splitting", "Betti splitting check of an x-partition");
  int split_var = 0;
  add_common(splitting, opt);
  splitting->add_option("--format", opt.format, "graph6 | edges | ideal");
  splitting->add_option("--var", split_var, "partition variable")->required();

  auto* gadget = app.add_subcommand("gadget", "re-enact the extension/deletion constructions");
  int pair_a = -1, pair_b = -1;
  add_common(gadget, opt);
  gadget->add_option("--format", opt.format, "graph6 | edges");
  gadget->add_option("--a", pair_a, "first vertex of the non-adjacent pair");
  gadget->add_option("--b", pair_b, "second vertex of the non-adjacent pair");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*reg) return cmd_reg(opt);
    if (*betti) return cmd_betti(opt);
    if (*homology) return cmd_homology(opt);
    if (*surface) return cmd_surface(opt);
    if (*find_surface) return cmd_find_surface(opt, in_complement, orientable, exclude_tetra);
    if (*verify) return cmd_verify(opt, cert_dir);
    if (*corpus) return cmd_corpus(opt, max_n, with_verdicts, cert_dir);
    if (*bounds) return cmd_bounds(opt);
    if (*splitting) return cmd_splitting(opt, split_var);
    if (*gadget) return cmd_gadget(opt, pair_a, pair_b);
  } catch (const budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << " (processed " << e.processed() << ")\n";
    return kExitBudget;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

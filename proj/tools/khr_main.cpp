// khr: command-line front end for the link homology engine.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "khr/acceptance.hpp"
#include "khr/fixtures.hpp"
#include "khr/homology.hpp"
#include "khr/json_io.hpp"
#include "khr/lasagna.hpp"
#include "khr/parallel.hpp"

namespace fs = std::filesystem;
using namespace khr;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitMismatch = 4;

struct DiagramSource {
  std::string pd, braid, cable, fixture_name;

  void add_to(CLI::App* app) {
    auto* g = app->add_option_group("diagram", "diagram source (exactly one)");
    g->add_option("--pd", pd, "PD file path or inline PD[...] text");
    g->add_option("--braid", braid, "braid word, e.g. 'BR[3; 1 -2 1 -2]'");
    g->add_option("--cable", cable, "blackboard cable of the framed unknot: f,n,m");
    g->add_option("--fixture", fixture_name, "named fixture (see 'khr diagram --list')");
  }

  bool given() const { return !pd.empty() || !braid.empty() || !cable.empty() || !fixture_name.empty(); }

  PlanarDiagram load() const {
    int n = !pd.empty() + !braid.empty() + !cable.empty() + !fixture_name.empty();
    if (n != 1) throw ValidationError("give exactly one of --pd, --braid, --cable, --fixture");
    if (!fixture_name.empty()) return fixture(fixture_name).diagram();
    if (!cable.empty()) return diagram_from_source("cable " + cable);
    if (!braid.empty()) return parse_braid(braid);
    return parse_diagram(read_text_or_inline(pd));
  }

  static std::string read_text_or_inline(const std::string& arg) {
    std::error_code ec;
    if (fs::is_regular_file(arg, ec)) {
      std::ifstream in(arg);
      std::stringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }
    return arg;
  }
};

std::string read_text_or_inline(const std::string& arg) { return DiagramSource::read_text_or_inline(arg); }

LatticeVector parse_vector(const std::string& text) {
  LatticeVector v;
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream is(s);
  long long x;
  while (is >> x) v.push_back(x);
  if (!is.eof()) throw ParseError("expected comma-separated integers, got '" + text + "'");
  return v;
}

void print_table(const std::map<Bidegree, std::size_t>& free, const std::string& title) {
  std::cout << title << "\n";
  if (free.empty()) {
    std::cout << "  (zero)\n";
    return;
  }
  std::set<int> qs, ts;
  for (const auto& [b, n] : free) {
    qs.insert(b.q);
    ts.insert(b.t);
  }
  std::cout << std::setw(6) << "q\\t";
  for (int t : ts) std::cout << std::setw(5) << t;
  std::cout << "\n";
  for (auto q = qs.rbegin(); q != qs.rend(); ++q) {
    std::cout << std::setw(6) << *q;
    for (int t : ts) {
      auto it = free.find({*q, t});
      std::cout << std::setw(5) << (it == free.end() ? std::string(".") : std::to_string(it->second));
    }
    std::cout << "\n";
  }
}

Bidegree to_grading(Bidegree fr, int rank, int w, Grading g) { return g == Grading::Fr ? fr : fr_to_std(fr, rank, w); }

// ---------------------------------------------------------------------------

struct HomOptions {
  DiagramSource src;
  int rank = 2;
  std::string coeff = "q";
  std::string sigma;
  std::string grading = "fr";
  bool json = false;
};

int run_hom(const HomOptions& o) {
  PlanarDiagram d = o.src.load();
  Grading g = parse_grading(o.grading);
  int w = writhe(d);
  if (!o.sigma.empty()) {
    DeformationMultiset s = DeformationMultiset::parse(o.sigma);
    FilteredHomology f = filtered_homology(deformed_complex(d, s));
    if (o.json) {
      std::cout << homology_json(s.total(), w, g, nullptr, &f);
      return 0;
    }
    std::cout << "deformed homology, Sigma = {" << s.str() << "}, grading " << to_string(g) << "\n";
    for (const auto& deg : f.degrees) {
      Bidegree tb = to_grading({0, deg.t}, s.total(), w, g);
      std::cout << "  t=" << tb.t << "  dim " << deg.dimension << "  jumps";
      for (const auto& [p, n] : deg.jumps) std::cout << " (" << to_grading({p, deg.t}, s.total(), w, g).q << "," << n << ")";
      std::cout << "\n";
    }
    return 0;
  }
  if (o.coeff != "z" && o.coeff != "q") throw ValidationError("--coeff must be z or q");
  auto c = cube(d, unknot_algebra(o.rank));
  BigradedHomology h = o.coeff == "z" ? integral_homology(c) : rational_homology(c);
  if (o.json) {
    std::cout << homology_json(o.rank, w, g, &h, nullptr);
    return 0;
  }
  print_table(h.free_in(g), "gl(" + std::to_string(o.rank) + ") homology over " + (o.coeff == "z" ? "Z" : "Q") +
                                ", grading " + to_string(g) + " (free ranks)");
  for (const auto& tor : h.torsion) {
    Bidegree b = torsion_bidegree(tor.q, tor.t, o.rank, w, g);
    std::cout << "  torsion at (" << b.q << "," << b.t << "):";
    for (const auto& ord : tor.orders) std::cout << " Z/" << ord;
    std::cout << "\n";
  }
  return 0;
}

struct QminOptions {
  DiagramSource src;
  std::string sigma = "0,1";
  int t = 0;
  std::string grading = "fr";
  bool json = false;
};

int run_qmin(const QminOptions& o) {
  PlanarDiagram d = o.src.load();
  Grading g = parse_grading(o.grading);
  DeformationMultiset s = DeformationMultiset::parse(o.sigma);
  int rank = s.total(), w = writhe(d);
  // --t is read in the chosen grading.
  int t_fr = g == Grading::Fr ? o.t : regrade_fr({0, o.t}, rank, w).t;
  FilteredHomology f = filtered_homology(deformed_complex(d, s));
  auto q = q_min(f, t_fr);
  std::optional<int> value;
  if (q) value = to_grading({*q, t_fr}, rank, w, g).q;
  if (o.json) {
    std::cout << "{\n  \"sigma\": \"" << s.str() << "\",\n  \"grading\": \"" << to_string(g) << "\",\n  \"t\": " << o.t
              << ",\n  \"qmin\": " << (value ? std::to_string(*value) : "null") << "\n}\n";
  } else {
    std::cout << (value ? std::to_string(*value) : "undefined (no nonzero class in this degree)") << "\n";
  }
  return 0;
}

struct DecomposeOptions {
  DiagramSource src;
  std::string sigma = "0,1";
  std::string grading = "fr";
  bool json = false;
};

int run_decompose(const DecomposeOptions& o) {
  PlanarDiagram d = o.src.load();
  Grading g = parse_grading(o.grading);
  DeformationMultiset s = DeformationMultiset::parse(o.sigma);
  DecompositionReport r = verify_decomposition(d, s);
  if (o.json) {
    std::cout << decomposition_json(r, writhe(d), g, s.total());
  } else {
    std::cout << std::setw(6) << "t" << std::setw(11) << "predicted" << std::setw(10) << "computed" << "\n";
    for (const auto& row : r.rows)
      std::cout << std::setw(6) << to_grading({0, row.t}, s.total(), writhe(d), g).t << std::setw(11) << row.predicted
                << std::setw(10) << row.computed << (row.match() ? "" : "  MISMATCH") << "\n";
    std::cout << (r.matched() ? "match" : "mismatch") << "\n";
  }
  return r.matched() ? 0 : kExitMismatch;
}

// Compares `hom --coeff z --json` output for each fixtures/*.pd against
// fixtures/expected/<name>.json.
int run_corpus(const fs::path& dir, bool quiet) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".pd") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  int failures = 0;
  for (const auto& p : files) {
    PlanarDiagram d = parse_diagram(read_text_or_inline(p.string()));
    auto h = integral_homology(cube(d, unknot_algebra(2)));
    std::string got = homology_json(2, writhe(d), Grading::Fr, &h, nullptr);
    fs::path expected = dir / "expected" / (p.stem().string() + ".json");
    std::string want = fs::exists(expected) ? read_text_or_inline(expected.string()) : std::string();
    bool ok = !want.empty() && want == got;
    if (!ok) ++failures;
    if (!quiet || !ok)
      std::cout << (ok ? "PASS" : "FAIL") << "  corpus " << p.stem().string() << (want.empty() ? " (no expected file)" : "")
                << "\n";
  }
  return failures;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Khovanov-Rozansky gl(N) homology, deformations and lasagna grading calculus"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (default: KHR_THREADS or hardware concurrency)");

  HomOptions hom;
  auto* hom_cmd = app.add_subcommand("hom", "bigraded homology of a diagram (or deformed, with --sigma)");
  hom.src.add_to(hom_cmd);
  hom_cmd->add_option("--n", hom.rank, "rank N (1 or 2 for knotted diagrams)");
  hom_cmd->add_option("--coeff", hom.coeff, "z (integral, with torsion) or q");
  hom_cmd->add_option("--sigma", hom.sigma, "deformation multiset, e.g. 0,1 or 0^2,1");
  hom_cmd->add_option("--grading", hom.grading, "fr or std");
  hom_cmd->add_flag("--json", hom.json);

  QminOptions qmin;
  auto* qmin_cmd = app.add_subcommand("qmin", "minimal filtration degree of a nonzero deformed class");
  qmin.src.add_to(qmin_cmd);
  qmin_cmd->add_option("--sigma", qmin.sigma, "deformation multiset (default 0,1)");
  qmin_cmd->add_option("--t", qmin.t, "t-degree")->required();
  qmin_cmd->add_option("--grading", qmin.grading, "fr or std");
  qmin_cmd->add_flag("--json", qmin.json);

  int b_rank = 2, b_qmin = 0, b_ss = 0;
  bool b_json = false;
  auto* bound_cmd = app.add_subcommand("bound", "Euler characteristic bound from q_min");
  bound_cmd->add_option("--n", b_rank, "rank N >= 2");
  bound_cmd->add_option("--qmin", b_qmin)->required();
  bound_cmd->add_option("--ss", b_ss, "self-intersection of the surface class")->required();
  bound_cmd->add_flag("--json", b_json);

  DecomposeOptions dec;
  auto* dec_cmd = app.add_subcommand("decompose", "predict and verify the coloring decomposition");
  dec.src.add_to(dec_cmd);
  dec_cmd->add_option("--sigma", dec.sigma, "deformation multiset with multiplicities 1 or 2 (default 0,1)");
  dec_cmd->add_option("--grading", dec.grading, "fr or std");
  dec_cmd->add_flag("--json", dec.json);

  std::string g_manifold, g_offset;
  bool g_json = false;
  auto* gl1_cmd = app.add_subcommand("gl1", "tridegree of the gl(1) skein class alpha0 + offset");
  gl1_cmd->add_option("--manifold", g_manifold, "JSON file or text: {\"form\": [[..]], \"alpha0\": [..]}")->required();
  gl1_cmd->add_option("--offset", g_offset, "comma-separated integers (default zero)");
  gl1_cmd->add_flag("--json", g_json);

  std::string s_manifold, s_surface;
  int s_rank = 2;
  bool s_json = false;
  auto* surf_cmd = app.add_subcommand("surface", "tridegree and homological diversity of a surface");
  surf_cmd->add_option("--manifold", s_manifold, "JSON file or text")->required();
  surf_cmd->add_option("--surface", s_surface, "JSON file or text: {\"components\": [...]}")->required();
  surf_cmd->add_option("--n", s_rank, "rank N");
  surf_cmd->add_flag("--json", s_json);

  int c_r = 1, c_m = 0;
  bool c_json = false;
  auto* cable_cmd = app.add_subcommand("cable", "invariants of the cable L^1_{m+r,m}");
  cable_cmd->add_option("--r", c_r, "r = n - m >= 1")->required();
  cable_cmd->add_option("--m", c_m, "m >= 0")->required();
  cable_cmd->add_flag("--json", c_json);

  int sp_k = 0, sp_depth = 10;
  bool sp_json = false;
  auto* sph_cmd = app.add_subcommand("spheres", "graded rank of the S^2 x D^2 skein model in class k");
  sph_cmd->add_option("--k", sp_k)->required();
  sph_cmd->add_option("--depth", sp_depth, "number of generators");
  sph_cmd->add_flag("--json", sp_json);

  bool v_json = false;
  std::string v_corpus;
  auto* verify_cmd = app.add_subcommand("verify-all", "run the acceptance suite (and optionally a fixture corpus)");
  verify_cmd->add_option("--corpus", v_corpus, "directory with *.pd files and expected/*.json");
  verify_cmd->add_flag("--json", v_json);

  DiagramSource diag;
  bool d_list = false;
  auto* diag_cmd = app.add_subcommand("diagram", "diagram summary, canonical PD text, fixture list");
  diag.add_to(diag_cmd);
  diag_cmd->add_flag("--list", d_list, "list named fixtures");

  int a_rank = 2;
  std::string a_sigma;
  auto* alg_cmd = app.add_subcommand("algebra", "structure constants of the unknot Frobenius algebra");
  alg_cmd->add_option("--n", a_rank);
  alg_cmd->add_option("--sigma", a_sigma);

  DiagramSource cx;
  int cx_rank = 2;
  std::string cx_sigma, cx_grading = "fr";
  auto* cx_cmd = app.add_subcommand("complex", "chain-group dimensions of the cube complex");
  cx.add_to(cx_cmd);
  cx_cmd->add_option("--n", cx_rank);
  cx_cmd->add_option("--sigma", cx_sigma);
  cx_cmd->add_option("--grading", cx_grading);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (threads > 0) set_thread_count(threads);

    if (*hom_cmd) return run_hom(hom);
    if (*qmin_cmd) return run_qmin(qmin);
    if (*dec_cmd) return run_decompose(dec);

    if (*bound_cmd) {
      int chi = genus_bound(b_rank, b_qmin, b_ss);
      if (b_json)
        std::cout << "{\n  \"N\": " << b_rank << ",\n  \"qmin\": " << b_qmin << ",\n  \"ss\": " << b_ss
                  << ",\n  \"chi_max\": " << chi << "\n}\n";
      else
        std::cout << "chi <= " << chi << "\n";
      return 0;
    }
    if (*gl1_cmd) {
      FourManifoldDatum w = parse_four_manifold_json(read_text_or_inline(g_manifold));
      LatticeVector v = g_offset.empty() ? LatticeVector(static_cast<std::size_t>(w.b2), 0) : parse_vector(g_offset);
      Tridegree t = gl1_skein_tridegree(w, v);
      if (g_json) {
        std::cout << tridegree_json(t);
      } else {
        std::cout << "alpha = (";
        for (std::size_t i = 0; i < t.homology_class.size(); ++i) std::cout << (i ? "," : "") << t.homology_class[i];
        std::cout << ")  q = " << t.q << "  t = " << t.t << "\n";
      }
      return 0;
    }
    if (*surf_cmd) {
      FourManifoldDatum w = parse_four_manifold_json(read_text_or_inline(s_manifold));
      SurfaceDatum s = parse_surface_json(read_text_or_inline(s_surface));
      Tridegree t = surface_tridegree(s_rank, w, s);
      DiversityResult dv = is_homologically_diverse(s);
      if (s_json) {
        std::cout << "{\n  \"tridegree\": " << tridegree_json(t) << ",\n  \"diversity\": " << diversity_json(dv) << "}\n";
      } else {
        std::cout << "chi = " << s.chi() << "  q = " << t.q << "  t = " << t.t << "\n";
        std::cout << (dv.diverse ? "homologically diverse" : "not homologically diverse; null-homologous closed components:");
        for (int i : dv.witness) std::cout << ' ' << i;
        std::cout << "\n";
      }
      return 0;
    }
    if (*cable_cmd) {
      CableInvariants c = cable_invariants(c_r, c_m);
      if (c_json) {
        std::cout << cable_json(c);
      } else {
        std::cout << "L^1_{" << c.m + c.r << "," << c.m << "}:  s = " << c.s << "\n"
                  << "  chi bound from s          " << c.chi_bound_s << "\n"
                  << "  chi from minimal genus    " << c.chi_km << "\n"
                  << "  q_min (conditional)       " << c.qmin_conditional << "\n"
                  << "  handle-decomposition bound " << c.handle_lower_bound << "\n";
      }
      return 0;
    }
    if (*sph_cmd) {
      auto model = s2xd2_model(sp_k, sp_depth);
      if (sp_json) {
        std::cout << spheres_json(sp_k, sp_depth, model);
      } else {
        for (const auto& [q, m] : model) std::cout << "q^" << q << "  x" << m << "\n";
      }
      return 0;
    }
    if (*verify_cmd) {
      auto results = acceptance::run_all();
      bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
      if (v_json) {
        std::cout << acceptance_json(results);
      } else {
        for (const auto& r : results) {
          std::cout << acceptance::summary_line(r) << "\n";
          if (!r.passed)
            for (const auto& line : r.details) std::cout << "        " << line << "\n";
        }
      }
      if (!v_corpus.empty()) ok = run_corpus(v_corpus, v_json) == 0 && ok;
      return ok ? 0 : kExitMismatch;
    }
    if (*diag_cmd) {
      if (d_list) {
        for (const auto& f : fixtures())
          std::cout << std::left << std::setw(16) << f.name << std::right << std::setw(3) << f.crossings << " crossings  "
                    << f.description << "\n";
        return 0;
      }
      std::cout << diagram_json(diag.load());
      return 0;
    }
    if (*alg_cmd) {
      if (a_sigma.empty()) {
        std::cout << algebra_json(unknot_algebra(a_rank));
      } else {
        DeformationMultiset s = DeformationMultiset::parse(a_sigma);
        std::cout << algebra_json(unknot_algebra(s.total(), s));
      }
      return 0;
    }
    if (*cx_cmd) {
      PlanarDiagram d = cx.load();
      auto c = cx_sigma.empty() ? cube(d, unknot_algebra(cx_rank)) : deformed_complex(d, DeformationMultiset::parse(cx_sigma));
      std::cout << complex_json(c, parse_grading(cx_grading));
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "strata/composition.hpp"
#include "strata/graph.hpp"
#include "strata/presentation.hpp"
#include "strata/simplify.hpp"
#include "strata/tracer.hpp"
#include "strata/word.hpp"

using nlohmann::json;
using namespace strata;

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

Composition comp_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("composition must be an array");
  std::vector<int> parts;
  for (const auto& p : j) parts.push_back(p.get<int>());
  return Composition(std::move(parts));
}

json comp_to_json(const Composition& w) { return json(w.parts()); }

json theta_to_json(const ThetaPoset& theta) {
  json comps = json::array();
  for (const Composition& w : theta.members()) comps.push_back(comp_to_json(w));
  return json{{"d", theta.d()},
              {"compositions", comps},
              {"mode", "verify-closed"}};
}

ThetaPoset theta_from_json(const json& j) {
  const int d = j.at("d").get<int>();
  std::vector<Composition> comps;
  for (const auto& c : j.at("compositions")) comps.push_back(comp_from_json(c));
  const std::string mode = j.value("mode", "closure");
  if (mode == "closure") return closure(comps, d);
  if (mode == "verify-closed") {
    ThetaPoset theta(d, CompositionSet(comps.begin(), comps.end()));
    if (!theta.closed()) {
      throw PreconditionError("pattern set is not closed (mode verify-closed)");
    }
    return theta;
  }
  throw std::invalid_argument("unknown mode: " + mode);
}

ThetaPoset preset_theta(const std::string& name, int d) {
  if (name == "extorsion") {
    std::vector<Composition> seeds;
    for (const auto& parts :
         std::vector<std::vector<int>>{{3, 1},
                                       {1, 3},
                                       {1, 3, 1, 1},
                                       {1, 1, 3, 1},
                                       {2, 2, 1, 1},
                                       {1, 2, 2, 1},
                                       {1, 1, 2, 2},
                                       {2, 1, 1, 2}}) {
      seeds.emplace_back(parts);
    }
    return closure(seeds, 6);
  }
  if (name == "omega-ge2") {
    return closure(enumerate_omega(d, NormFilter::ReducedGe, 2), d);
  }
  if (name == "omega-ge3") {
    return closure(enumerate_omega(d, NormFilter::ReducedGe, 3), d);
  }
  if (name == "single-3-only") {
    std::vector<Composition> seeds;
    for (const Composition& w : enumerate_omega(d, NormFilter::ReducedEq, 2)) {
      bool single3 = true;
      int threes = 0;
      for (int p : w.parts()) {
        if (p == 3) {
          ++threes;
        } else if (p != 1) {
          single3 = false;
        }
      }
      if (single3 && threes == 1) seeds.push_back(w);
    }
    return closure(seeds, d);
  }
  throw std::invalid_argument("unknown preset: " + name);
}

struct ThetaSource {
  std::string file;
  std::string preset;
  int d = 6;

  void add_flags(CLI::App* cmd) {
    auto* f = cmd->add_option("--theta", file, "pattern poset JSON file");
    auto* p = cmd->add_option("--preset", preset,
                              "built-in pattern poset: omega-ge2, omega-ge3, "
                              "single-3-only, extorsion");
    cmd->add_option("--d", d, "degree for the preset (default 6)");
    f->excludes(p);
  }

  ThetaPoset load() const {
    if (!preset.empty()) return preset_theta(preset, d);
    if (!file.empty()) return theta_from_json(read_json_file(file));
    throw std::invalid_argument("need --theta or --preset");
  }
};

json sym_to_json(const GammaSym& s) { return json{s.i, s.j, s.exp}; }

GammaSym sym_from_json(const json& j) {
  return {j.at(0).get<int>(), j.at(1).get<int>(), j.at(2).get<int>()};
}

json relator_to_json(const Relator& r) {
  json out = json::array();
  for (const GammaSym& s : r) out.push_back(sym_to_json(s));
  return out;
}

json presentation_to_json(const Presentation& p) {
  json gens = json::array();
  for (auto [i, j] : p.generators) gens.push_back(json{i, j});
  json rels = json::array();
  for (const Relator& r : p.relators) rels.push_back(relator_to_json(r));
  json prov = json::array();
  for (RelatorType t : p.provenance) {
    prov.push_back(t == RelatorType::Type3 ? "type3" : "type22");
  }
  return json{
      {"d", p.d}, {"generators", gens}, {"relators", rels}, {"provenance", prov}};
}

Presentation presentation_from_json(const json& j) {
  Presentation p;
  p.d = j.at("d").get<int>();
  for (const auto& g : j.at("generators")) {
    p.generators.emplace_back(g.at(0).get<int>(), g.at(1).get<int>());
  }
  for (const auto& r : j.at("relators")) {
    Relator rel;
    for (const auto& s : r) rel.push_back(sym_from_json(s));
    p.relators.push_back(std::move(rel));
  }
  if (j.contains("provenance")) {
    for (const auto& t : j.at("provenance")) {
      p.provenance.push_back(t.get<std::string>() == "type3"
                                 ? RelatorType::Type3
                                 : RelatorType::Type22);
    }
  }
  return p;
}

std::string presentation_to_text(const Presentation& p) {
  std::string out = "<";
  for (size_t k = 0; k < p.generators.size(); ++k) {
    if (k > 0) out += ' ';
    out += "gamma(" + std::to_string(p.generators[k].first) + "," +
           std::to_string(p.generators[k].second) + ")";
  }
  out += "> | <";
  for (size_t k = 0; k < p.relators.size(); ++k) {
    if (k > 0) out += "; ";
    for (size_t s = 0; s < p.relators[k].size(); ++s) {
      if (s > 0) out += ' ';
      const GammaSym& g = p.relators[k][s];
      out += "gamma(" + std::to_string(g.i) + "," + std::to_string(g.j) + ")";
      if (g.exp < 0) out += "^-1";
    }
  }
  out += ">";
  return out;
}

json simplified_to_json(const SimplifiedPresentation& s) {
  json gens = json::array();
  for (auto [i, j] : s.generators) gens.push_back(json{i, j});
  json rels = json::array();
  for (const Relator& r : s.relators) rels.push_back(relator_to_json(r));
  json log = json::array();
  for (const TietzeMove& m : s.log) {
    if (m.kind == TietzeMove::Kind::SetIdentity) {
      log.push_back(json{{"kind", "set_identity"},
                         {"gen", json{m.gen.first, m.gen.second}}});
    } else {
      log.push_back(json{{"kind", "identify"},
                         {"gen", json{m.gen.first, m.gen.second}},
                         {"target", json{m.target.first, m.target.second}},
                         {"sign", m.sign}});
    }
  }
  AbelianInvariants ab = abelianize(s);
  json torsion = json::array();
  for (long long t : ab.torsion) torsion.push_back(t);
  return json{{"generators", gens},
              {"relators", rels},
              {"free_rank", ab.free_rank},
              {"torsion", torsion},
              {"free_certified", certify_free(s).has_value()},
              {"log", log}};
}

CoefficientPath path_from_json(const json& j) {
  CoefficientPath path;
  path.d = j.at("d").get<int>();
  for (const auto& s : j.at("samples")) {
    path.samples.push_back(s.get<std::vector<double>>());
  }
  return path;
}

json path_to_json(const CoefficientPath& path) {
  json samples = json::array();
  for (const auto& s : path.samples) samples.push_back(s);
  return json{{"d", path.d}, {"samples", samples}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run(int argc, char** argv) {
  CLI::App app{"fundamental groups of spaces of real polynomials with "
               "forbidden root multiplicity patterns"};
  app.set_version_flag("--version", "strata-pi1 1.0.0");
  app.require_subcommand(1);

  // closure
  auto* closure_cmd =
      app.add_subcommand("closure", "close a pattern set under degeneration");
  std::string closure_file;
  closure_cmd->add_option("--theta", closure_file, "pattern poset JSON file")
      ->required();

  // enumerate
  auto* enum_cmd =
      app.add_subcommand("enumerate", "list the realizable patterns");
  int enum_d = 6;
  int reduced_eq = -1, reduced_ge = -1;
  enum_cmd->add_option("--d", enum_d, "degree")->required();
  auto* eq = enum_cmd->add_option("--reduced-eq", reduced_eq,
                                  "keep reduced norm == k");
  auto* ge = enum_cmd->add_option("--reduced-ge", reduced_ge,
                                  "keep reduced norm >= k");
  eq->excludes(ge);

  // graph
  auto* graph_cmd = app.add_subcommand("graph", "dual graph of cells and walls");
  int graph_d = 6;
  bool subdivided = false;
  std::string graph_format = "dot";
  graph_cmd->add_option("--d", graph_d, "degree")->required();
  graph_cmd->add_flag("--subdivided", subdivided,
                      "keep the wall vertices instead of contracting them");
  graph_cmd->add_option("--format", graph_format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));

  // presentation / simplify / abelianize / classify / stabilize / split
  ThetaSource pres_theta, simp_theta, abel_theta, class_theta, stab_theta,
      split_theta;
  auto* pres_cmd =
      app.add_subcommand("presentation", "fundamental group presentation");
  pres_theta.add_flags(pres_cmd);
  std::string pres_format = "json";
  pres_cmd->add_option("--format", pres_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* simp_cmd = app.add_subcommand("simplify", "Tietze simplification");
  simp_theta.add_flags(simp_cmd);
  std::string simp_pres_file;
  simp_cmd->add_option("--presentation", simp_pres_file,
                       "presentation JSON file (alternative to --theta)");

  auto* abel_cmd =
      app.add_subcommand("abelianize", "free rank and torsion of H1");
  abel_theta.add_flags(abel_cmd);
  std::string abel_pres_file;
  abel_cmd->add_option("--presentation", abel_pres_file,
                       "presentation JSON file (alternative to --theta)");

  auto* class_cmd =
      app.add_subcommand("classify", "freeness criteria classification");
  class_theta.add_flags(class_cmd);

  auto* stab_cmd =
      app.add_subcommand("stabilize", "push the poset to a larger degree");
  stab_theta.add_flags(stab_cmd);
  int d_target = 0;
  stab_cmd->add_option("--d-target", d_target, "target degree")->required();

  auto* split_cmd =
      app.add_subcommand("split", "free product splitting along a norm level");
  split_theta.add_flags(split_cmd);

  // trace / synthesize / locus
  auto* trace_cmd =
      app.add_subcommand("trace", "wall-crossing word of a coefficient loop");
  std::string trace_file;
  TraceOptions topts;
  trace_cmd->add_option("--path", trace_file, "coefficient path JSON file")
      ->required();
  trace_cmd->add_option("--tol", topts.tol, "relative root tolerance");
  trace_cmd->add_option("--param-tol", topts.param_tol,
                        "crossing localization tolerance");
  trace_cmd->add_flag("--raw", topts.raw, "emit the unreduced crossing word");

  auto* synth_cmd =
      app.add_subcommand("synthesize", "coefficient loop realizing a word");
  std::string synth_word;
  int synth_d = 6, spp = 16;
  synth_cmd->add_option("--word", synth_word, "word text, e.g. \"w(0,0)+ w(0,0)-\"")
      ->required();
  synth_cmd->add_option("--d", synth_d, "degree")->required();
  synth_cmd->add_option("--samples-per-letter", spp, "sampling density");

  auto* locus_cmd =
      app.add_subcommand("locus", "zero locus of a loop as psi,x CSV");
  std::string locus_file;
  int resolution = 256;
  locus_cmd->add_option("--path", locus_file, "coefficient path JSON file")
      ->required();
  locus_cmd->add_option("--resolution", resolution, "parameter sample count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*closure_cmd) {
    emit(theta_to_json(theta_from_json(read_json_file(closure_file))));
  } else if (*enum_cmd) {
    NormFilter f = NormFilter::All;
    int k = 0;
    if (reduced_eq >= 0) f = NormFilter::ReducedEq, k = reduced_eq;
    if (reduced_ge >= 0) f = NormFilter::ReducedGe, k = reduced_ge;
    json out = json::array();
    for (const Composition& w : enumerate_omega(enum_d, f, k)) {
      out.push_back(comp_to_json(w));
    }
    emit(out);
  } else if (*graph_cmd) {
    StrataGraph g = build_dual_graph(graph_d, subdivided);
    std::cout << (graph_format == "dot" ? to_dot(g) : to_json(g));
    if (graph_format == "json") std::cout << "\n";
  } else if (*pres_cmd) {
    Presentation p = presentation(pres_theta.load());
    if (pres_format == "text") {
      std::cout << presentation_to_text(p) << "\n";
    } else {
      emit(presentation_to_json(p));
    }
  } else if (*simp_cmd) {
    Presentation p = simp_pres_file.empty()
                         ? presentation(simp_theta.load())
                         : presentation_from_json(read_json_file(simp_pres_file));
    emit(simplified_to_json(simplify(p)));
  } else if (*abel_cmd) {
    Presentation p = abel_pres_file.empty()
                         ? presentation(abel_theta.load())
                         : presentation_from_json(read_json_file(abel_pres_file));
    AbelianInvariants ab = abelianize(p);
    json torsion = json::array();
    for (long long t : ab.torsion) torsion.push_back(t);
    emit(json{{"free_rank", ab.free_rank}, {"torsion", torsion}});
  } else if (*class_cmd) {
    static const std::map<FreenessClass, std::string> names{
        {FreenessClass::ShortcutGe3, "shortcut_ge3"},
        {FreenessClass::CaseI, "case_i"},
        {FreenessClass::CaseII, "case_ii"},
        {FreenessClass::Unclassified, "unclassified"}};
    emit(json{{"class", names.at(classify_freeness(class_theta.load()))}});
  } else if (*stab_cmd) {
    emit(theta_to_json(stabilize(stab_theta.load(), d_target)));
  } else if (*split_cmd) {
    auto split = free_product_split(split_theta.load());
    if (!split) {
      emit(json{{"found", false}});
    } else {
      emit(json{{"found", true},
                {"d_prime", split->d_prime},
                {"low", presentation_to_json(split->low)},
                {"high", presentation_to_json(split->high)}});
    }
  } else if (*trace_cmd) {
    Word w = trace(path_from_json(read_json_file(trace_file)), topts);
    std::cout << print_word(w) << "\n";
  } else if (*synth_cmd) {
    emit(path_to_json(synthesize(parse_word(synth_word), synth_d, spp)));
  } else if (*locus_cmd) {
    auto points =
        export_zero_locus(path_from_json(read_json_file(locus_file)), resolution);
    std::cout << "psi,x\n";
    for (const LocusPoint& p : points) {
      std::cout << p.psi << "," << p.x << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violation: " << e.what() << "\n";
    return 3;
  } catch (const ResolutionError& e) {
    std::cerr << "resolution failure: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

// staircase: command-line front end for the library and its verification suites.
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "staircase/alpha_grade.hpp"
#include "staircase/error.hpp"
#include "staircase/hilbert.hpp"
#include "staircase/pyramid.hpp"
#include "staircase/semi_invariant.hpp"
#include "staircase/standard_form.hpp"
#include "suites.hpp"

namespace {

using nlohmann::json;
using namespace stair;

enum Exit { ok = 0, violations = 1, usage = 2, internal = 3 };

json chain_json(const TypeChain& t) {
  return {{"r", t.r()}, {"ms", t.ms}, {"ds", t.ds}, {"kernel_c", t.kernel_c}, {"kernel_kappa", t.kernel_kappa}};
}

void emit(bool as_json, const json& j, const std::string& text) {
  if (as_json)
    std::cout << j.dump() << '\n';
  else
    std::cout << text;
}

std::string join(const std::vector<i64>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

int cmd_hf_enum(i64 d, bool as_json) {
  if (d < 0) throw domain_error("--colength must be >= 0");
  const auto fs = enumerate(d);
  json arr = json::array();
  std::string text;
  for (const auto& f : fs) {
    arr.push_back({{"diff", f.diff()}, {"g_star", g_star(f)}, {"regularity", f.regularity()}});
    text += f.str() + "  g*=" + std::to_string(g_star(f)) + "  reg=" + std::to_string(f.regularity()) + "\n";
  }
  emit(as_json, {{"colength", d}, {"functions", arr}}, text);
  return ok;
}

int cmd_hf_info(const std::string& text_phi, bool as_json) {
  const HilbertFunction phi = HilbertFunction::parse(text_phi);
  const i64 d = phi.colength();
  const TypeChain chain = type_of(phi);
  std::optional<i64> g;
  if (d >= 5) g = deformation_bound(d);
  json j{{"diff", phi.diff()},          {"colength", d},       {"alpha", phi.alpha()},
         {"regularity", phi.regularity()}, {"g_star", g_star(phi)}, {"g_d", g ? json(*g) : json(nullptr)},
         {"type", chain_json(chain)}};
  std::ostringstream os;
  os << "phi'=" << phi.str() << "\nd=" << d << "\nalpha=" << phi.alpha() << "\nreg=" << phi.regularity()
     << "\ng*=" << g_star(phi) << "\n";
  if (g) os << "g(d)=" << *g << "\n";
  os << "type: " << chain.str() << "\n";
  emit(as_json, j, os.str());
  return ok;
}

int cmd_pyramid_max(i64 c, i64 d, bool oracle, bool witness, bool as_json) {
  if (c < 1 || d < 1 || d > c) throw domain_error("pyramid max needs 1 <= colength <= frame");
  const NRDecomposition nr = nr_decomposition(d);
  const i64 closed = max_weight_closed_form(c, d);
  std::optional<OracleResult> best;
  if (oracle || witness) best = brute_force_max_weight(static_cast<int>(c), static_cast<int>(d));
  const i64 w = oracle ? best->weight : closed;
  if (oracle && best->weight != closed)
    throw internal_error("oracle weight " + std::to_string(best->weight) + " differs from closed form " +
                         std::to_string(closed));
  json j{{"c", c}, {"d", d}, {"case", to_string(nr.kind)}, {"n", nr.n}, {"r", nr.r}, {"weight", w},
         {"witness", nullptr}};
  std::string text = std::to_string(w) + "\n";
  if (witness) {
    const auto a = best->witness.a_vector();
    j["witness"] = a;
    text += "witness a=" + join(std::vector<i64>(a.begin(), a.end()), ",") + "\n";
  }
  emit(as_json, j, text);
  return ok;
}

int cmd_alphagrade(const std::string& path, std::optional<int> right_of, bool as_json) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const SemiInvariantSpace V = SemiInvariantSpace::from_json(buf.str());
  std::optional<DomainSplit> split;
  if (right_of) split.emplace(*right_of);
  const AlphaRange range = minmax_alpha_grade(V, split);
  json j{{"degree", V.degree()}, {"min", range.min}, {"max", range.max}};
  std::ostringstream os;
  os << "min=" << range.min << "\nmax=" << range.max << "\n";
  std::optional<GradedMonomialIdeal> zero;
  for (Direction dir : {Direction::zero, Direction::infinity}) {
    const char* key = dir == Direction::zero ? "zero" : "infinity";
    try {
      const auto L = limit_ideal(V, dir);
      j[key] = cycle_degree(L);
      os << key << "=" << cycle_degree(L) << "\n";
      if (dir == Direction::zero) zero = L;
    } catch (const degenerate_limit& e) {
      j[key] = nullptr;
      os << key << "=degenerate (" << e.what() << ")\n";
    }
  }
  if (zero && !split) {
    const bool bang = check_bang(V, HilbertFunction::of(*zero));
    j["bang"] = bang;
    os << "bang=" << (bang ? "true" : "false") << "\n";
  } else {
    j["bang"] = nullptr;
  }
  emit(as_json, j, os.str());
  return ok;
}

int cmd_genus(i64 d, i64 nu, bool as_json) {
  const i64 g = genus_nu(d, nu);
  emit(as_json, {{"d", d}, {"nu", nu}, {"genus", g}}, std::to_string(g) + "\n");
  return ok;
}

int cmd_borel_degrees(int e, bool as_json) {
  const auto deg = borel_family_degrees(e);
  const std::vector<i64> v(deg.begin(), deg.end());
  emit(as_json, {{"e", e}, {"degrees", v}}, join(v, " ") + "\n");
  return ok;
}

int cmd_verify(const std::string& suite, const cli::SuiteOptions& opt, bool as_json) {
  const auto t0 = std::chrono::steady_clock::now();
  const cli::VerificationReport rep = cli::run_suite(suite, opt);
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
  std::ostringstream os;
  os << "suite " << rep.suite << ": " << rep.cases_run << " cases, " << rep.violations.size() << " violations\n";
  for (const auto& v : rep.violations)
    os << "  " << v.params.dump() << " expected " << v.expected << " got " << v.got << "\n";
  emit(as_json, rep.to_json(), os.str());
  // timing stays off stdout so repeated runs are byte-identical
  std::cerr << "elapsed " << dt.count() << " s\n";
  return rep.violations.empty() ? ok : violations;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Staircase combinatorics of plane monomial ideals"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit JSON instead of text");

  auto* hf = app.add_subcommand("hf", "Hilbert functions");
  hf->require_subcommand(1);
  i64 colength = 0;
  auto* hf_enum = hf->add_subcommand("enum", "List every function of a colength");
  hf_enum->add_option("--colength", colength)->required();
  std::string phi_text;
  auto* hf_info = hf->add_subcommand("info", "Invariants of one function");
  hf_info->add_option("--phi", phi_text, "Difference function, e.g. \"0,0,3\"")->required();

  auto* pyr = app.add_subcommand("pyramid", "Pyramid weights");
  pyr->require_subcommand(1);
  i64 frame = 0, pcolength = 0;
  bool oracle = false, witness = false;
  auto* pmax = pyr->add_subcommand("max", "Maximal weight for a frame and colength");
  pmax->add_option("--frame", frame)->required();
  pmax->add_option("--colength", pcolength)->required();
  pmax->add_flag("--oracle", oracle, "Use exhaustive search (frame <= 9)");
  pmax->add_flag("--witness", witness, "Also print a maximal pyramid");

  auto* ag = app.add_subcommand("alphagrade", "Alpha-grade range of a semi-invariant space");
  std::string space_path;
  std::optional<int> right_of;
  ag->add_option("--space", space_path, "JSON file")->required();
  ag->add_option("--right-of", right_of, "Count only columns of degree above this threshold");

  auto* gen = app.add_subcommand("genus", "Genus of the degree-nu curve section");
  i64 gd = 0, nu = 0;
  gen->add_option("--d", gd)->required();
  gen->add_option("--nu", nu)->required();

  auto* ch = app.add_subcommand("borel-degrees", "Cycle degrees of the five monomial ideals over one Borel ideal");
  int e = 0;
  ch->add_option("--e", e)->required();

  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  cli::SuiteOptions opt;
  ver->add_option("--suite", suite)->required();
  ver->add_option("--max-colength", opt.max_colength);
  ver->add_option("--max-frame", opt.max_frame);
  ver->add_option("--max-c", opt.max_c);
  ver->add_option("--max-r", opt.max_r);
  ver->add_option("--window", opt.window);
  ver->add_option("--max-e", opt.max_e);
  ver->add_option("--name", opt.name, "Inequality name (ineq suite)");

  for (auto* s : {hf, hf_enum, hf_info, pyr, pmax, ag, gen, ch, ver}) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  }

  try {
    if (hf_enum->parsed()) return cmd_hf_enum(colength, as_json);
    if (hf_info->parsed()) return cmd_hf_info(phi_text, as_json);
    if (pmax->parsed()) return cmd_pyramid_max(frame, pcolength, oracle, witness, as_json);
    if (ag->parsed()) return cmd_alphagrade(space_path, right_of, as_json);
    if (gen->parsed()) return cmd_genus(gd, nu, as_json);
    if (ch->parsed()) return cmd_borel_degrees(e, as_json);
    if (ver->parsed()) return cmd_verify(suite, opt, as_json);
  } catch (const internal_error& ex) {
    std::cerr << "internal error: " << ex.what() << "\n";
    return internal;
  } catch (const stair::error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return usage;
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << "\n";
    return internal;
  }
  return usage;
}

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mutarc/diagram.hpp"
#include "mutarc/grid.hpp"
#include "mutarc/harness.hpp"
#include "mutarc/jones.hpp"
#include "mutarc/kauffman.hpp"
#include "mutarc/montesinos.hpp"

using namespace mutarc;
using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Globals {
  std::string format = "text";
  int threads = 1;
  int budget = SkeinConfig{}.max_crossings;

  bool json() const { return format == "json"; }
  SkeinConfig skein() const {
    SkeinConfig c;
    c.max_crossings = budget;
    c.threads = threads;
    return c;
  }
};

struct Input {
  std::string pd, montesinos, grid;
};

void add_input(CLI::App* cmd, Input& in) {
  auto* pd = cmd->add_option("--pd", in.pd, "PD code, e.g. \"X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)\"");
  auto* m = cmd->add_option("--montesinos", in.montesinos, "Montesinos spec, e.g. \"M(2/3,-2/3,2/3,1/2)\"");
  auto* g = cmd->add_option("--grid", in.grid, "grid as \"X: 2,3,4,5,1; O: 4,5,1,2,3\" or the full text form");
  pd->excludes(m)->excludes(g);
  m->excludes(g);
}

GridDiagram read_grid(std::string text) {
  // Accept the one-line form with ';' separating the rows.
  for (char& c : text)
    if (c == ';') c = '\n';
  if (text.rfind("grid", 0) != 0) {
    const auto x = text.find("X:");
    const auto comma_count = std::count(text.begin() + static_cast<long>(x), text.begin() + static_cast<long>(text.find("O:")), ',');
    text = "grid " + std::to_string(comma_count + 1) + "\n" + text;
  }
  return parse_grid(text);
}

Diagram read_input(const Input& in) {
  if (!in.pd.empty()) return parse_pd(in.pd);
  if (!in.montesinos.empty()) return build_diagram(parse_montesinos(in.montesinos));
  if (!in.grid.empty()) return grid_to_diagram(read_grid(in.grid));
  throw CLI::ValidationError("input", "one of --pd, --montesinos or --grid is required");
}

int emit(const Globals& g, const json& j, const std::string& text, int code = kPass) {
  if (g.json())
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kauffman and Jones polynomials, Montesinos knots and arc presentations"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", g.threads, "worker threads")->check(CLI::Range(1, 256));
  app.add_option("--budget", g.budget, "largest diagram the skein engine accepts")->check(CLI::PositiveNumber);

  // poly
  auto* poly = app.add_subcommand("poly", "polynomial invariants of a diagram");
  poly->require_subcommand(1);
  Input kin, jin;
  bool show_lambda = false;
  auto* kauff = poly->add_subcommand("kauffman", "Kauffman polynomial F (or the regular-isotopy invariant Lambda)");
  add_input(kauff, kin);
  kauff->add_flag("--lambda", show_lambda, "print Lambda instead of F");
  auto* jon = poly->add_subcommand("jones", "Jones polynomial");
  add_input(jon, jin);

  // montesinos
  auto* mont = app.add_subcommand("montesinos", "Montesinos knots");
  mont->require_subcommand(1);
  std::string build_spec;
  auto* build = mont->add_subcommand("build", "PD code of the standard diagram");
  build->add_option("spec", build_spec)->required();
  std::string c1, c2;
  auto* classify = mont->add_subcommand("classify", "decide whether two Montesinos knots are equal");
  classify->add_option("first", c1)->required();
  classify->add_option("second", c2)->required();
  std::string mut_spec;
  std::pair<int, int> swap{0, 1};
  auto* mutate = mont->add_subcommand("mutate", "exchange two rational tangles (a mutation)");
  mutate->add_option("spec", mut_spec)->required();
  mutate->add_option("--swap", swap, "tangle positions, 0-based")->required();

  // grid
  auto* grid = app.add_subcommand("grid", "arc presentations");
  grid->require_subcommand(1);
  int gk = 1, gn = 0, gv = 0;
  auto* tmpl = grid->add_subcommand("template", "grid diagram of a family member");
  tmpl->add_option("--theorem", gk)->required()->check(CLI::Range(1, 7));
  tmpl->add_option("--n", gn)->required()->check(CLI::NonNegativeNumber);
  tmpl->add_option("--variant", gv, "mutant index")->check(CLI::NonNegativeNumber);

  // verify
  int vk = 1, vmax = 2;
  std::string golden = "data";
  auto* verify = app.add_subcommand("verify", "check a theorem family against the engine and the golden data");
  verify->add_option("--theorem", vk)->required()->check(CLI::Range(1, 7));
  verify->add_option("--n-max", vmax)->check(CLI::NonNegativeNumber);
  verify->add_option("--golden", golden, "directory holding golden/thmK/");

  std::string tgolden = "data";
  auto* t1 = app.add_subcommand("table1", "arc index of the n = 0 knots");
  t1->add_option("--golden", tgolden, "directory holding golden/thmK/");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kUsage;
  }

  try {
    if (*kauff) {
      const Diagram d = read_input(kin);
      const BiLaurent p = show_lambda ? lambda(d, g.skein()) : kauffman_f(d, g.skein());
      return emit(g, {{show_lambda ? "lambda" : "F", to_json(p)}, {"text", to_string(p)}}, to_string(p) + "\n");
    }
    if (*jon) {
      const Diagram d = read_input(jin);
      const LaurentPoly v = jones(d, g.threads);
      return emit(g, {{"V", to_json(v)}, {"text", to_string(v)}}, to_string(v) + "\n");
    }
    if (*build) {
      const MontesinosSpec s = parse_montesinos(build_spec);
      const Diagram d = build_diagram(s);
      return emit(g, {{"spec", to_json(s)}, {"diagram", to_json(d)}}, to_string(d) + "\n");
    }
    if (*classify) {
      const bool eq = classify_equal(parse_montesinos(c1), parse_montesinos(c2));
      return emit(g, {{"equal", eq}}, std::string(eq ? "equal" : "distinct") + "\n");
    }
    if (*mutate) {
      const MontesinosSpec s = mutate_spec(parse_montesinos(mut_spec), swap.first, swap.second);
      return emit(g, to_json(s), to_string(s) + "\n");
    }
    if (*tmpl) {
      const GridDiagram t = family_template(gk, gv, gn);
      return emit(g, to_json(t), to_string(t));
    }
    if (*verify) {
      const GoldenCorpus corpus = ingest_golden(golden);
      VerifyOptions opt;
      opt.skein = g.skein();
      opt.threads = g.threads;
      const TheoremReport r = verify_theorem(vk, vmax, corpus, opt);
      return emit(g, to_json(r), to_text(r), r.pass() ? kPass : kFail);
    }
    if (*t1) {
      ingest_golden(tgolden);
      const auto rows = table1(g.skein());
      const bool ok = std::all_of(rows.begin(), rows.end(), [](const Table1Row& r) { return r.pass(); });
      return emit(g, to_json(rows), to_text(rows), ok ? kPass : kFail);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "mutarc: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "mutarc: " << e.what() << "\n";
    return kUsage;
  } catch (const GoldenError& e) {
    std::cerr << "mutarc: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetError& e) {
    std::cerr << "mutarc: " << e.what() << "\n";
    return kFail;
  } catch (const NotClassifiable& e) {
    std::cerr << "mutarc: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "mutarc: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "mutarc: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "mutarc: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

// Command-line surface for the genperm library: every subcommand prints a
// deterministic JSON payload to stdout (the egf subcommand prints CSV) and
// timing diagnostics to stderr.  Exit codes: 0 ok, 1 domain error, 2 usage.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "genperm/counting.hpp"
#include "genperm/faces.hpp"
#include "genperm/json_io.hpp"
#include "genperm/minkowski.hpp"
#include "genperm/numbers.hpp"
#include "genperm/oracle.hpp"
#include "genperm/series.hpp"

namespace {

using genperm::Json;
using genperm::Rat;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      items.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  items.push_back(current);
  return items;
}

std::vector<Rat> parse_rational_list(const std::string& text) {
  std::vector<Rat> values;
  for (const std::string& item : split_list(text)) {
    values.push_back(genperm::parse_rational(item));
  }
  return values;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  for (const std::string& item : split_list(text)) {
    size_t used = 0;
    const int value = std::stoi(item, &used);
    if (used != item.size()) {
      throw std::invalid_argument("bad integer list entry '" + item + "'");
    }
    values.push_back(value);
  }
  return values;
}

Json int_vector_json(const genperm::VertexVector& v) {
  Json j = Json::array();
  for (const auto& value : v) j.push_back(value.str());
  return j;
}

Json poly_json(const genperm::IntPolynomial& f) {
  Json j = Json::array();
  for (int d = 0; d <= f.degree(); ++d) j.push_back(f.coefficient(d).str());
  return j;
}

Json opp_json(const genperm::Opp& f) {
  auto one_based = [](const std::vector<int>& block) {
    Json j = Json::array();
    for (int i : block) j.push_back(i + 1);
    return j;
  };
  Json parts = Json::array();
  for (const auto& part : f.parts) parts.push_back(one_based(part));
  return Json{{"Z", one_based(f.zero_set)},
              {"parts", parts},
              {"dim", f.dim()},
              {"improper", f.improper()}};
}

Json read_collection(const std::string& input) {
  if (input.empty() || input == "-") {
    return Json::parse(std::cin);
  }
  std::ifstream in(input);
  if (!in) throw std::invalid_argument("cannot open input file " + input);
  return Json::parse(in);
}

genperm::FlagMethod method_from_name(const std::string& name) {
  if (name == "formula") return genperm::FlagMethod::kFormula;
  if (name == "enumerate") return genperm::FlagMethod::kEnumerate;
  if (name == "both") return genperm::FlagMethod::kBoth;
  throw std::invalid_argument("unknown flag method '" + name + "'");
}

struct Options {
  int n = 0;
  int k = 0;
  int ell = 1;
  int dx = 10;
  int ds = 6;
  int dy = 10;
  int dim = -1;
  bool count_only = false;
  bool strict = false;
  std::string chain;
  std::string vector_arg;
  std::string point;
  std::string method = "formula";
  std::string oracle_mode;
  std::string direction;
  std::string input;
};

int run_command(const std::string& name, const Options& opt) {
  Json payload;
  bool domain_failure = false;

  if (name == "vertices") {
    payload = Json::array();
    for (const auto& u : genperm::vertices(opt.n, opt.k)) {
      payload.push_back(int_vector_json(u));
    }
  } else if (name == "faces") {
    std::optional<int> dim_filter;
    if (opt.dim >= 0) dim_filter = opt.dim;
    const auto faces = genperm::enumerate_faces(opt.n, opt.k, dim_filter);
    if (opt.count_only) {
      if (dim_filter) {
        payload = Json{{"dim", *dim_filter},
                       {"count", std::to_string(faces.size())}};
      } else {
        std::vector<size_t> by_dim(opt.n, 0);
        for (const auto& f : faces) by_dim[f.dim()] += 1;
        Json counts = Json::array();
        for (int d = 0; d < opt.n; ++d) {
          counts.push_back(std::to_string(by_dim[d]));
        }
        payload = Json{{"counts", counts},
                       {"total", std::to_string(faces.size())}};
      }
    } else {
      payload = Json::array();
      for (const auto& f : faces) payload.push_back(opp_json(f));
    }
  } else if (name == "flags") {
    const auto chain = parse_int_list(opt.chain);
    const genperm::Int count =
        genperm::count_flags(opt.n, opt.k, chain, method_from_name(opt.method));
    payload = Json{{"n", opt.n},
                   {"k", opt.k},
                   {"chain", chain},
                   {"method", opt.method},
                   {"count", count.str()}};
  } else if (name == "fvector") {
    const genperm::IntPolynomial formula = genperm::f_polynomial(opt.n, opt.k);
    payload = Json{{"formula", poly_json(formula)}};
    if (opt.oracle_mode == "compare") {
      const genperm::IntPolynomial oracle = genperm::f_vector_oracle(
          genperm::SimplexFamily::uniform(opt.n, opt.k));
      payload["oracle"] = poly_json(oracle);
      payload["match"] = formula == oracle;
      if (!(formula == oracle)) domain_failure = true;
    } else if (!opt.oracle_mode.empty()) {
      throw std::invalid_argument("unknown --oracle mode '" + opt.oracle_mode +
                                  "'");
    }
  } else if (name == "flagpoly") {
    const auto poly = genperm::flag_polynomial(opt.n, opt.k, opt.ell);
    Json terms = Json::array();
    for (const auto& [exponents, coeff] : poly.terms) {
      terms.push_back(Json{{"exponents", exponents}, {"coeff", coeff.str()}});
    }
    payload = Json{{"n", opt.n}, {"k", opt.k}, {"ell", opt.ell},
                   {"terms", terms}};
  } else if (name == "egf") {
    const genperm::BiSeries series = genperm::xi_series(
        opt.k, opt.ell, genperm::SeriesCaps{opt.dx, opt.ds, opt.dy});
    genperm::write_series_csv(std::cout, series, opt.k, opt.ell);
    return 0;
  } else if (name == "extract") {
    const auto chain = parse_int_list(opt.chain);
    const genperm::BiSeries series = genperm::xi_series(
        opt.k, opt.ell, genperm::SeriesCaps{opt.dx, opt.ds, opt.dy});
    const genperm::Int count =
        genperm::extract_flag_count(series, opt.n, chain, opt.ell);
    payload = Json{{"k", opt.k},
                   {"ell", opt.ell},
                   {"n", opt.n},
                   {"chain", chain},
                   {"count", count.str()}};
  } else if (name == "decompose") {
    const auto v = parse_rational_list(opt.vector_arg);
    const genperm::Decomposition d = genperm::decompose(v);
    if (d.feasible) {
      Json y = Json::array();
      for (const auto& value : d.y) {
        y.push_back(genperm::rational_to_string(value));
      }
      payload = Json{{"feasible", true}, {"y", y}};
    } else {
      payload = Json{{"feasible", false},
                     {"witness", Json{{"order", d.witness.order},
                                      {"index", d.witness.index}}}};
      if (opt.strict) domain_failure = true;
    }
  } else if (name == "mobius") {
    const genperm::SubsetCollection input =
        genperm::collection_from_json(read_collection(opt.input));
    if (opt.direction == "y2z") {
      payload = genperm::to_json(genperm::zeta(input));
      payload["symmetric"] = genperm::is_symmetric(input);
    } else if (opt.direction == "z2y") {
      const genperm::MobiusResult result = genperm::mobius(input);
      payload = genperm::to_json(result.y);
      payload["all_nonneg"] = result.all_nonneg;
      payload["symmetric"] = genperm::is_symmetric(input);
    } else {
      throw std::invalid_argument("--direction must be y2z or z2y");
    }
  } else if (name == "rado") {
    const auto t = parse_rational_list(opt.point);
    const auto v = parse_rational_list(opt.vector_arg);
    const bool subsets = genperm::rado_membership_subsets(t, v);
    const bool prefix = genperm::rado_membership_prefix(t, v);
    if (subsets != prefix) {
      throw std::logic_error("rado: membership routes disagree");
    }
    payload = Json{{"member", subsets}, {"subsets", subsets},
                   {"prefix", prefix}};
  } else if (name == "oracle-fvector") {
    const auto fam = genperm::SimplexFamily::uniform(opt.n, opt.k);
    payload = Json{{"fvector", poly_json(genperm::f_vector_oracle(fam))}};
  } else if (name == "oracle-flags") {
    const auto fam = genperm::SimplexFamily::uniform(opt.n, opt.k);
    const auto chain = parse_int_list(opt.chain);
    payload = Json{{"n", opt.n},
                   {"k", opt.k},
                   {"chain", chain},
                   {"count", genperm::flag_count_oracle(fam, chain).str()}};
  } else {
    throw std::logic_error("unhandled subcommand " + name);
  }

  std::cout << payload.dump(2) << "\n";
  return domain_failure ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact face, flag and Minkowski calculus for sums of simplices"};
  app.require_subcommand(1);
  Options opt;

  auto add_nk = [&](CLI::App* sub) {
    sub->add_option("-n,--n", opt.n, "ambient coordinates")->required();
    sub->add_option("-k,--k", opt.k, "support size of each simplex")
        ->required();
  };

  auto* vertices = app.add_subcommand("vertices", "list all vertices");
  add_nk(vertices);

  auto* faces = app.add_subcommand("faces", "list or count faces");
  add_nk(faces);
  faces->add_option("--dim", opt.dim, "restrict to one dimension");
  faces->add_flag("--count", opt.count_only, "emit counts instead of faces");

  auto* flags = app.add_subcommand("flags", "count chains of faces");
  add_nk(flags);
  flags->add_option("--chain", opt.chain, "comma-separated dimensions")
      ->required();
  flags->add_option("--method", opt.method, "formula|enumerate|both");

  auto* fvector = app.add_subcommand("fvector", "f-vector by closed formula");
  add_nk(fvector);
  fvector->add_option("--oracle", opt.oracle_mode,
                      "'compare' cross-checks the brute-force oracle");

  auto* flagpoly =
      app.add_subcommand("flagpoly", "multivariate flag polynomial");
  add_nk(flagpoly);
  flagpoly->add_option("--ell", opt.ell, "number of chain entries")
      ->check(CLI::Range(1, 4));

  auto* egf =
      app.add_subcommand("egf", "flag generating series coefficients as CSV");
  egf->add_option("--k", opt.k, "support size")->required();
  egf->add_option("--ell", opt.ell, "number of chain entries")
      ->check(CLI::Range(1, 4));
  egf->add_option("--dx", opt.dx, "x-degree cap");
  egf->add_option("--ds", opt.ds, "s-degree cap");
  egf->add_option("--dy", opt.dy, "y-degree cap");

  auto* extract =
      app.add_subcommand("extract", "flag count from the generating series");
  extract->add_option("--k", opt.k, "support size")->required();
  extract->add_option("--ell", opt.ell, "number of chain entries");
  extract->add_option("--n", opt.n, "family member")->required();
  extract->add_option("--chain", opt.chain, "comma-separated dimensions")
      ->required();
  extract->add_option("--dx", opt.dx, "x-degree cap");
  extract->add_option("--ds", opt.ds, "s-degree cap");
  extract->add_option("--dy", opt.dy, "y-degree cap");

  auto* decompose = app.add_subcommand(
      "decompose", "express a weight vector in the Minkowski basis");
  decompose
      ->add_option("-v,--v", opt.vector_arg,
                   "comma-separated ascending weights")
      ->required();
  decompose->add_flag("--strict", opt.strict,
                      "exit 1 when the vector is infeasible");

  auto* mobius = app.add_subcommand(
      "mobius", "subset-sum transform of a weight collection");
  mobius->add_option("--direction", opt.direction, "y2z|z2y")->required();
  mobius->add_option("--input", opt.input, "JSON file, '-' for stdin");

  auto* rado = app.add_subcommand("rado", "membership in a weight polytope");
  rado->add_option("--point", opt.point, "comma-separated coordinates")
      ->required();
  rado->add_option("-v,--v", opt.vector_arg, "comma-separated weights")
      ->required();

  auto* oracle = app.add_subcommand("oracle", "brute-force reference answers");
  oracle->require_subcommand(1);
  auto* oracle_fvector = oracle->add_subcommand("fvector", "f-vector");
  add_nk(oracle_fvector);
  auto* oracle_flags = oracle->add_subcommand("flags", "chain count");
  add_nk(oracle_flags);
  oracle_flags->add_option("--chain", opt.chain, "comma-separated dimensions")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::string name = app.get_subcommands().front()->get_name();
  if (name == "oracle") {
    name = std::string("oracle-") +
           app.get_subcommands().front()->get_subcommands().front()->get_name();
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    const int status = run_command(name, opt);
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    std::cerr << "genperm: " << name << " finished in " << elapsed.count()
              << " ms\n";
    return status;
  } catch (const std::exception& e) {
    std::cerr << "genperm: error: " << e.what() << "\n";
    return 1;
  }
}

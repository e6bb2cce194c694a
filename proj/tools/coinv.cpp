// Command-line front end: presentations, dimensions, bases, operator actions,
// tableau counts and the verification suites.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "coinv/errors.hpp"
#include "coinv/glaction.hpp"
#include "coinv/io.hpp"
#include "coinv/quotient.hpp"
#include "coinv/shapes.hpp"
#include "coinv/tableaux.hpp"
#include "coinv/verify.hpp"

using namespace coinv;

namespace {

enum Exit { kOk = 0, kFailed = 1, kBadInput = 2, kInternal = 3, kWindow = 4 };

struct Config {
  std::string output = "text";
  std::string mu;
  std::string nu;
  int n = -1;
  std::string form = "e";
  int cap = -1;
  int degree = -1;
  std::string op;
  std::string elem;
  std::string window;
  std::string lambda;
  std::string tau;
  std::string kind = "column-strict";
  std::string suite;
  int r_max = -1;
  bool no_timing = false;
};

int n_max() {
  int limit = 8;
  if (const char* env = std::getenv("COINV_NMAX")) {
    try {
      limit = std::stoi(env);
    } catch (const std::exception&) {
      throw InvalidInput(std::string("COINV_NMAX='") + env + "' is not an integer");
    }
  }
  return std::min(limit, kMaxVars);
}

void check_size(int n) {
  if (n < 0) throw InvalidInput("n must be non-negative");
  if (n > n_max()) {
    throw InvalidInput("n=" + std::to_string(n) + " exceeds the limit " + std::to_string(n_max()) +
                       " (set COINV_NMAX; at most " + std::to_string(kMaxVars) + ")");
  }
}

// nu from --nu, or the regular composition of --n.
Composition resolve_nu(const Config& cfg) {
  Composition nu;
  if (!cfg.nu.empty()) {
    nu = parse_composition(cfg.nu);
    if (cfg.n >= 0 && cfg.n != nu.total()) {
      throw InvalidInput("--n " + std::to_string(cfg.n) + " does not match --nu " + nu.to_string());
    }
  } else if (cfg.n >= 0) {
    nu = Composition::regular(cfg.n);
  } else {
    throw InvalidInput("give --nu or --n");
  }
  check_size(nu.total());
  return nu;
}

std::optional<Composition> resolve_mu(const Config& cfg, int n) {
  if (cfg.mu.empty()) return std::nullopt;
  Composition mu = cfg.mu == "regular" ? Composition::regular(n) : parse_composition(cfg.mu);
  if (mu.total() != n) {
    throw InvalidInput("mu " + mu.to_string() + " and nu have different totals");
  }
  return mu;
}

bool json_out(const Config& cfg) { return cfg.output == "json"; }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json header(const std::optional<Composition>& mu, const Composition& nu) {
  Json j;
  if (mu) j["mu"] = to_json(*mu);
  j["nu"] = to_json(nu);
  return j;
}

Json element_json(const Polynomial& f) {
  return Json{{"degree", 2 * std::max(f.degree(), 0)}, {"terms", to_json(f)}, {"text", f.to_string()}};
}

int cmd_present(const Config& cfg) {
  Composition nu = resolve_nu(cfg);
  auto mu = resolve_mu(cfg, nu.total());
  std::vector<Polynomial> gens;
  std::string source;
  if (!mu || transpose(*mu).part(1) == nu.total()) {
    // regular mu: the Tanisaki ideal is the coinvariant ideal
    gens = coinvariant_generators(nu);
    source = "coinvariant";
  } else if (cfg.form == "h") {
    gens = tanisaki_generators_h(*mu, nu, cfg.cap >= 0 ? cfg.cap : default_generator_cap(*mu, nu));
    source = "h";
  } else {
    gens = tanisaki_generators_e(*mu, nu);
    source = "e";
  }
  if (json_out(cfg)) {
    Json j = header(mu, nu);
    j["form"] = source;
    Json list = Json::array();
    for (const Polynomial& g : gens) list.push_back(element_json(g));
    j["generators"] = std::move(list);
    emit(j);
  } else {
    for (const Polynomial& g : gens) std::cout << "[" << 2 * g.degree() << "] " << g.to_string() << "\n";
  }
  return kOk;
}

int cmd_dim(const Config& cfg) {
  Composition nu = resolve_nu(cfg);
  auto mu = resolve_mu(cfg, nu.total());
  long dim = algebra_for(mu, nu)->dim();
  long expected;
  std::string what;
  if (mu) {
    expected = count_column_strict(transpose(*mu), nu);
    what = "column-strict tableaux";
  } else {
    auto orbit = factorial(nu.total());
    for (int p : nu.parts()) orbit /= factorial(p);
    expected = static_cast<long>(orbit);
    what = "|S_n/S_nu|";
  }
  bool ok = dim == expected;
  if (json_out(cfg)) {
    Json j = header(mu, nu);
    j["dim"] = dim;
    j["cross_check"] = Json{{"kind", what}, {"value", expected}};
    j["ok"] = ok;
    emit(j);
  } else {
    std::cout << "dim " << dim << "\ncross-check (" << what << ") " << expected << "\n" << (ok ? "OK" : "MISMATCH") << "\n";
  }
  return ok ? kOk : kFailed;
}

int cmd_hilbert(const Config& cfg) {
  Composition nu = resolve_nu(cfg);
  auto mu = resolve_mu(cfg, nu.total());
  IntPolynomial h(algebra_for(mu, nu)->hilbert());
  if (json_out(cfg)) {
    Json j = header(mu, nu);
    j["hilbert"] = to_json(h);
    j["text"] = h.to_string();
    emit(j);
  } else {
    std::cout << Json(h.coeffs()).dump() << "\n" << h.to_string() << "\n";
  }
  return kOk;
}

int cmd_basis(const Config& cfg) {
  Composition nu = resolve_nu(cfg);
  auto mu = resolve_mu(cfg, nu.total());
  auto alg = algebra_for(mu, nu);
  if (cfg.degree >= 0 && cfg.degree % 2 != 0) throw InvalidInput("degrees are even (each x_j has degree 2)");
  auto basis = cfg.degree >= 0 ? alg->graded_basis(cfg.degree) : alg->basis();
  if (json_out(cfg)) {
    Json j = header(mu, nu);
    if (cfg.degree >= 0) j["degree"] = cfg.degree;
    Json list = Json::array();
    for (const QuotientElement& z : basis) list.push_back(element_json(z.rep()));
    j["basis"] = std::move(list);
    emit(j);
  } else {
    for (const QuotientElement& z : basis) std::cout << "[" << 2 * z.rep().degree() << "] " << z.to_string() << "\n";
  }
  return kOk;
}

Json read_json_arg(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw InvalidInput("cannot read " + arg.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("element is not valid JSON: ") + e.what());
  }
}

int cmd_act(const Config& cfg) {
  auto word = parse_word(cfg.op);
  std::optional<Json> elem;
  if (!cfg.elem.empty()) elem = read_json_arg(cfg.elem);
  bool family_input = elem && elem->is_object();

  int n;
  Composition nu;
  if (!cfg.nu.empty() || !family_input) {
    nu = resolve_nu(cfg);
    n = nu.total();
  } else {
    if (cfg.n < 0) throw InvalidInput("give --n with a family");
    n = cfg.n;
    check_size(n);
  }
  auto mu = resolve_mu(cfg, n);
  int lo, hi;
  if (!cfg.window.empty()) {
    std::tie(lo, hi) = parse_window(cfg.window);
  } else if (!cfg.nu.empty() || !family_input) {
    // start at the written offset, so "0,2" keeps index 1 in the window
    lo = composition_offset(cfg.nu);
    if (!nu.empty()) lo = std::min(lo, nu.lo());
    hi = std::max(nu.empty() ? lo : nu.hi() + 1, lo + n);
  } else {
    throw InvalidInput("give --window with a family");
  }

  WeightFamily wf;
  if (family_input) {
    wf = family_from_json(*elem, n, lo, hi, mu);
  } else {
    auto alg = algebra_for(mu, nu);
    QuotientElement z = alg->one();
    if (elem) {
      try {
        z = alg->normal_form(polynomial_from_json(*elem, n));
      } catch (const NotInvariant&) {
        throw InvalidInput("element is not invariant under S_nu");
      }
    }
    wf = WeightFamily::single(z, lo, hi);
  }
  WeightFamily out = apply_operator_family(word, wf);
  if (json_out(cfg)) {
    Json j = to_json(out);
    Json ops = Json::array();
    for (const Operator& o : word) ops.push_back(o.to_string());
    j["word"] = std::move(ops);
    emit(j);
  } else {
    if (out.is_zero()) std::cout << "0\n";
    for (const auto& [w, z] : out.components) std::cout << w.to_string() << ": " << z.to_string() << "\n";
  }
  return kOk;
}

int cmd_kostka(const Config& cfg) {
  Partition lam = parse_partition(cfg.lambda);
  Composition nu = parse_composition(cfg.nu);
  check_size(nu.total());
  long k = kostka(lam, nu);
  if (json_out(cfg)) {
    emit(Json{{"lambda", to_json(lam)}, {"nu", to_json(nu)}, {"kostka", k}});
  } else {
    std::cout << k << "\n";
  }
  return kOk;
}

int cmd_kf(const Config& cfg) {
  Partition tau = parse_partition(cfg.tau);
  Composition mu = parse_composition(cfg.mu);
  check_size(mu.total());
  IntPolynomial kf = kostka_foulkes(tau, mu);
  if (json_out(cfg)) {
    emit(Json{{"tau", to_json(tau)}, {"mu", to_json(mu)}, {"coefficients", to_json(kf)}, {"text", kf.to_string()}});
  } else {
    std::cout << Json(kf.coeffs()).dump() << "\n" << kf.to_string() << "\n";
  }
  return kOk;
}

int cmd_tableaux(const Config& cfg) {
  Partition lam = parse_partition(cfg.lambda);
  Composition nu = parse_composition(cfg.nu);
  check_size(nu.total());
  auto list = cfg.kind == "semistandard" ? enumerate_semistandard(lam, nu) : enumerate_column_strict(lam, nu);
  if (json_out(cfg)) {
    Json ts = Json::array();
    for (const Tableau& t : list) ts.push_back(to_json(t));
    emit(Json{{"lambda", to_json(lam)}, {"nu", to_json(nu)}, {"kind", cfg.kind}, {"count", list.size()},
              {"tableaux", std::move(ts)}});
  } else {
    std::cout << list.size() << " " << cfg.kind << " tableaux\n";
    for (const Tableau& t : list) std::cout << Json(t.rows).dump() << "\n";
  }
  return kOk;
}

int cmd_verify(const Config& cfg) {
  int n = cfg.n >= 0 ? cfg.n : 3;
  check_size(n);
  SuiteOptions opt = default_options(n);
  if (!cfg.window.empty()) std::tie(opt.lo, opt.hi) = parse_window(cfg.window);
  if (cfg.r_max >= 0) opt.r_max = cfg.r_max;
  Report rep = run_suite(cfg.suite, opt);
  if (json_out(cfg)) {
    emit(to_json(rep, !cfg.no_timing));
  } else {
    std::cout << report_text(rep, !cfg.no_timing);
  }
  return rep.ok() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial coinvariant algebras, Tanisaki quotients and the Chevalley operators acting on them"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--output", cfg.output, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto add_shape = [&](CLI::App* sub, bool with_mu) {
    sub->add_option("--nu", cfg.nu, "composition, e.g. 1,2,1 or 1,2,1@0");
    sub->add_option("--n", cfg.n, "size; nu defaults to (1,..,1)");
    if (with_mu) sub->add_option("--mu", cfg.mu, "composition, or 'regular'");
  };

  auto* present = app.add_subcommand("present", "generators of the defining ideal");
  add_shape(present, true);
  present->add_option("--form", cfg.form, "h or e")->check(CLI::IsMember({"h", "e"}));
  present->add_option("--cap", cfg.cap, "largest generator degree for the h form");

  auto* dim = app.add_subcommand("dim", "dimension, with a combinatorial cross-check");
  add_shape(dim, true);
  auto* hilbert = app.add_subcommand("hilbert", "graded dimensions (each x_j in degree 2)");
  add_shape(hilbert, true);
  auto* basis = app.add_subcommand("basis", "normal-form basis");
  add_shape(basis, true);
  basis->add_option("--degree", cfg.degree, "only this (even) degree");

  auto* act = app.add_subcommand("act", "apply a word in E_i, F_i, D_i");
  add_shape(act, true);
  act->add_option("--op", cfg.op, "word such as \"F_2 F_1 E_2\"; the rightmost acts first");
  act->add_option("--elem", cfg.elem, "JSON polynomial at nu, or {\"components\": [..]}; @file reads a file");
  act->add_option("--window", cfg.window, "index window lo:hi");

  auto* kost = app.add_subcommand("kostka", "Kostka number K_{lambda,nu}");
  kost->add_option("--lambda", cfg.lambda, "partition")->required();
  kost->add_option("--nu", cfg.nu, "composition")->required();

  auto* kf = app.add_subcommand("kf", "Kostka-Foulkes polynomial K_{tau,mu}(t)");
  kf->add_option("--tau", cfg.tau, "partition")->required();
  kf->add_option("--mu", cfg.mu, "composition")->required();

  auto* tab = app.add_subcommand("tableaux", "list tableaux of a shape and content");
  tab->add_option("--lambda", cfg.lambda, "partition")->required();
  tab->add_option("--nu", cfg.nu, "composition")->required();
  tab->add_option("--kind", cfg.kind, "column-strict or semistandard")
      ->check(CLI::IsMember({"column-strict", "semistandard"}));

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", cfg.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--n", cfg.n, "largest size swept (default 3)");
  verify->add_option("--window", cfg.window, "index window lo:hi (default 1:max(n,4))");
  verify->add_option("--r-max", cfg.r_max, "largest degree in the identity suite (default 2n)");
  verify->add_flag("--no-timing", cfg.no_timing, "leave out timings so output is reproducible byte for byte");

  // Options may be given before or after the subcommand name.
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*present) return cmd_present(cfg);
    if (*dim) return cmd_dim(cfg);
    if (*hilbert) return cmd_hilbert(cfg);
    if (*basis) return cmd_basis(cfg);
    if (*act) return cmd_act(cfg);
    if (*kost) return cmd_kostka(cfg);
    if (*kf) return cmd_kf(cfg);
    if (*tab) return cmd_tableaux(cfg);
    if (*verify) return cmd_verify(cfg);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const WindowOverflow& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kWindow;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kBadInput;
}

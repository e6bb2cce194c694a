#include "coinv/io.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <sstream>

#include "coinv/errors.hpp"

namespace coinv {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& raw, const std::string& what) {
  std::string s = trim(raw);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidInput("cannot read '" + raw + "' as an integer in " + what);
  }
  return v;
}

std::vector<int> parse_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  if (trim(text).empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int v = parse_int(item, what);
    if (v < 0) throw InvalidInput(what + " has a negative part");
    out.push_back(v);
  }
  if (!text.empty() && text.back() == ',') throw InvalidInput(what + " ends with a comma");
  return out;
}

Rational rational_from_json(const Json& num, const Json& den) {
  auto read = [](const Json& j) -> mpz_class {
    if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
    if (j.is_string()) {
      try {
        return mpz_class(j.get<std::string>());
      } catch (const std::invalid_argument&) {
      }
    }
    throw InvalidInput("coefficient " + j.dump() + " is not an integer");
  };
  mpz_class d = den.is_null() ? mpz_class(1) : read(den);
  if (d == 0) throw InvalidInput("zero denominator");
  Rational c(read(num), d);
  c.canonicalize();
  return c;
}

}  // namespace

Composition parse_composition(const std::string& text) {
  std::string parts = text;
  int lo = 1;
  if (auto at = text.find('@'); at != std::string::npos) {
    parts = text.substr(0, at);
    lo = parse_int(text.substr(at + 1), "composition offset");
  }
  return Composition(lo, parse_list(parts, "composition '" + text + "'"));
}

int composition_offset(const std::string& text) {
  auto at = text.find('@');
  return at == std::string::npos ? 1 : parse_int(text.substr(at + 1), "composition offset");
}

Partition parse_partition(const std::string& text) {
  auto parts = parse_list(text, "partition '" + text + "'");
  std::sort(parts.rbegin(), parts.rend());
  return Partition(parts);
}

std::pair<int, int> parse_window(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw InvalidInput("window '" + text + "' is not of the form lo:hi");
  int lo = parse_int(text.substr(0, colon), "window");
  int hi = parse_int(text.substr(colon + 1), "window");
  if (lo > hi) throw InvalidInput("window '" + text + "' is empty");
  return {lo, hi};
}

Json to_json(const Composition& c) { return Json{{"lo", c.lo()}, {"parts", c.parts()}}; }

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const Polynomial& f) {
  Json terms = Json::array();
  for (const Term& t : f.terms()) {
    terms.push_back(Json{{"exp", t.m.exponents(f.nvars())},
                         {"num", t.c.get_num().get_str()},
                         {"den", t.c.get_den().get_str()}});
  }
  return terms;
}

Json to_json(const IntPolynomial& f) { return Json(f.coeffs()); }

Json to_json(const Tableau& t) { return Json(t.rows); }

Json to_json(const WeightFamily& wf) {
  Json j{{"n", wf.n}, {"window", {wf.lo, wf.hi}}};
  if (wf.mu) j["mu"] = to_json(*wf.mu);
  Json comps = Json::array();
  for (const auto& [nu, z] : wf.components) {
    comps.push_back(Json{{"nu", to_json(nu)}, {"element", to_json(z.rep())}, {"text", z.to_string()}});
  }
  j["components"] = std::move(comps);
  return j;
}

Json to_json(const Report& r, bool timing) {
  Json checks = Json::array();
  for (const Check& c : r.checks) {
    Json cj{{"name", c.name()}, {"anchor", c.anchor()}, {"ok", c.ok()}, {"checks", c.checks()},
            {"failures", c.failures()}};
    if (timing) cj["seconds"] = c.seconds;
    if (!c.details().empty()) cj["details"] = c.details();
    checks.push_back(std::move(cj));
  }
  Json tables = Json::array();
  for (const Table& t : r.tables) tables.push_back(Json{{"title", t.title}, {"header", t.header}, {"rows", t.rows}});
  Json j{{"suite", r.suite}, {"ok", r.ok()}};
  if (timing) {
    double total = 0;
    for (const Check& c : r.checks) total += c.seconds;
    j["seconds"] = total;
  }
  j["checks"] = std::move(checks);
  if (!tables.empty()) j["tables"] = std::move(tables);
  return j;
}

Composition composition_from_json(const Json& j) {
  if (j.is_string()) return parse_composition(j.get<std::string>());
  if (!j.is_object() || !j.contains("parts")) throw InvalidInput("composition must be {\"lo\": .., \"parts\": [..]}");
  std::vector<int> parts;
  for (const Json& p : j.at("parts")) {
    if (!p.is_number_integer() || p.get<int>() < 0) throw InvalidInput("composition parts must be non-negative integers");
    parts.push_back(p.get<int>());
  }
  int lo = j.contains("lo") ? j.at("lo").get<int>() : 1;
  return Composition(lo, std::move(parts));
}

Polynomial polynomial_from_json(const Json& j, int n) {
  if (!j.is_array()) throw InvalidInput("polynomial must be a list of terms");
  std::vector<Term> terms;
  for (const Json& t : j) {
    if (!t.is_object() || !t.contains("exp") || !t.contains("num")) {
      throw InvalidInput("term must be {\"exp\": [..], \"num\": .., \"den\": ..}");
    }
    std::vector<int> exps;
    for (const Json& e : t.at("exp")) {
      if (!e.is_number_integer() || e.get<int>() < 0 || e.get<int>() > kMaxDegree) {
        throw InvalidInput("exponents must be integers in [0, " + std::to_string(kMaxDegree) + "]");
      }
      exps.push_back(e.get<int>());
    }
    if (static_cast<int>(exps.size()) != n) {
      throw InvalidInput("term has " + std::to_string(exps.size()) + " exponents, expected " + std::to_string(n));
    }
    terms.push_back(Term{Monomial::from_exponents(exps), rational_from_json(t.at("num"), t.value("den", Json()))});
  }
  return Polynomial(n, std::move(terms));
}

WeightFamily family_from_json(const Json& j, int n, int lo, int hi, const std::optional<Composition>& mu) {
  if (!j.is_object() || !j.contains("components")) throw InvalidInput("family must be {\"components\": [..]}");
  WeightFamily wf;
  wf.n = n;
  wf.lo = lo;
  wf.hi = hi;
  wf.mu = mu;
  for (const Json& c : j.at("components")) {
    Composition nu = composition_from_json(c.at("nu"));
    if (nu.total() != n) throw InvalidInput("weight " + nu.to_string() + " is not a composition of " + std::to_string(n));
    if (!nu.empty() && (nu.lo() < lo || nu.hi() > hi)) {
      throw InvalidInput("weight " + nu.to_string() + " lies outside the window");
    }
    auto alg = algebra_for(mu, nu);
    QuotientElement z;
    try {
      z = alg->normal_form(polynomial_from_json(c.at("element"), n));
    } catch (const NotInvariant&) {
      throw InvalidInput("element at " + nu.to_string() + " is not invariant under S_nu");
    }
    auto found = wf.components.find(nu);
    if (found != wf.components.end()) z = found->second + z;
    if (z.is_zero()) {
      wf.components.erase(nu);
    } else {
      wf.components.insert_or_assign(nu, z);
    }
  }
  return wf;
}

std::string report_text(const Report& r, bool timing) {
  std::ostringstream out;
  out << "suite " << r.suite << ": " << (r.ok() ? "PASS" : "FAIL") << "\n";
  for (const Check& c : r.checks) {
    out << (c.ok() ? "  ok    " : "  FAIL  ") << c.name() << " [" << c.anchor() << "] " << c.checks() << " checks";
    if (!c.ok()) out << ", " << c.failures() << " failed";
    if (timing) out << ", " << std::fixed << std::setprecision(3) << c.seconds << " s";
    out << "\n";
    for (const auto& d : c.details()) out << "        " << d << "\n";
  }
  for (const Table& t : r.tables) {
    out << "\n" << t.title << "\n";
    std::vector<std::size_t> width(t.header.size(), 0);
    for (std::size_t k = 0; k < t.header.size(); ++k) width[k] = t.header[k].size();
    for (const auto& row : t.rows) {
      for (std::size_t k = 0; k < row.size() && k < width.size(); ++k) width[k] = std::max(width[k], row[k].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
      out << " ";
      for (std::size_t k = 0; k < cells.size() && k < width.size(); ++k) {
        out << " " << std::left << std::setw(static_cast<int>(width[k])) << cells[k];
      }
      out << "\n";
    };
    line(t.header);
    for (const auto& row : t.rows) line(row);
  }
  return out.str();
}

}  // namespace coinv

#include "coinv/glaction.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <sstream>
#include <tuple>

#include "coinv/errors.hpp"
#include "coinv/symmetric.hpp"
#include "coinv/tableaux.hpp"

namespace coinv {

QuotientPresentation::Ptr algebra_for(const std::optional<Composition>& mu, const Composition& nu) {
  return mu ? QuotientPresentation::tanisaki(*mu, nu) : QuotientPresentation::coinvariant(nu);
}

namespace {

using SituationKey = std::pair<Composition, int>;

SituationKey key_of(const KeySituation& ks) { return {ks.nu, ks.i}; }

Polynomial x(int n, int j) { return Polynomial::variable(n, j); }

Polynomial e_of(const Composition& nu, int i, int r) { return e_block(nu, {i}, r); }
Polynomial h_of(const Composition& nu, int i, int r) { return h_block(nu, {i}, r); }

Rational sign(int e) { return e % 2 ? Rational(-1) : Rational(1); }

// eps_{nu,nu'} times the product that turns it into the numerator for F (or E).
const Polynomial& kernel(const KeySituation& ks, OpKind kind) {
  static std::mutex mu;
  static std::map<std::pair<SituationKey, int>, Polynomial> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(key_of(ks), static_cast<int>(kind));
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  int n = ks.nu.total();
  Polynomial p = eps_pair(ks.nu, ks.nu_prime);
  if (kind == OpKind::F) {
    for (int j = 1; j <= ks.a; ++j) p = p * (x(n, ks.k - j) - x(n, ks.k));
  } else {
    for (int j = 1; j <= ks.b; ++j) p = p * (x(n, ks.k) - x(n, ks.k + j));
  }
  return cache.emplace(key, std::move(p)).first->second;
}

void check_source(const QuotientElement& z, const Composition& nu, const char* what) {
  if (!z.presentation_ptr()) throw InvalidInput(std::string(what) + ": element has no algebra");
  if (z.presentation().nu() != nu) {
    throw InvalidInput(std::string(what) + ": element lives at weight " + z.presentation().nu().to_string() +
                       ", expected " + nu.to_string());
  }
}

// Per-degree linear system expressing the pair algebra in degree d over the
// power basis with coefficients in C_nu or C_nu'.
struct System {
  std::vector<std::pair<int, QuotientElement>> unknowns;  // (power of x_k, basis element)
  Matrix inverse;
};

const System& system_for(const KeySituation& ks, Side side, int d) {
  using Key = std::tuple<Composition, int, int, int>;
  static std::mutex mu;
  static std::map<Key, std::unique_ptr<System>> cache;
  Key key{ks.nu, ks.i, static_cast<int>(side), d};
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
  }
  auto pair = pair_algebra(ks);
  auto sub = QuotientPresentation::coinvariant(side == Side::nu ? ks.nu : ks.nu_prime);
  int top = side == Side::nu ? ks.a : ks.b;
  int n = ks.nu.total();
  auto sys = std::make_unique<System>();
  for (int r = 0; r <= top && 2 * r <= d; ++r) {
    for (const QuotientElement& b : sub->graded_basis(d - 2 * r)) sys->unknowns.emplace_back(r, b);
  }
  auto rows = static_cast<int>(pair->dim_in_degree(d));
  auto cols = static_cast<int>(sys->unknowns.size());
  if (rows != cols) {
    throw NoSolution("power basis does not match the pair algebra in degree " + std::to_string(d) + " (" +
                     std::to_string(rows) + " vs " + std::to_string(cols) + ")");
  }
  Matrix m(rows, cols);
  for (int c = 0; c < cols; ++c) {
    const auto& [r, b] = sys->unknowns[static_cast<std::size_t>(c)];
    QuotientElement img = pair->normal_form(b.rep() * pow(x(n, ks.k), r));
    m.set_column(c, pair->graded_coordinates(img, d));
  }
  sys->inverse = m.inverse();
  std::lock_guard<std::mutex> lock(mu);
  return *cache.emplace(key, std::move(sys)).first->second;
}

}  // namespace

// ---------------------------------------------------------------- the pair algebra

QuotientPresentation::Ptr pair_algebra(const KeySituation& ks) { return QuotientPresentation::coinvariant(ks.rho); }

QuotientElement to_pair(const KeySituation& ks, const QuotientElement& z) { return pair_algebra(ks)->normal_form(z.rep()); }

QuotientElement to_pair(const KeySituation& ks, const Polynomial& f) { return pair_algebra(ks)->normal_form(f); }

QuotientElement xk_power(const KeySituation& ks, int r) {
  return pair_algebra(ks)->normal_form(pow(x(ks.nu.total(), ks.k), r));
}

std::vector<QuotientElement> decompose_over(const KeySituation& ks, const QuotientElement& f, Side side) {
  auto pair = pair_algebra(ks);
  if (!f.presentation_ptr() || !pair->same_algebra(f.presentation())) {
    throw InvalidInput("decompose_over expects an element of the pair algebra");
  }
  auto sub = QuotientPresentation::coinvariant(side == Side::nu ? ks.nu : ks.nu_prime);
  int top = side == Side::nu ? ks.a : ks.b;
  int n = ks.nu.total();
  std::vector<Polynomial> coeffs(static_cast<std::size_t>(top + 1), Polynomial(n));
  for (int e : f.rep().degrees()) {
    const System& sys = system_for(ks, side, 2 * e);
    std::vector<Rational> sol = sys.inverse.apply(pair->graded_coordinates(f, 2 * e));
    for (std::size_t c = 0; c < sol.size(); ++c) {
      if (sol[c] == 0) continue;
      const auto& [r, b] = sys.unknowns[c];
      coeffs[static_cast<std::size_t>(r)] += b.rep() * sol[c];
    }
  }
  std::vector<QuotientElement> out;
  for (const Polynomial& p : coeffs) out.push_back(sub->normal_form(p));
  return out;
}

std::vector<QuotientElement> decompose_over(const KeySituation& ks, const Polynomial& f, Side side) {
  QuotientElement z;
  try {
    z = to_pair(ks, f);
  } catch (const NotInvariant& e) {
    throw NoSolution(std::string("no decomposition over the power basis: ") + e.what());
  }
  return decompose_over(ks, z, side);
}

QuotientElement recompose(const KeySituation& ks, const std::vector<QuotientElement>& coeffs) {
  auto pair = pair_algebra(ks);
  int n = ks.nu.total();
  Polynomial sum(n);
  for (std::size_t r = 0; r < coeffs.size(); ++r) sum += coeffs[r].rep() * pow(x(n, ks.k), static_cast<int>(r));
  return pair->normal_form(sum);
}

// ---------------------------------------------------------------- operators

Polynomial apply_F_poly(const KeySituation& ks, const Polynomial& f) {
  Polynomial g = antisymmetrize(kernel(ks, OpKind::F) * f, ks.nu_prime);
  return exact_divide(g, eps_nu(ks.nu_prime));
}

Polynomial apply_E_poly(const KeySituation& ks, const Polynomial& f) {
  Polynomial g = antisymmetrize(kernel(ks, OpKind::E) * f, ks.nu);
  return exact_divide(g, eps_nu(ks.nu));
}

QuotientElement apply_F(const KeySituation& ks, const QuotientElement& z) {
  check_source(z, ks.nu, "F");
  return algebra_for(z.presentation().mu(), ks.nu_prime)->normal_form(apply_F_poly(ks, z.rep()));
}

QuotientElement apply_E(const KeySituation& ks, const QuotientElement& z) {
  check_source(z, ks.nu_prime, "E");
  return algebra_for(z.presentation().mu(), ks.nu)->normal_form(apply_E_poly(ks, z.rep()));
}

QuotientElement apply_F_oracle(const KeySituation& ks, const QuotientElement& z) {
  check_source(z, ks.nu, "F");
  auto target = QuotientPresentation::coinvariant(ks.nu_prime);
  int n = ks.nu.total();
  auto parts = decompose_over(ks, to_pair(ks, z), Side::nu_prime);
  Polynomial sum(n);
  for (int r = 0; r <= ks.b; ++r) {
    const Polynomial& zr = parts[static_cast<std::size_t>(r)].rep();
    if (zr.is_zero()) continue;
    Polynomial image(n);
    for (int s = 0; s <= ks.a; ++s) {
      image += sign(s) * (e_of(ks.nu_prime, ks.i, s) * h_of(ks.nu_prime, ks.i + 1, r - s + ks.a - ks.b));
    }
    sum += sign(ks.a) * (zr * image);
  }
  return target->normal_form(sum);
}

QuotientElement apply_E_oracle(const KeySituation& ks, const QuotientElement& z) {
  check_source(z, ks.nu_prime, "E");
  auto target = QuotientPresentation::coinvariant(ks.nu);
  int n = ks.nu.total();
  auto parts = decompose_over(ks, to_pair(ks, z), Side::nu);
  Polynomial sum(n);
  for (int r = 0; r <= ks.a; ++r) {
    const Polynomial& zr = parts[static_cast<std::size_t>(r)].rep();
    if (zr.is_zero()) continue;
    Polynomial image(n);
    for (int s = 0; s <= ks.b; ++s) {
      image += sign(s) * (e_of(ks.nu, ks.i + 1, s) * h_of(ks.nu, ks.i, r - s + ks.b - ks.a));
    }
    sum += sign(ks.a) * (zr * image);
  }
  return target->normal_form(sum);
}

QuotientElement push_p(const KeySituation& ks, const QuotientElement& f) {
  auto target = QuotientPresentation::coinvariant(ks.nu);
  auto parts = decompose_over(ks, f, Side::nu);
  Polynomial sum(ks.nu.total());
  for (int r = 0; r <= ks.a; ++r) {
    sum += sign(ks.a) * (parts[static_cast<std::size_t>(r)].rep() * h_of(ks.nu, ks.i, r - ks.a));
  }
  return target->normal_form(sum);
}

QuotientElement push_p_prime(const KeySituation& ks, const QuotientElement& f) {
  auto target = QuotientPresentation::coinvariant(ks.nu_prime);
  auto parts = decompose_over(ks, f, Side::nu_prime);
  Polynomial sum(ks.nu.total());
  for (int r = 0; r <= ks.b; ++r) {
    sum += parts[static_cast<std::size_t>(r)].rep() * h_of(ks.nu_prime, ks.i + 1, r - ks.b);
  }
  return target->normal_form(sum);
}

QuotientElement push_p_antisym(const KeySituation& ks, const Polynomial& f) {
  Polynomial g = antisymmetrize(eps_pair(ks.nu, ks.nu_prime) * f, ks.nu);
  return QuotientPresentation::coinvariant(ks.nu)->normal_form(exact_divide(g, eps_nu(ks.nu)));
}

QuotientElement push_p_prime_antisym(const KeySituation& ks, const Polynomial& f) {
  Polynomial g = antisymmetrize(eps_pair(ks.nu, ks.nu_prime) * f, ks.nu_prime);
  return QuotientPresentation::coinvariant(ks.nu_prime)->normal_form(exact_divide(g, eps_nu(ks.nu_prime)));
}

QuotientElement apply_D(int i, const Composition& nu, const QuotientElement& z) { return Rational(nu[i]) * z; }

// ---------------------------------------------------------------- families

std::string Operator::to_string() const {
  const char* name = kind == OpKind::D ? "D" : kind == OpKind::E ? "E" : "F";
  return std::string(name) + "_" + std::to_string(i);
}

std::vector<Operator> parse_word(const std::string& text) {
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  std::vector<Operator> word;
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2) throw InvalidInput("bad operator '" + tok + "'");
    Operator op{};
    switch (tok[0]) {
      case 'D': op.kind = OpKind::D; break;
      case 'E': op.kind = OpKind::E; break;
      case 'F': op.kind = OpKind::F; break;
      default: throw InvalidInput("bad operator '" + tok + "': expected D_i, E_i or F_i");
    }
    std::size_t pos = tok[1] == '_' ? 2 : 1;
    try {
      std::size_t used = 0;
      op.i = std::stoi(tok.substr(pos), &used);
      if (pos + used != tok.size()) throw InvalidInput("trailing characters");
    } catch (const std::exception&) {
      throw InvalidInput("bad operator index in '" + tok + "'");
    }
    word.push_back(op);
  }
  return word;
}

WeightFamily WeightFamily::single(const QuotientElement& z, int lo, int hi) {
  const Composition& nu = z.presentation().nu();
  if (!nu.empty() && (nu.lo() < lo || nu.hi() > hi)) {
    throw InvalidInput("weight " + nu.to_string() + " is not supported in the window [" + std::to_string(lo) + "," +
                       std::to_string(hi) + "]");
  }
  WeightFamily wf;
  wf.n = nu.total();
  wf.lo = lo;
  wf.hi = hi;
  wf.mu = z.presentation().mu();
  if (!z.is_zero()) wf.components.emplace(nu, z);
  return wf;
}

bool WeightFamily::is_zero() const { return components.empty(); }

namespace {

void check_window(const Operator& op, int lo, int hi) {
  bool inside = op.kind == OpKind::D ? (op.i >= lo && op.i <= hi) : (op.i >= lo && op.i + 1 <= hi);
  if (!inside) {
    throw WindowOverflow(op.to_string() + " needs indices outside the window [" + std::to_string(lo) + "," +
                         std::to_string(hi) + "]");
  }
}

// The weight an operator moves `source` to; nullopt when the operator is zero there.
std::optional<Composition> moved(const Operator& op, const Composition& source) {
  switch (op.kind) {
    case OpKind::D: return source;
    case OpKind::F:
      if (source[op.i] == 0) return std::nullopt;
      return source.adjusted(op.i, -1).adjusted(op.i + 1, 1);
    case OpKind::E:
      if (source[op.i + 1] == 0) return std::nullopt;
      return source.adjusted(op.i + 1, -1).adjusted(op.i, 1);
  }
  return std::nullopt;
}

QuotientElement apply_one(const Operator& op, const QuotientElement& z, const Composition& source,
                          const Composition& target) {
  switch (op.kind) {
    case OpKind::D: return apply_D(op.i, source, z);
    case OpKind::F: return apply_F(KeySituation::at(source, op.i), z);
    case OpKind::E: return apply_E(KeySituation::at(target, op.i), z);
  }
  return z;
}

}  // namespace

WeightFamily apply_operator_family(const std::vector<Operator>& word, const WeightFamily& wf) {
  WeightFamily cur = wf;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    check_window(*it, wf.lo, wf.hi);
    WeightFamily next = cur;
    next.components.clear();
    for (const auto& [nu, z] : cur.components) {
      auto target = moved(*it, nu);
      if (!target) continue;
      QuotientElement img = apply_one(*it, z, nu, *target);
      if (img.is_zero()) continue;
      auto found = next.components.find(*target);
      if (found == next.components.end()) {
        next.components.emplace(*target, img);
      } else {
        found->second = found->second + img;
        if (found->second.is_zero()) next.components.erase(found);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

namespace {

using MatrixKey = std::tuple<int, int, Composition, std::optional<Composition>, bool>;

std::optional<Matrix> cached_matrix(const Operator& op, const Composition& source, const std::optional<Composition>& mu,
                                    Composition& target, bool oracle) {
  auto t = moved(op, source);
  if (!t) return std::nullopt;
  target = *t;
  static std::mutex m;
  static std::map<MatrixKey, Matrix> cache;
  MatrixKey key{static_cast<int>(op.kind), op.i, source, mu, oracle};
  {
    std::lock_guard<std::mutex> lock(m);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto src = algebra_for(mu, source);
  auto dst = algebra_for(mu, target);
  auto basis = src->basis();
  Matrix mat(static_cast<int>(dst->dim()), static_cast<int>(basis.size()));
  for (std::size_t c = 0; c < basis.size(); ++c) {
    QuotientElement img;
    if (!oracle) {
      img = apply_one(op, basis[c], source, target);
    } else if (op.kind == OpKind::F) {
      img = apply_F_oracle(KeySituation::at(source, op.i), basis[c]);
    } else if (op.kind == OpKind::E) {
      img = apply_E_oracle(KeySituation::at(target, op.i), basis[c]);
    } else {
      img = apply_D(op.i, source, basis[c]);
    }
    mat.set_column(static_cast<int>(c), dst->coordinates(img));
  }
  std::lock_guard<std::mutex> lock(m);
  return cache.emplace(key, std::move(mat)).first->second;
}

}  // namespace

std::optional<Matrix> operator_matrix(const Operator& op, const Composition& source,
                                      const std::optional<Composition>& mu, Composition& target) {
  return cached_matrix(op, source, mu, target, false);
}

std::optional<Matrix> oracle_matrix(const Operator& op, const Composition& source, Composition& target) {
  return cached_matrix(op, source, std::nullopt, target, true);
}

// ---------------------------------------------------------------- reports

std::vector<KeySituation> key_situations(int n, int lo, int hi) {
  std::vector<KeySituation> out;
  for (const Composition& nu : compositions_of(n, lo, hi)) {
    for (int i = lo; i + 1 <= hi; ++i) {
      if (nu[i] > 0) out.push_back(KeySituation::at(nu, i));
    }
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string describe(const KeySituation& ks) {
  return "nu=" + ks.nu.to_string() + " i=" + std::to_string(ks.i);
}

struct WordTerm {
  Rational c;
  std::vector<Operator> word;  // rightmost acts first
};

// Matrix of a word on the weight space at `source`; nullopt when zero.
std::optional<Matrix> word_matrix(const std::vector<Operator>& word, const Composition& source,
                                  const std::optional<Composition>& mu, Composition& target) {
  Composition cur = source;
  std::optional<Matrix> acc;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    Composition next;
    auto m = operator_matrix(*it, cur, mu, next);
    if (!m) return std::nullopt;
    acc = acc ? (*m) * (*acc) : *m;
    cur = next;
  }
  target = cur;
  if (!acc) acc = Matrix::identity(static_cast<int>(algebra_for(mu, source)->dim()));
  return acc;
}

// Checks that sum c * word vanishes on the weight space at `source`.
void check_relation(Check& check, const std::string& label, const std::vector<WordTerm>& terms,
                    const Composition& source, const std::optional<Composition>& mu) {
  std::optional<Matrix> sum;
  std::optional<Composition> where;
  for (const WordTerm& t : terms) {
    Composition target;
    auto m = word_matrix(t.word, source, mu, target);
    if (!m) continue;
    if (where && *where != target) {
      check.fail(label + " at " + source.to_string() + ": terms land in different weights");
      return;
    }
    where = target;
    sum = sum ? *sum + t.c * *m : t.c * *m;
  }
  long dim = algebra_for(mu, source)->dim();
  if (!sum || sum->is_zero()) {
    check.pass(std::max(dim, 1L));
  } else {
    check.fail(label + " fails at " + source.to_string());
  }
}

Operator op(OpKind k, int i) { return Operator{k, i}; }

}  // namespace

Report relation_report(int n, int lo, int hi, const std::optional<Composition>& mu) {
  Report rep;
  rep.suite = "relations";
  std::string where = mu ? " (mu=" + mu->to_string() + ")" : "";
  Check ef("[E_i,F_j] = delta_ij (D_i - D_i+1)" + where, "gl-infinity action on the sum of weight spaces");
  Check de("[D_i,E_j] and [D_i,F_j] weight relations" + where, "gl-infinity action on the sum of weight spaces");
  Check far("distant E's and F's commute" + where, "gl-infinity action on the sum of weight spaces");
  Check serre("Serre relations" + where, "gl-infinity action on the sum of weight spaces");
  auto t0 = Clock::now();
  using K = OpKind;
  for (const Composition& g : compositions_of(n, lo, hi)) {
    for (int i = lo; i + 1 <= hi; ++i) {
      for (int j = lo; j + 1 <= hi; ++j) {
        std::vector<WordTerm> t{{1, {op(K::E, i), op(K::F, j)}}, {-1, {op(K::F, j), op(K::E, i)}}};
        if (i == j) {
          t.push_back({-1, {op(K::D, i)}});
          t.push_back({1, {op(K::D, i + 1)}});
        }
        check_relation(ef, "[E_" + std::to_string(i) + ",F_" + std::to_string(j) + "]", t, g, mu);
        if (std::abs(i - j) >= 2) {
          check_relation(far, "[E_" + std::to_string(i) + ",E_" + std::to_string(j) + "]",
                         {{1, {op(K::E, i), op(K::E, j)}}, {-1, {op(K::E, j), op(K::E, i)}}}, g, mu);
          check_relation(far, "[F_" + std::to_string(i) + ",F_" + std::to_string(j) + "]",
                         {{1, {op(K::F, i), op(K::F, j)}}, {-1, {op(K::F, j), op(K::F, i)}}}, g, mu);
        }
        if (std::abs(i - j) == 1) {
          for (K k : {K::E, K::F}) {
            const char* name = k == K::E ? "E" : "F";
            check_relation(serre,
                           std::string("[") + name + "_" + std::to_string(i) + ",[" + name + "_" + std::to_string(i) +
                               "," + name + "_" + std::to_string(j) + "]]",
                           {{1, {op(k, i), op(k, i), op(k, j)}},
                            {-2, {op(k, i), op(k, j), op(k, i)}},
                            {1, {op(k, j), op(k, i), op(k, i)}}},
                           g, mu);
          }
        }
      }
    }
    for (int i = lo; i <= hi; ++i) {
      for (int j = lo; j + 1 <= hi; ++j) {
        int c = (i == j) - (i == j + 1);
        std::vector<WordTerm> te{{1, {op(K::D, i), op(K::E, j)}}, {-1, {op(K::E, j), op(K::D, i)}}};
        if (c) te.push_back({-c, {op(K::E, j)}});
        check_relation(de, "[D_" + std::to_string(i) + ",E_" + std::to_string(j) + "]", te, g, mu);
        std::vector<WordTerm> tf{{1, {op(K::D, i), op(K::F, j)}}, {-1, {op(K::F, j), op(K::D, i)}}};
        if (c) tf.push_back({c, {op(K::F, j)}});
        check_relation(de, "[D_" + std::to_string(i) + ",F_" + std::to_string(j) + "]", tf, g, mu);
      }
    }
  }
  double secs = since(t0);
  for (Check* c : {&ef, &de, &far, &serre}) {
    c->seconds = secs / 4;
    rep.checks.push_back(*c);
  }
  return rep;
}

Report oracle_report(int n, int lo, int hi) {
  Report rep;
  rep.suite = "oracles";
  Check fcheck("F_i: polynomial formula equals free-module formula", "action of F_i on partial coinvariant algebras");
  Check echeck("E_i: polynomial formula equals free-module formula", "action of E_i on partial coinvariant algebras");
  Check shift("E_i, F_i shift degree by the change in d_nu", "operators preserve C_nu(d_nu - 2r) families");
  Check push("push-forwards: power-basis values equal antisymmetrization", "push-forward maps of the pair algebra");
  Check expand("power expansions of x_k and eps ratios", "free-module structure of the pair algebra");
  auto t0 = Clock::now();
  for (const KeySituation& ks : key_situations(n, lo, hi)) {
    int nv = ks.nu.total();
    auto src = QuotientPresentation::coinvariant(ks.nu);
    auto dst = QuotientPresentation::coinvariant(ks.nu_prime);
    int df = 2 * (ks.a - ks.b);
    for (const QuotientElement& z : src->basis()) {
      QuotientElement lhs = apply_F(ks, z);
      fcheck.expect(lhs == apply_F_oracle(ks, z), describe(ks) + " F(" + z.to_string() + ")");
      bool ok = lhs.is_zero() || (lhs.rep().is_homogeneous() && 2 * lhs.rep().degree() == 2 * z.rep().degree() + df);
      shift.expect(ok, describe(ks) + " F(" + z.to_string() + ") has the wrong degree");
    }
    for (const QuotientElement& z : dst->basis()) {
      QuotientElement lhs = apply_E(ks, z);
      echeck.expect(lhs == apply_E_oracle(ks, z), describe(ks) + " E(" + z.to_string() + ")");
      bool ok = lhs.is_zero() || (lhs.rep().is_homogeneous() && 2 * lhs.rep().degree() == 2 * z.rep().degree() - df);
      shift.expect(ok, describe(ks) + " E(" + z.to_string() + ") has the wrong degree");
    }

    Polynomial xk = x(nv, ks.k);
    int rmax = ks.a + ks.b + 2;
    for (int r = 0; r <= rmax; ++r) {
      Polynomial p = pow(xk, r);
      push.expect(push_p(ks, xk_power(ks, r)) == push_p_antisym(ks, p), describe(ks) + " p_*(x_k^" + std::to_string(r) + ")");
      push.expect(push_p_prime(ks, xk_power(ks, r)) == push_p_prime_antisym(ks, p),
                  describe(ks) + " p'_*(x_k^" + std::to_string(r) + ")");
    }
    Polynomial eps_ratio = exact_divide(eps_nu(ks.nu), eps_pair(ks.nu, ks.nu_prime));
    Polynomial eps_ratio_prime = exact_divide(eps_nu(ks.nu_prime), eps_pair(ks.nu, ks.nu_prime));
    push.expect(push_p(ks, to_pair(ks, eps_ratio)) == src->one(), describe(ks) + " p_*(eps_nu / eps_pair) != 1");
    push.expect(push_p_prime(ks, to_pair(ks, eps_ratio_prime)) == dst->one(),
                describe(ks) + " p'_*(eps_nu' / eps_pair) != 1");

    // eps_nu / eps_pair and eps_nu' / eps_pair as products and as power sums
    Polynomial prod = Polynomial::constant(nv, 1), sum(nv);
    for (int j = 1; j <= ks.a; ++j) prod = prod * (xk - x(nv, ks.k - j));
    for (int s = 0; s <= ks.a; ++s) sum += sign(s) * (e_of(ks.nu_prime, ks.i, s) * pow(xk, ks.a - s));
    Rational inv_a(1, ks.a + 1);
    expand.expect(eps_ratio == sign(ks.a) * inv_a * prod && eps_ratio == sign(ks.a) * inv_a * sum,
                  describe(ks) + " eps_nu / eps_pair expansion");
    Polynomial prod2 = Polynomial::constant(nv, 1), sum2(nv);
    for (int j = 1; j <= ks.b; ++j) prod2 = prod2 * (xk - x(nv, ks.k + j));
    for (int s = 0; s <= ks.b; ++s) sum2 += sign(s) * (e_of(ks.nu, ks.i + 1, s) * pow(xk, ks.b - s));
    Rational inv_b(1, ks.b + 1);
    expand.expect(eps_ratio_prime == inv_b * prod2 && eps_ratio_prime == inv_b * sum2,
                  describe(ks) + " eps_nu' / eps_pair expansion");
    // high powers of x_k over both power bases
    auto pair = pair_algebra(ks);
    for (int r = 0; r <= nv; ++r) {
      Polynomial rhs(nv), rhs2(nv);
      for (int s = 0; s <= ks.a; ++s) {
        for (int t = 0; t <= s; ++t) {
          rhs += sign(s - t) * (e_of(ks.nu, ks.i, s - t) * h_of(ks.nu, ks.i, r + t) * pow(xk, ks.a - s));
        }
      }
      for (int s = 0; s <= ks.b; ++s) {
        for (int t = 0; t <= s; ++t) {
          rhs2 += sign(s - t) * (e_of(ks.nu_prime, ks.i + 1, s - t) * h_of(ks.nu_prime, ks.i + 1, r + t) *
                                 pow(xk, ks.b - s));
        }
      }
      expand.expect(pair->normal_form(pow(xk, ks.a + r) - rhs).is_zero(),
                    describe(ks) + " x_k^(a+" + std::to_string(r) + ") expansion over C_nu");
      expand.expect(pair->normal_form(pow(xk, ks.b + r) - rhs2).is_zero(),
                    describe(ks) + " x_k^(b+" + std::to_string(r) + ") expansion over C_nu'");
    }
  }
  double secs = since(t0);
  for (Check* c : {&fcheck, &echeck, &shift, &push, &expand}) {
    c->seconds = secs / 5;
    rep.checks.push_back(*c);
  }
  return rep;
}

Report ideal_invariance_check(const Composition& mu, int lo, int hi) {
  Report rep;
  rep.suite = "ideal-invariance";
  std::string where = " (mu=" + mu.to_string() + ")";
  Check fcheck("F_i maps the ideal into the ideal" + where, "operators leave the sum of the ideals invariant");
  Check echeck("E_i maps the ideal into the ideal" + where, "operators leave the sum of the ideals invariant");
  Check lift("operators do not depend on the lift" + where, "operators descend to the quotients");
  Check inter("quotient maps intertwine the operators" + where, "operators factor through the quotients");
  auto t0 = Clock::now();
  int n = mu.total();

  // For each generator g of the source ideal and each orbit sum p of P_nu,
  // the image of g*p must lie in the target ideal. Images above the top
  // degree of the target lie there for degree reasons, so only cofactor
  // degrees that can land at or below it are enumerated.
  auto sweep = [&](Check& check, const KeySituation& ks, bool is_f) {
    const Composition& src_nu = is_f ? ks.nu : ks.nu_prime;
    const Composition& dst_nu = is_f ? ks.nu_prime : ks.nu;
    auto dst = algebra_for(mu, dst_nu);
    auto top = dst->top_degree();
    if (!top) {
      check.pass();  // the target ideal is the whole ring
      return;
    }
    int shift = is_f ? ks.a - ks.b : ks.b - ks.a;
    int cap = default_generator_cap(mu, src_nu) / 2;
    auto gens = tanisaki_generators_h(mu, src_nu, 2 * cap);
    auto ring = block_ring(src_nu.nonzero_parts());
    for (const Polynomial& g : gens) {
      int dg = g.degree();
      int last = std::min(cap - dg, *top / 2 - shift - dg);
      for (int e = 0; e <= last; ++e) {
        for (const Monomial& m : ring->degree(e).reps) {
          Polynomial f = g * ring->orbit_sum(m);
          Polynomial img = is_f ? apply_F_poly(ks, f) : apply_E_poly(ks, f);
          check.expect(dst->contains(img), describe(ks) + (is_f ? " F(" : " E(") + g.to_string() + " * orbit of " +
                                               Polynomial::monomial(n, m, 1).to_string() + ")");
        }
      }
    }
  };

  for (const KeySituation& ks : key_situations(n, lo, hi)) {
    sweep(fcheck, ks, true);
    sweep(echeck, ks, false);

    auto src = algebra_for(mu, ks.nu);
    auto src_prime = algebra_for(mu, ks.nu_prime);
    auto gens = src->generators();
    auto gens_prime = src_prime->generators();
    for (const QuotientElement& z : src->basis()) {
      QuotientElement base = apply_F(ks, z);
      for (const Polynomial& g : gens) {
        QuotientElement other = src_prime->normal_form(apply_F_poly(ks, z.rep() + g));
        lift.expect(other == base, describe(ks) + " F depends on the lift of " + z.to_string());
      }
    }
    for (const QuotientElement& z : src_prime->basis()) {
      QuotientElement base = apply_E(ks, z);
      for (const Polynomial& g : gens_prime) {
        QuotientElement other = src->normal_form(apply_E_poly(ks, z.rep() + g));
        lift.expect(other == base, describe(ks) + " E depends on the lift of " + z.to_string());
      }
    }
    for (const QuotientElement& z : QuotientPresentation::coinvariant(ks.nu)->basis()) {
      QuotientElement down = apply_F(ks, src->normal_form(z.rep()));
      QuotientElement across = src_prime->normal_form(apply_F(ks, z).rep());
      inter.expect(down == across, describe(ks) + " F and the quotient map disagree on " + z.to_string());
    }
    for (const QuotientElement& z : QuotientPresentation::coinvariant(ks.nu_prime)->basis()) {
      QuotientElement down = apply_E(ks, src_prime->normal_form(z.rep()));
      QuotientElement across = src->normal_form(apply_E(ks, z).rep());
      inter.expect(down == across, describe(ks) + " E and the quotient map disagree on " + z.to_string());
    }
  }
  double secs = since(t0);
  for (Check* c : {&fcheck, &echeck, &lift, &inter}) {
    c->seconds = secs / 4;
    rep.checks.push_back(*c);
  }
  return rep;
}

Report weight_dim_report(const Composition& mu, int lo, int hi) {
  Report rep;
  rep.suite = "weights";
  std::string where = " (mu=" + mu.to_string() + ")";
  Check dims("dim C^mu_nu = column-strict lambda-tableaux of type nu" + where, "weight spaces of the exterior power");
  Check vanish("C^mu_nu = 0 exactly when lambda does not dominate nu+" + where, "vanishing criterion");
  Check top("top degree d^mu_nu with dimension K_{lambda,nu}" + where, "top degree of C^mu_nu");
  Check highest("extremal weights: dimension 1, highest weight killed by every E_i" + where,
                "highest weight of the exterior power");
  auto t0 = Clock::now();
  int n = mu.total();
  Partition lam = transpose(mu);
  Table table;
  table.title = "weight spaces for mu=" + mu.to_string() + ", lambda=" + lam.to_string();
  table.header = {"nu", "dim", "fillings", "top degree", "top dim", "Kostka"};
  for (const Composition& nu : compositions_of(n, lo, hi)) {
    auto alg = algebra_for(mu, nu);
    long dim = alg->dim();
    long fillings = count_column_strict(lam, nu);
    dims.expect(dim == fillings, "nu=" + nu.to_string() + ": dim " + std::to_string(dim) + " vs " +
                                     std::to_string(fillings));
    bool nonzero = dominates(lam, sort_to_partition(nu));
    vanish.expect(alg->is_zero_algebra() != nonzero, "nu=" + nu.to_string());
    std::string top_deg = "-", top_dim = "-";
    long k = kostka(lam, nu);
    if (nonzero) {
      auto h = alg->hilbert();
      int deg = static_cast<int>(h.size()) - 1;
      auto expected = d_mu_nu(mu, nu);
      top.expect(expected && deg == *expected && h.back() == k,
                 "nu=" + nu.to_string() + ": top degree " + std::to_string(deg) + " dim " + std::to_string(h.back()));
      top_deg = std::to_string(deg);
      top_dim = std::to_string(h.back());
    }
    if (sort_to_partition(nu) == lam) highest.expect(dim == 1, "nu=" + nu.to_string() + " has dimension " + std::to_string(dim));
    table.rows.push_back({nu.to_string(), std::to_string(dim), std::to_string(fillings), top_deg, top_dim,
                          std::to_string(k)});
  }
  if (lam.length() <= hi - lo + 1) {
    Composition gamma = Composition::from_partition(lam, lo);
    auto alg = algebra_for(mu, gamma);
    for (int i = lo; i + 1 <= hi; ++i) {
      Composition target;
      auto m = operator_matrix(Operator{OpKind::E, i}, gamma, mu, target);
      highest.expect(!m || m->is_zero(), "E_" + std::to_string(i) + " does not kill the highest weight " +
                                             gamma.to_string());
    }
  }
  double secs = since(t0);
  for (Check* c : {&dims, &vanish, &top, &highest}) {
    c->seconds = secs / 4;
    rep.checks.push_back(*c);
  }
  rep.tables.push_back(std::move(table));
  return rep;
}

HilbertSides hilbert_identity_sides(const Composition& mu, const Composition& nu) {
  HilbertSides sides;
  sides.left = algebra_for(mu, nu)->hilbert();
  int n = nu.total();
  auto top = d_mu_nu(mu, nu);
  int d = top ? *top : 0;
  std::vector<long> right(static_cast<std::size_t>(d + 1), 0);
  bool laurent = false;
  for (const Partition& kappa : partitions_of(n)) {
    long k = kostka(kappa, nu);
    if (k == 0) continue;
    IntPolynomial kf = kostka_foulkes(transpose(kappa), mu);
    for (int j = 0; j <= kf.degree(); ++j) {
      if (kf.coeff(j) == 0) continue;
      int at = d - 2 * j;
      if (at < 0) {
        laurent = true;
        continue;
      }
      right[static_cast<std::size_t>(at)] += k * kf.coeff(j);
    }
  }
  while (!right.empty() && right.back() == 0) right.pop_back();
  sides.right = std::move(right);
  sides.negative_powers = laurent;
  return sides;
}

bool hilbert_identity_check(const Composition& mu, const Composition& nu) {
  auto s = hilbert_identity_sides(mu, nu);
  return !s.negative_powers && s.left == s.right;
}

}  // namespace coinv

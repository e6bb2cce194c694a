#include "coinv/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "coinv/errors.hpp"

namespace coinv {

namespace {

int shift_of(int j) { return 8 * (kMaxVars - j); }

bool term_greater(const Term& a, const Term& b) { return grlex_less(b.m, a.m); }

// Sort, merge equal monomials, drop zeros.
void normalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  std::size_t out = 0;
  for (std::size_t j = 0; j < terms.size();) {
    Term t = std::move(terms[j]);
    std::size_t k = j + 1;
    while (k < terms.size() && terms[k].m == t.m) t.c += terms[k++].c;
    j = k;
    if (t.c != 0) terms[out++] = std::move(t);
  }
  terms.resize(out);
}

}  // namespace

Monomial Monomial::from_exponents(const std::vector<int>& exps) {
  if (exps.size() > static_cast<std::size_t>(kMaxVars)) {
    throw InvalidInput("too many variables (limit " + std::to_string(kMaxVars) + ")");
  }
  Monomial m;
  for (std::size_t j = 0; j < exps.size(); ++j) {
    int e = exps[j];
    if (e < 0) throw InvalidInput("negative exponent");
    m.deg += e;
    if (m.deg > kMaxDegree) throw InvalidInput("monomial degree exceeds 255");
    m.bits |= static_cast<std::uint64_t>(e) << shift_of(static_cast<int>(j) + 1);
  }
  return m;
}

Monomial Monomial::variable(int j, int power) {
  if (j < 1 || j > kMaxVars) throw InvalidInput("variable index out of range");
  if (power < 0 || power > kMaxDegree) throw InvalidInput("bad exponent");
  return Monomial{static_cast<std::uint64_t>(power) << shift_of(j), power};
}

std::vector<int> Monomial::exponents(int n) const {
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) out[static_cast<std::size_t>(j - 1)] = exp(j);
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  if (deg > other.deg) return false;
  for (int j = 1; j <= kMaxVars; ++j) {
    if (exp(j) > other.exp(j)) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  // Each byte is bounded by the total degree, so no carry can occur below 256.
  if (deg + o.deg > kMaxDegree) throw InvalidInput("monomial degree exceeds 255");
  return Monomial{bits + o.bits, deg + o.deg};
}

Monomial Monomial::operator/(const Monomial& o) const {
  if (!o.divides(*this)) throw NotDivisible("monomial does not divide");
  return Monomial{bits - o.bits, deg - o.deg};
}

Polynomial::Polynomial(int n) : n_(n) {
  if (n < 0 || n > kMaxVars) {
    throw InvalidInput("number of variables must be in [0, " + std::to_string(kMaxVars) + "]");
  }
}

Polynomial::Polynomial(int n, std::vector<Term> terms) : Polynomial(n) {
  terms_ = std::move(terms);
  normalize(terms_);
}

Polynomial Polynomial::constant(int n, const Rational& c) {
  Polynomial p(n);
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(int n, int j) {
  if (j < 1 || j > n) throw InvalidInput("variable index out of range");
  return monomial(n, Monomial::variable(j), 1);
}

Polynomial Polynomial::monomial(int n, const Monomial& m, const Rational& c) {
  Polynomial p(n);
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

bool Polynomial::is_homogeneous() const {
  return terms_.empty() || terms_.front().m.deg == terms_.back().m.deg;
}

Polynomial Polynomial::homogeneous_part(int d) const {
  Polynomial p(n_);
  for (const Term& t : terms_) {
    if (t.m.deg == d) p.terms_.push_back(t);
  }
  return p;
}

std::vector<int> Polynomial::degrees() const {
  std::vector<int> out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (out.empty() || out.back() != it->m.deg) out.push_back(it->m.deg);
  }
  return out;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& x) {
    return grlex_less(x, t.m);
  });
  if (it != terms_.end() && it->m == m) return it->c;
  return 0;
}

void Polynomial::check_same_ring(const Polynomial& o) const {
  if (n_ != o.n_) throw InvalidInput("polynomials live in rings with different variable counts");
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (Term& t : p.terms_) t.c = -t.c;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  add_scaled(1, Monomial{}, o);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  add_scaled(-1, Monomial{}, o);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (Term& t : terms_) t.c *= c;
  }
  return *this;
}

void Polynomial::add_scaled(const Rational& c, const Monomial& m, const Polynomial& g) {
  check_same_ring(g);
  if (c == 0 || g.is_zero()) return;
  if (&g == this) {
    Polynomial copy = g;
    add_scaled(c, m, copy);
    return;
  }
  // Multiplying by a monomial preserves the term order, so this is a merge.
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  Rational tmp;
  while (a != terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end()) {
      out.push_back(std::move(*a++));
      continue;
    }
    Monomial bm = b->m * m;
    if (a == terms_.end() || grlex_less(a->m, bm)) {
      out.push_back({bm, c * b->c});
      ++b;
    } else if (grlex_less(bm, a->m)) {
      out.push_back(std::move(*a++));
    } else {
      tmp = c * b->c;
      tmp += a->c;
      if (tmp != 0) out.push_back({bm, tmp});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_ring(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.n_);
  if (b.terms_.size() == 1 || a.terms_.size() == 1) {
    const Polynomial& big = b.terms_.size() == 1 ? a : b;
    const Term& t = b.terms_.size() == 1 ? b.terms_.front() : a.terms_.front();
    Polynomial p(a.n_);
    p.terms_.reserve(big.terms_.size());
    for (const Term& s : big.terms_) p.terms_.push_back({s.m * t.m, s.c * t.c});
    return p;
  }
  std::unordered_map<std::uint64_t, Rational> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const Term& s : a.terms_) {
    for (const Term& t : b.terms_) {
      Monomial m = s.m * t.m;
      acc[m.bits] += s.c * t.c;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [bits, c] : acc) {
    if (c == 0) continue;
    Monomial m{bits, 0};
    for (int j = 1; j <= kMaxVars; ++j) m.deg += m.exp(j);
    terms.push_back({m, std::move(c)});
  }
  std::sort(terms.begin(), terms.end(), term_greater);
  Polynomial p(a.n_);
  p.terms_ = std::move(terms);
  return p;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t j = 0; j < a.terms_.size(); ++j) {
    if (!(a.terms_[j].m == b.terms_[j].m) || a.terms_[j].c != b.terms_[j].c) return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const Term& t : terms_) {
    Rational c = t.c;
    if (first) {
      if (c < 0) {
        s += "-";
        c = -c;
      }
    } else {
      s += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    first = false;
    std::string mono;
    for (int j = 1; j <= n_; ++j) {
      int e = t.m.exp(j);
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(j);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      s += c.get_str();
    } else if (c == 1) {
      s += mono;
    } else {
      s += c.get_str() + "*" + mono;
    }
  }
  return s;
}

Polynomial pow(const Polynomial& f, int e) {
  if (e < 0) throw InvalidInput("negative power");
  Polynomial r = Polynomial::constant(f.nvars(), 1);
  for (int j = 0; j < e; ++j) r = r * f;
  return r;
}

Polynomial apply_permutation(const std::vector<int>& w, const Polynomial& f) {
  int n = f.nvars();
  if (static_cast<int>(w.size()) != n) throw InvalidInput("permutation size differs from variable count");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : w) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) throw InvalidInput("not a permutation");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  std::vector<Term> terms;
  terms.reserve(f.terms().size());
  for (const Term& t : f.terms()) {
    Monomial m{0, t.m.deg};
    for (int j = 1; j <= n; ++j) {
      m.bits |= static_cast<std::uint64_t>(t.m.exp(j)) << shift_of(w[static_cast<std::size_t>(j - 1)]);
    }
    terms.push_back({m, t.c});
  }
  return Polynomial(n, std::move(terms));
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw InvalidInput("division by the zero polynomial");
  if (f.nvars() != g.nvars()) throw InvalidInput("polynomials live in rings with different variable counts");
  const Term& lg = g.leading_term();
  Polynomial r = f;
  std::vector<Term> q;
  while (!r.is_zero()) {
    const Term& lr = r.leading_term();
    if (!lg.m.divides(lr.m)) {
      throw NotDivisible("remainder " + r.to_string() + " left dividing by " + g.to_string());
    }
    Term t{lr.m / lg.m, lr.c / lg.c};
    r.add_scaled(-t.c, t.m, g);
    q.push_back(std::move(t));
  }
  return Polynomial(f.nvars(), std::move(q));
}

}  // namespace coinv

#include "coinv/traces.hpp"

#include <chrono>

#include "coinv/errors.hpp"
#include "coinv/symmetric.hpp"

namespace coinv {

namespace {

Rational sign(int e) { return e % 2 ? Rational(-1) : Rational(1); }

QuotientElement e_elem(const KeySituation& ks, const Composition& nu, int i, int r) {
  return to_pair(ks, e_block(nu, {i}, r));
}

Polynomial h_poly(const Composition& nu, int i, int r) { return h_block(nu, {i}, r); }

// Side of the left factor's decomposition and ranges of the two indices.
Side first_side(TensorShape s) { return s == TensorShape::over_nu ? Side::nu : Side::nu_prime; }
Side second_side(TensorShape s) { return s == TensorShape::over_nu ? Side::nu_prime : Side::nu; }
int first_top(const KeySituation& ks, TensorShape s) { return s == TensorShape::over_nu ? ks.a : ks.b; }
int second_top(const KeySituation& ks, TensorShape s) { return s == TensorShape::over_nu ? ks.b : ks.a; }
const Composition& middle(const KeySituation& ks, TensorShape s) {
  return s == TensorShape::over_nu ? ks.nu : ks.nu_prime;
}
// ring the coefficients live in
const Composition& outer(const KeySituation& ks, TensorShape s) {
  return s == TensorShape::over_nu ? ks.nu_prime : ks.nu;
}

void check_same(const PowerBasisTensor& a, const PowerBasisTensor& b) {
  if (a.shape != b.shape || a.ks.nu != b.ks.nu || a.ks.i != b.ks.i) {
    throw InvalidInput("tensors belong to different tensor products");
  }
}

void check_weight(const QuotientElement& z, const Composition& nu, const char* what) {
  if (!z.presentation_ptr() || z.presentation().nu() != nu || z.presentation().mu()) {
    throw InvalidInput(std::string(what) + ": expected an element of the partial coinvariant algebra at " +
                       nu.to_string());
  }
}

}  // namespace

// ---------------------------------------------------------------- tensors

PowerBasisTensor PowerBasisTensor::zero(const KeySituation& ks, TensorShape shape) {
  PowerBasisTensor t{ks, shape, {}};
  auto zero = QuotientPresentation::coinvariant(outer(ks, shape))->zero();
  t.coeffs.assign(static_cast<std::size_t>(first_top(ks, shape) + 1),
                  std::vector<QuotientElement>(static_cast<std::size_t>(second_top(ks, shape) + 1), zero));
  return t;
}

PowerBasisTensor PowerBasisTensor::pure(const KeySituation& ks, TensorShape shape, const QuotientElement& u,
                                        const QuotientElement& v) {
  PowerBasisTensor t = zero(ks, shape);
  auto left = decompose_over(ks, u, first_side(shape));
  for (std::size_t p = 0; p < left.size(); ++p) {
    if (left[p].is_zero()) continue;
    // move the base-ring coefficient across the tensor sign
    auto right = decompose_over(ks, to_pair(ks, left[p]) * v, second_side(shape));
    for (std::size_t q = 0; q < right.size(); ++q) t.coeffs[p][q] = t.coeffs[p][q] + right[q];
  }
  return t;
}

PowerBasisTensor& PowerBasisTensor::operator+=(const PowerBasisTensor& o) {
  check_same(*this, o);
  for (std::size_t p = 0; p < coeffs.size(); ++p) {
    for (std::size_t q = 0; q < coeffs[p].size(); ++q) coeffs[p][q] = coeffs[p][q] + o.coeffs[p][q];
  }
  return *this;
}

PowerBasisTensor operator*(const Rational& c, PowerBasisTensor t) {
  for (auto& row : t.coeffs) {
    for (auto& x : row) x = c * x;
  }
  return t;
}

bool operator==(const PowerBasisTensor& a, const PowerBasisTensor& b) {
  check_same(a, b);
  return a.coeffs == b.coeffs;
}

PowerBasisTensor PowerBasisTensor::times_middle_on_left(const QuotientElement& z) const {
  check_weight(z, middle(ks, shape), "middle multiplication");
  PowerBasisTensor out = zero(ks, shape);
  QuotientElement zp = to_pair(ks, z);
  for (std::size_t p = 0; p < coeffs.size(); ++p) {
    for (std::size_t q = 0; q < coeffs[p].size(); ++q) {
      if (coeffs[p][q].is_zero()) continue;
      QuotientElement u = xk_power(ks, static_cast<int>(p)) * zp;
      QuotientElement v = xk_power(ks, static_cast<int>(q)) * to_pair(ks, coeffs[p][q]);
      out += pure(ks, shape, u, v);
    }
  }
  return out;
}

PowerBasisTensor PowerBasisTensor::times_middle_on_right(const QuotientElement& z) const {
  check_weight(z, middle(ks, shape), "middle multiplication");
  PowerBasisTensor out = zero(ks, shape);
  QuotientElement zp = to_pair(ks, z);
  for (std::size_t p = 0; p < coeffs.size(); ++p) {
    for (std::size_t q = 0; q < coeffs[p].size(); ++q) {
      if (coeffs[p][q].is_zero()) continue;
      QuotientElement u = xk_power(ks, static_cast<int>(p));
      QuotientElement v = zp * xk_power(ks, static_cast<int>(q)) * to_pair(ks, coeffs[p][q]);
      out += pure(ks, shape, u, v);
    }
  }
  return out;
}

// ---------------------------------------------------------------- homomorphisms

QuotientElement ModuleHom::operator()(const QuotientElement& f) const {
  Side side = space == HomSpace::over_nu ? Side::nu : Side::nu_prime;
  auto base = QuotientPresentation::coinvariant(space == HomSpace::over_nu ? ks.nu : ks.nu_prime);
  auto parts = decompose_over(ks, f, side);
  QuotientElement sum = base->zero();
  for (std::size_t s = 0; s < parts.size(); ++s) sum = sum + parts[s] * values[s];
  return sum;
}

bool operator==(const ModuleHom& a, const ModuleHom& b) {
  return a.space == b.space && a.ks.nu == b.ks.nu && a.ks.i == b.ks.i && a.values == b.values;
}

ModuleHom delta(const KeySituation& ks, const QuotientElement& g) {
  auto base = QuotientPresentation::coinvariant(ks.nu);
  auto parts = decompose_over(ks, g, Side::nu);
  ModuleHom f{ks, HomSpace::over_nu, {}};
  for (int s = 0; s <= ks.a; ++s) {
    Polynomial v(ks.nu.total());
    for (int r = 0; r <= ks.a; ++r) {
      v += sign(ks.a) * (h_poly(ks.nu, ks.i, r + s - ks.a) * parts[static_cast<std::size_t>(r)].rep());
    }
    f.values.push_back(base->normal_form(v));
  }
  return f;
}

QuotientElement delta_inv(const ModuleHom& f) {
  const KeySituation& ks = f.ks;
  if (f.space != HomSpace::over_nu) throw InvalidInput("delta_inv expects a homomorphism over C_nu");
  QuotientElement sum = pair_algebra(ks)->zero();
  for (int r = 0; r <= ks.a; ++r) {
    QuotientElement term = e_elem(ks, ks.nu_prime, ks.i, r) * to_pair(ks, f(xk_power(ks, ks.a - r)));
    sum = sum + sign(ks.a + r) * term;
  }
  return sum;
}

ModuleHom delta_prime(const KeySituation& ks, const QuotientElement& g) {
  auto base = QuotientPresentation::coinvariant(ks.nu_prime);
  auto parts = decompose_over(ks, g, Side::nu_prime);
  ModuleHom f{ks, HomSpace::over_nu_prime, {}};
  for (int s = 0; s <= ks.b; ++s) {
    Polynomial v(ks.nu.total());
    for (int r = 0; r <= ks.b; ++r) {
      v += h_poly(ks.nu_prime, ks.i + 1, r + s - ks.b) * parts[static_cast<std::size_t>(r)].rep();
    }
    f.values.push_back(base->normal_form(v));
  }
  return f;
}

QuotientElement delta_prime_inv(const ModuleHom& f) {
  const KeySituation& ks = f.ks;
  if (f.space != HomSpace::over_nu_prime) throw InvalidInput("delta_prime_inv expects a homomorphism over C_nu'");
  QuotientElement sum = pair_algebra(ks)->zero();
  for (int r = 0; r <= ks.b; ++r) {
    QuotientElement term = e_elem(ks, ks.nu, ks.i + 1, r) * to_pair(ks, f(xk_power(ks, ks.b - r)));
    sum = sum + sign(r) * term;
  }
  return sum;
}

// ---------------------------------------------------------------- units and counits

PowerBasisTensor unit_iota_prime(const KeySituation& ks) {
  PowerBasisTensor t = PowerBasisTensor::zero(ks, TensorShape::over_nu);
  for (int r = 0; r <= ks.a; ++r) {
    t += sign(ks.a + r) *
         PowerBasisTensor::pure(ks, TensorShape::over_nu, e_elem(ks, ks.nu_prime, ks.i, r), xk_power(ks, ks.a - r));
  }
  return t;
}

QuotientElement counit_eps(const PowerBasisTensor& t) {
  if (t.shape != TensorShape::over_nu_prime) throw InvalidInput("counit_eps expects a tensor over C_nu'");
  const KeySituation& ks = t.ks;
  Polynomial sum(ks.nu.total());
  for (std::size_t s = 0; s < t.coeffs.size(); ++s) {
    for (std::size_t r = 0; r < t.coeffs[s].size(); ++r) {
      int deg = static_cast<int>(r + s) - ks.a;
      sum += sign(ks.a) * (h_poly(ks.nu, ks.i, deg) * t.coeffs[s][r].rep());
    }
  }
  return QuotientPresentation::coinvariant(ks.nu)->normal_form(sum);
}

PowerBasisTensor unit_iota(const KeySituation& ks) {
  PowerBasisTensor t = PowerBasisTensor::zero(ks, TensorShape::over_nu_prime);
  for (int r = 0; r <= ks.b; ++r) {
    t += sign(r) *
         PowerBasisTensor::pure(ks, TensorShape::over_nu_prime, e_elem(ks, ks.nu, ks.i + 1, r), xk_power(ks, ks.b - r));
  }
  return t;
}

QuotientElement counit_eps_prime(const PowerBasisTensor& t) {
  if (t.shape != TensorShape::over_nu) throw InvalidInput("counit_eps_prime expects a tensor over C_nu");
  const KeySituation& ks = t.ks;
  Polynomial sum(ks.nu.total());
  for (std::size_t r = 0; r < t.coeffs.size(); ++r) {
    for (std::size_t s = 0; s < t.coeffs[r].size(); ++s) {
      int deg = static_cast<int>(r + s) - ks.b;
      sum += h_poly(ks.nu_prime, ks.i + 1, deg) * t.coeffs[r][s].rep();
    }
  }
  return QuotientPresentation::coinvariant(ks.nu_prime)->normal_form(sum);
}

std::vector<std::vector<QuotientElement>> counit_table(const KeySituation& ks, TensorShape shape) {
  std::vector<std::vector<QuotientElement>> table;
  for (int p = 0; p <= first_top(ks, shape); ++p) {
    table.emplace_back();
    for (int q = 0; q <= second_top(ks, shape); ++q) {
      auto t = PowerBasisTensor::pure(ks, shape, xk_power(ks, p), xk_power(ks, q));
      table.back().push_back(shape == TensorShape::over_nu ? counit_eps_prime(t) : counit_eps(t));
    }
  }
  return table;
}

// ---------------------------------------------------------------- trace maps

QuotientElement trace_F(const KeySituation& ks, const QuotientElement& z, bool middle_on_left) {
  check_weight(z, ks.nu, "trace_F");
  PowerBasisTensor t = unit_iota_prime(ks);
  t = middle_on_left ? t.times_middle_on_left(z) : t.times_middle_on_right(z);
  return counit_eps_prime(t);
}

QuotientElement trace_E(const KeySituation& ks, const QuotientElement& z, bool middle_on_left) {
  check_weight(z, ks.nu_prime, "trace_E");
  PowerBasisTensor t = unit_iota(ks);
  t = middle_on_left ? t.times_middle_on_left(z) : t.times_middle_on_right(z);
  return counit_eps(t);
}

bool triangle_identity_check(const KeySituation& ks, Check* check) {
  auto pair = pair_algebra(ks);
  bool all = true;
  auto expect = [&](bool ok, const std::string& what) {
    if (check) check->expect(ok, what);
    all = all && ok;
  };
  std::string where = "nu=" + ks.nu.to_string() + " i=" + std::to_string(ks.i);
  using S = TensorShape;
  for (const QuotientElement& u : pair->basis()) {
    QuotientElement a = pair->zero(), b = pair->zero(), c = pair->zero(), d = pair->zero();
    for (int r = 0; r <= ks.a; ++r) {
      QuotientElement e = e_elem(ks, ks.nu_prime, ks.i, r);
      Rational sg = sign(ks.a + r);
      a = a + sg * (to_pair(ks, counit_eps(PowerBasisTensor::pure(ks, S::over_nu_prime, u, e))) *
                    xk_power(ks, ks.a - r));
      b = b + sg * (e * to_pair(ks, counit_eps(PowerBasisTensor::pure(ks, S::over_nu_prime, xk_power(ks, ks.a - r), u))));
    }
    for (int r = 0; r <= ks.b; ++r) {
      QuotientElement e = e_elem(ks, ks.nu, ks.i + 1, r);
      Rational sg = sign(r);
      c = c + sg * (to_pair(ks, counit_eps_prime(PowerBasisTensor::pure(ks, S::over_nu, u, e))) *
                    xk_power(ks, ks.b - r));
      d = d + sg * (e * to_pair(ks, counit_eps_prime(PowerBasisTensor::pure(ks, S::over_nu, xk_power(ks, ks.b - r), u))));
    }
    expect(a == u, where + ": (eps G)(G iota') != 1 on " + u.to_string());
    expect(b == u, where + ": (H eps)(iota' H) != 1 on " + u.to_string());
    expect(c == u, where + ": (eps' H)(H iota) != 1 on " + u.to_string());
    expect(d == u, where + ": (G eps')(iota G) != 1 on " + u.to_string());
  }
  return all;
}

// ---------------------------------------------------------------- reports

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string describe(const KeySituation& ks) { return "nu=" + ks.nu.to_string() + " i=" + std::to_string(ks.i); }

// Elements of the pair algebra used as module elements M = C_{nu,nu'}.
// A tensor in C_{nu',nu} (x)_{C_nu} M is stored as m_0..m_a, meaning sum x_k^r (x) m_r.
using MTensor = std::vector<QuotientElement>;

MTensor m_pure(const KeySituation& ks, const QuotientElement& g, const QuotientElement& m) {
  auto parts = decompose_over(ks, g, Side::nu);
  MTensor t;
  for (const auto& p : parts) t.push_back(to_pair(ks, p) * m);
  return t;
}

// The hom x_k^s -> sum_r (-1)^a h_{r+s-a}(nu;i) m_r, as its values on x_k^0..x_k^a.
std::vector<QuotientElement> m_phi(const KeySituation& ks, const MTensor& t) {
  std::vector<QuotientElement> values;
  for (int s = 0; s <= ks.a; ++s) {
    QuotientElement v = pair_algebra(ks)->zero();
    for (int r = 0; r <= ks.a; ++r) {
      v = v + sign(ks.a) * (to_pair(ks, h_poly(ks.nu, ks.i, r + s - ks.a)) * t[static_cast<std::size_t>(r)]);
    }
    values.push_back(v);
  }
  return values;
}

MTensor m_phi_inv(const KeySituation& ks, const std::vector<QuotientElement>& values) {
  MTensor t(static_cast<std::size_t>(ks.a + 1), pair_algebra(ks)->zero());
  for (int r = 0; r <= ks.a; ++r) {
    auto parts = decompose_over(ks, e_elem(ks, ks.nu_prime, ks.i, r), Side::nu);
    for (std::size_t q = 0; q < parts.size(); ++q) {
      t[q] = t[q] + sign(ks.a + r) * (to_pair(ks, parts[q]) * values[static_cast<std::size_t>(ks.a - r)]);
    }
  }
  return t;
}

std::vector<QuotientElement> low_degree(const QuotientPresentation& alg, bool everything) {
  if (everything) return alg.basis();
  auto out = alg.graded_basis(0);
  auto two = alg.graded_basis(2);
  out.insert(out.end(), two.begin(), two.end());
  return out;
}

}  // namespace

Report trace_operator_check(int n, int lo, int hi) {
  Report rep;
  rep.suite = "traces";
  Check fcheck("trace map of F_i equals the F_i action", "trace maps agree with the Chevalley generators");
  Check echeck("trace map of E_i equals the E_i action", "trace maps agree with the Chevalley generators");
  Check grading("trace maps are linear and shift degree like the operators", "trace maps agree with the Chevalley generators");
  auto t0 = Clock::now();
  for (const KeySituation& ks : key_situations(n, lo, hi)) {
    int shift = 2 * (ks.a - ks.b);
    auto src = QuotientPresentation::coinvariant(ks.nu)->basis();
    auto dst = QuotientPresentation::coinvariant(ks.nu_prime)->basis();
    std::vector<QuotientElement> tf, te;
    for (const QuotientElement& z : src) {
      tf.push_back(trace_F(ks, z));
      fcheck.expect(tf.back() == apply_F_oracle(ks, z), describe(ks) + " trace_F(" + z.to_string() + ")");
      const Polynomial& p = tf.back().rep();
      grading.expect(p.is_zero() || (p.is_homogeneous() && 2 * p.degree() == 2 * z.rep().degree() + shift),
                     describe(ks) + " trace_F(" + z.to_string() + ") degree");
    }
    for (const QuotientElement& z : dst) {
      te.push_back(trace_E(ks, z));
      echeck.expect(te.back() == apply_E_oracle(ks, z), describe(ks) + " trace_E(" + z.to_string() + ")");
      const Polynomial& p = te.back().rep();
      grading.expect(p.is_zero() || (p.is_homogeneous() && 2 * p.degree() == 2 * z.rep().degree() - shift),
                     describe(ks) + " trace_E(" + z.to_string() + ") degree");
    }
    for (std::size_t j = 0; j + 1 < src.size(); ++j) {
      grading.expect(trace_F(ks, src[j] + Rational(2) * src[j + 1]) == tf[j] + Rational(2) * tf[j + 1],
                     describe(ks) + " trace_F not linear");
    }
    for (std::size_t j = 0; j + 1 < dst.size(); ++j) {
      grading.expect(trace_E(ks, dst[j] + Rational(2) * dst[j + 1]) == te[j] + Rational(2) * te[j + 1],
                     describe(ks) + " trace_E not linear");
    }
  }
  double secs = since(t0);
  for (Check* c : {&fcheck, &echeck, &grading}) {
    c->seconds = secs / 3;
    rep.checks.push_back(*c);
  }
  return rep;
}

Report adjunction_report(int n, int lo, int hi) {
  Report rep;
  rep.suite = "traces";
  Check iso("delta and delta' are inverse to the stated maps", "bimodule isomorphism onto the dual module");
  Check linear("delta and delta' are bimodule maps", "bimodule isomorphism onto the dual module");
  Check tensor_hom("tensor-hom isomorphism: inverse, balanced, natural", "natural isomorphism of tensor and hom functors");
  Check triangle("triangle identities for both adjunctions", "the two adjoint pairs of tensor functors");
  Check central("middle multiplication on either factor gives the same trace", "trace maps of central elements");
  auto t0 = Clock::now();
  for (const KeySituation& ks : key_situations(n, lo, hi)) {
    auto pair = pair_algebra(ks);
    auto base = QuotientPresentation::coinvariant(ks.nu);
    auto base_prime = QuotientPresentation::coinvariant(ks.nu_prime);
    auto pb = pair->basis();
    std::string where = describe(ks);

    for (const QuotientElement& g : pb) {
      iso.expect(delta_inv(delta(ks, g)) == g, where + " delta_inv(delta(" + g.to_string() + "))");
      iso.expect(delta_prime_inv(delta_prime(ks, g)) == g, where + " delta'_inv(delta'(" + g.to_string() + "))");
    }
    for (int s = 0; s <= ks.a; ++s) {
      for (const QuotientElement& c : base->basis()) {
        ModuleHom f{ks, HomSpace::over_nu, std::vector<QuotientElement>(static_cast<std::size_t>(ks.a + 1), base->zero())};
        f.values[static_cast<std::size_t>(s)] = c;
        iso.expect(delta(ks, delta_inv(f)) == f, where + " delta(delta_inv(f)) on a hom over C_nu");
      }
    }
    for (int s = 0; s <= ks.b; ++s) {
      for (const QuotientElement& c : base_prime->basis()) {
        ModuleHom f{ks, HomSpace::over_nu_prime,
                    std::vector<QuotientElement>(static_cast<std::size_t>(ks.b + 1), base_prime->zero())};
        f.values[static_cast<std::size_t>(s)] = c;
        iso.expect(delta_prime(ks, delta_prime_inv(f)) == f, where + " delta'(delta'_inv(f)) on a hom over C_nu'");
      }
    }

    // delta(c' g c)(x) = delta(g)(c' c x) with c' in C_nu', c in C_nu
    bool all = n <= 3;
    auto cs = low_degree(*base, all);
    auto cps = low_degree(*base_prime, all);
    for (const QuotientElement& g : pb) {
      ModuleHom dg = delta(ks, g);
      ModuleHom dgp = delta_prime(ks, g);
      for (const QuotientElement& cp : cps) {
        for (const QuotientElement& c : cs) {
          QuotientElement cc = to_pair(ks, cp) * to_pair(ks, c);
          ModuleHom lhs = delta(ks, cc * g);
          bool ok = true;
          for (int s = 0; s <= ks.a; ++s) ok = ok && lhs.values[static_cast<std::size_t>(s)] == dg(cc * xk_power(ks, s));
          linear.expect(ok, where + " delta not bilinear at " + g.to_string());
          ModuleHom lhs2 = delta_prime(ks, cc * g);
          ok = true;
          for (int s = 0; s <= ks.b; ++s) ok = ok && lhs2.values[static_cast<std::size_t>(s)] == dgp(cc * xk_power(ks, s));
          linear.expect(ok, where + " delta' not bilinear at " + g.to_string());
        }
      }
    }

    // tensor-hom isomorphism with M the pair algebra viewed as a C_nu-module
    for (int r = 0; r <= ks.a; ++r) {
      for (const QuotientElement& m : pb) {
        MTensor t = m_pure(ks, xk_power(ks, r), m);
        tensor_hom.expect(m_phi_inv(ks, m_phi(ks, t)) == t, where + " inverse fails on x_k^" + std::to_string(r) + " (x) " +
                                                          m.to_string());
      }
    }
    auto small = low_degree(*pair, n <= 3);
    for (const QuotientElement& g : small) {
      for (const QuotientElement& m : small) {
        MTensor t = m_pure(ks, g, m);
        auto phi = m_phi(ks, t);
        // agrees with delta(g) followed by multiplication into M
        ModuleHom dg = delta(ks, g);
        bool ok = true;
        for (int s = 0; s <= ks.a; ++s) {
          ok = ok && phi[static_cast<std::size_t>(s)] == to_pair(ks, dg.values[static_cast<std::size_t>(s)]) * m;
        }
        tensor_hom.expect(ok, where + " differs from delta on " + g.to_string() + " (x) " + m.to_string());
        for (const QuotientElement& c : cs) {
          QuotientElement cp = to_pair(ks, c);
          tensor_hom.expect(m_pure(ks, g * cp, m) == m_pure(ks, g, cp * m), where + " not balanced");
        }
        for (const QuotientElement& c : small) {
          // the module map M -> M given by multiplication by c
          MTensor moved = m_pure(ks, g, c * m);
          auto lhs = m_phi(ks, moved);
          bool nat = true;
          for (std::size_t s = 0; s < lhs.size(); ++s) nat = nat && lhs[s] == c * phi[s];
          MTensor back = m_phi_inv(ks, lhs);
          tensor_hom.expect(nat && back == moved, where + " not natural for multiplication by " + c.to_string());
        }
      }
    }

    triangle_identity_check(ks, &triangle);

    for (const QuotientElement& z : base->basis()) {
      central.expect(trace_F(ks, z, true) == trace_F(ks, z, false), where + " trace_F sides differ on " + z.to_string());
    }
    for (const QuotientElement& z : base_prime->basis()) {
      central.expect(trace_E(ks, z, true) == trace_E(ks, z, false), where + " trace_E sides differ on " + z.to_string());
    }
  }
  double secs = since(t0);
  for (Check* c : {&iso, &linear, &tensor_hom, &triangle, &central}) {
    c->seconds = secs / 5;
    rep.checks.push_back(*c);
  }
  return rep;
}

}  // namespace coinv

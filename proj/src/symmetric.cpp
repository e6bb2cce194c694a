#include "coinv/symmetric.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <tuple>
#include <unordered_map>

#include "coinv/errors.hpp"

namespace coinv {

namespace {

std::vector<int> drop_zeros(const std::vector<int>& blocks) {
  std::vector<int> out;
  for (int b : blocks) {
    if (b < 0) throw InvalidInput("negative block size");
    if (b > 0) out.push_back(b);
  }
  return out;
}

int inversion_sign(const std::array<std::uint8_t, kMaxVars>& w, int n) {
  int inv = 0;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) inv += w[x] > w[y];
  }
  return inv % 2 ? -1 : 1;
}

void check_ring(const Polynomial& f, const Composition& nu) {
  if (f.nvars() != nu.total()) {
    throw InvalidInput("composition total " + std::to_string(nu.total()) +
                       " differs from the number of variables " + std::to_string(f.nvars()));
  }
}

Polynomial signed_average(const Polynomial& f, const Composition& nu, bool alternating) {
  check_ring(f, nu);
  const auto& group = young_subgroup(nu.nonzero_parts());
  int n = f.nvars();
  std::unordered_map<std::uint64_t, Rational> acc;
  for (const Term& t : f.terms()) {
    for (const SignedPermutation& w : group) {
      Monomial m = permute(w, t.m, n);
      if (alternating && w.sign < 0) {
        acc[m.bits] -= t.c;
      } else {
        acc[m.bits] += t.c;
      }
    }
  }
  Rational scale(1, static_cast<unsigned long>(group.size()));
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [bits, c] : acc) {
    if (c == 0) continue;
    Monomial m{bits, 0};
    for (int j = 1; j <= n; ++j) m.deg += m.exp(j);
    terms.push_back({m, c * scale});
  }
  return Polynomial(n, std::move(terms));
}

enum class Kind { elementary, complete };

Polynomial build_symmetric(int n, const std::vector<int>& vars, int r, Kind kind) {
  std::vector<Term> terms;
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (left == 0) {
      terms.push_back({Monomial::from_exponents(exps), 1});
      return;
    }
    if (pos == vars.size()) return;
    int most = kind == Kind::elementary ? 1 : left;
    auto slot = static_cast<std::size_t>(vars[pos] - 1);
    for (int e = std::min(most, left); e >= 0; --e) {
      exps[slot] = e;
      rec(pos + 1, left - e);
    }
    exps[slot] = 0;
  };
  rec(0, r);
  return Polynomial(n, std::move(terms));
}

Polynomial cached_symmetric(int n, std::vector<int> vars, int r, Kind kind) {
  if (n < 0 || n > kMaxVars) throw InvalidInput("variable count out of range");
  std::sort(vars.begin(), vars.end());
  if (std::adjacent_find(vars.begin(), vars.end()) != vars.end()) {
    throw InvalidInput("repeated variable in symmetric function");
  }
  for (int v : vars) {
    if (v < 1 || v > n) throw InvalidInput("variable index out of range");
  }
  if (r < 0) return Polynomial(n);
  if (r == 0) return Polynomial::constant(n, 1);
  if (kind == Kind::elementary && r > static_cast<int>(vars.size())) return Polynomial(n);
  if (vars.empty()) return Polynomial(n);

  unsigned mask = 0;
  for (int v : vars) mask |= 1u << (v - 1);
  using Key = std::tuple<int, unsigned, int, int>;
  static std::mutex mu;
  static std::map<Key, Polynomial> cache;
  Key key{n, mask, r, static_cast<int>(kind)};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Polynomial p = build_symmetric(n, vars, r, kind);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(p)).first->second;
}

Polynomial block_convolution(const Composition& nu, const std::vector<int>& indices, int r, Kind kind) {
  block_union(nu, indices);  // validates distinctness
  int n = nu.total();
  if (r < 0) return Polynomial(n);
  // series[t] = degree-t part of the product over the blocks handled so far
  std::vector<Polynomial> series(static_cast<std::size_t>(r + 1), Polynomial(n));
  series[0] = Polynomial::constant(n, 1);
  for (int i : indices) {
    auto vars = block_vars(nu, i);
    std::vector<Polynomial> next(series.size(), Polynomial(n));
    for (int t = 0; t <= r; ++t) {
      for (int s = 0; s <= t; ++s) {
        Polynomial f = cached_symmetric(n, vars, s, kind);
        if (f.is_zero() || series[static_cast<std::size_t>(t - s)].is_zero()) continue;
        next[static_cast<std::size_t>(t)] += series[static_cast<std::size_t>(t - s)] * f;
      }
    }
    series = std::move(next);
  }
  return series[static_cast<std::size_t>(r)];
}

}  // namespace

const std::vector<SignedPermutation>& young_subgroup(const std::vector<int>& raw_blocks) {
  std::vector<int> blocks = drop_zeros(raw_blocks);
  int n = std::accumulate(blocks.begin(), blocks.end(), 0);
  if (n > kMaxVars) throw InvalidInput("too many variables for a permutation group");
  static std::mutex mu;
  static std::map<std::vector<int>, std::vector<SignedPermutation>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(blocks);
  if (it != cache.end()) return it->second;

  std::vector<SignedPermutation> group;
  SignedPermutation w;
  for (int j = 0; j < kMaxVars; ++j) w.image[j] = static_cast<std::uint8_t>(j + 1);
  std::function<void(std::size_t, int)> rec = [&](std::size_t b, int start) {
    if (b == blocks.size()) {
      w.sign = inversion_sign(w.image, n);
      group.push_back(w);
      return;
    }
    auto first = w.image.begin() + start;
    auto last = first + blocks[b];
    std::sort(first, last);
    do {
      rec(b + 1, start + blocks[b]);
    } while (std::next_permutation(first, last));
    std::sort(first, last);
  };
  rec(0, 0);
  return cache.emplace(blocks, std::move(group)).first->second;
}

Monomial permute(const SignedPermutation& w, const Monomial& m, int n) {
  Monomial out{0, m.deg};
  for (int j = 1; j <= n; ++j) {
    out.bits |= static_cast<std::uint64_t>(m.exp(j)) << (8 * (kMaxVars - w.image[j - 1]));
  }
  return out;
}

Polynomial symmetrize(const Polynomial& f, const Composition& nu) { return signed_average(f, nu, false); }

Polynomial antisymmetrize(const Polynomial& f, const Composition& nu) { return signed_average(f, nu, true); }

Polynomial e_sym(int n, const std::vector<int>& vars, int r) {
  return cached_symmetric(n, vars, r, Kind::elementary);
}

Polynomial h_sym(int n, const std::vector<int>& vars, int r) {
  return cached_symmetric(n, vars, r, Kind::complete);
}

Polynomial e_all(int n, int r) {
  std::vector<int> vars(static_cast<std::size_t>(n));
  std::iota(vars.begin(), vars.end(), 1);
  return e_sym(n, vars, r);
}

Polynomial h_all(int n, int r) {
  std::vector<int> vars(static_cast<std::size_t>(n));
  std::iota(vars.begin(), vars.end(), 1);
  return h_sym(n, vars, r);
}

std::vector<int> block_vars(const Composition& nu, int i) {
  int start = nu.prefix_sum(i - 1);
  std::vector<int> out(static_cast<std::size_t>(nu[i]));
  std::iota(out.begin(), out.end(), start + 1);
  return out;
}

std::vector<int> block_union(const Composition& nu, const std::vector<int>& indices) {
  std::set<int> seen;
  std::vector<int> out;
  for (int i : indices) {
    if (!seen.insert(i).second) throw InvalidInput("repeated block index " + std::to_string(i));
    auto vars = block_vars(nu, i);
    out.insert(out.end(), vars.begin(), vars.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Polynomial e_block(const Composition& nu, const std::vector<int>& indices, int r) {
  return e_sym(nu.total(), block_union(nu, indices), r);
}

Polynomial h_block(const Composition& nu, const std::vector<int>& indices, int r) {
  return h_sym(nu.total(), block_union(nu, indices), r);
}

Polynomial e_block_convolution(const Composition& nu, const std::vector<int>& indices, int r) {
  return block_convolution(nu, indices, r, Kind::elementary);
}

Polynomial h_block_convolution(const Composition& nu, const std::vector<int>& indices, int r) {
  return block_convolution(nu, indices, r, Kind::complete);
}

Polynomial eps_blocks(int n, const std::vector<int>& raw_blocks) {
  std::vector<int> blocks = drop_zeros(raw_blocks);
  if (std::accumulate(blocks.begin(), blocks.end(), 0) != n) {
    throw InvalidInput("block sizes do not sum to the variable count");
  }
  Polynomial p = Polynomial::constant(n, 1);
  std::uint64_t order = 1;
  int start = 1;
  for (int b : blocks) {
    order *= factorial(b);
    for (int x = start; x < start + b; ++x) {
      for (int y = x + 1; y < start + b; ++y) {
        p = p * (Polynomial::variable(n, x) - Polynomial::variable(n, y));
      }
    }
    start += b;
  }
  return p * Rational(1, static_cast<unsigned long>(order));
}

Polynomial eps_full(int n) { return eps_blocks(n, n > 0 ? std::vector<int>{n} : std::vector<int>{}); }

Polynomial eps_nu(const Composition& nu) { return eps_blocks(nu.total(), nu.nonzero_parts()); }

Polynomial eps_pair(const Composition& nu, const Composition& nu_prime) {
  auto ks = KeySituation::between(nu, nu_prime);
  if (!ks) throw InvalidInput("not a key-situation pair: " + nu.to_string() + " -> " + nu_prime.to_string());
  return eps_blocks(nu.total(), ks->rho.parts());
}

}  // namespace coinv

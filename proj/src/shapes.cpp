#include "coinv/shapes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "coinv/errors.hpp"

namespace coinv {

Composition::Composition(int lo, std::vector<int> parts) {
  for (int p : parts) {
    if (p < 0) throw InvalidInput("composition parts must be non-negative");
  }
  auto first = std::find_if(parts.begin(), parts.end(), [](int p) { return p != 0; });
  if (first == parts.end()) {
    return;  // empty composition, canonical lo = 0
  }
  auto last = std::find_if(parts.rbegin(), parts.rend(), [](int p) { return p != 0; }).base();
  lo_ = lo + static_cast<int>(first - parts.begin());
  parts_.assign(first, last);
  total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition Composition::from_partition(const Partition& p, int lo) {
  return Composition(lo, p.parts());
}

Composition Composition::regular(int n, int lo) {
  return Composition(lo, std::vector<int>(static_cast<std::size_t>(n), 1));
}

int Composition::operator[](int i) const {
  if (i < lo_ || i > hi()) return 0;
  return parts_[static_cast<std::size_t>(i - lo_)];
}

int Composition::prefix_sum(int i) const {
  int s = 0;
  for (int j = lo_; j <= std::min(i, hi()); ++j) s += (*this)[j];
  return s;
}

std::vector<int> Composition::nonzero_parts() const {
  std::vector<int> out;
  for (int p : parts_) {
    if (p > 0) out.push_back(p);
  }
  return out;
}

std::vector<int> Composition::support() const {
  std::vector<int> out;
  for (int i = lo_; i <= hi(); ++i) {
    if ((*this)[i] > 0) out.push_back(i);
  }
  return out;
}

bool Composition::is_regular() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p <= 1; });
}

Composition Composition::adjusted(int i, int delta) const {
  int lo = std::min(empty() ? i : lo_, i);
  int hi = std::max(empty() ? i : this->hi(), i);
  std::vector<int> parts(static_cast<std::size_t>(hi - lo + 1), 0);
  for (int j = lo; j <= hi; ++j) parts[static_cast<std::size_t>(j - lo)] = (*this)[j];
  parts[static_cast<std::size_t>(i - lo)] += delta;
  return Composition(lo, std::move(parts));
}

std::string Composition::to_string() const {
  std::string s;
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(parts_[j]);
  }
  return s + "@" + std::to_string(lo_);
}

Partition::Partition(std::vector<int> parts) {
  for (int p : parts) {
    if (p < 0) throw InvalidInput("partition parts must be non-negative");
  }
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>())) {
    throw InvalidInput("partition parts must be weakly decreasing");
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  parts_ = std::move(parts);
  total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int j) const {
  if (j < 1 || j > length()) return 0;
  return parts_[static_cast<std::size_t>(j - 1)];
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(parts_[j]);
  }
  return s + ")";
}

namespace {

Partition transpose_parts(const std::vector<int>& parts) {
  int longest = parts.empty() ? 0 : *std::max_element(parts.begin(), parts.end());
  std::vector<int> out(static_cast<std::size_t>(longest), 0);
  for (int p : parts) {
    for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(out));
}

}  // namespace

Partition transpose(const Composition& mu) { return transpose_parts(mu.parts()); }

Partition transpose(const Partition& lam) { return transpose_parts(lam.parts()); }

Partition sort_to_partition(const Composition& nu) {
  std::vector<int> parts = nu.nonzero_parts();
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

bool dominates(const Partition& lam, const Partition& kap) {
  if (lam.total() != kap.total()) {
    throw InvalidInput("dominance compares partitions of different totals");
  }
  int a = 0;
  int b = 0;
  int len = std::max(lam.length(), kap.length());
  for (int m = 1; m <= len; ++m) {
    a += lam.part(m);
    b += kap.part(m);
    if (a < b) return false;
  }
  return true;
}

int d_nu(const Composition& nu) {
  int n = nu.total();
  int d = n * (n - 1);
  for (int p : nu.parts()) d -= p * (p - 1);
  return d;
}

std::optional<int> d_mu_nu(const Composition& mu, const Composition& nu) {
  Partition lam = transpose(mu);
  if (lam.total() != nu.total()) {
    throw InvalidInput("mu and nu must be compositions of the same n");
  }
  if (!dominates(lam, sort_to_partition(nu))) return std::nullopt;
  int d = 0;
  for (int l : lam.parts()) d += l * (l - 1);
  for (int p : nu.parts()) d -= p * (p - 1);
  return d;
}

std::vector<Composition> compositions_of(int n, int lo, int hi) {
  if (hi < lo) throw InvalidInput("empty index window");
  std::vector<Composition> out;
  std::vector<int> parts(static_cast<std::size_t>(hi - lo + 1), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (pos + 1 == parts.size()) {
      parts[pos] = left;
      out.emplace_back(lo, parts);
      return;
    }
    for (int v = left; v >= 0; --v) {
      parts[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, n);
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int j = 2; j <= n; ++j) f *= static_cast<std::uint64_t>(j);
  return f;
}

KeySituation KeySituation::at(const Composition& nu, int i) {
  if (nu[i] <= 0) throw InvalidInput("no key situation: nu_" + std::to_string(i) + " is zero");
  KeySituation ks;
  ks.i = i;
  ks.nu = nu;
  ks.nu_prime = nu.adjusted(i, -1).adjusted(i + 1, 1);
  ks.a = nu[i] - 1;
  ks.b = nu[i + 1];
  ks.k = nu.prefix_sum(i);
  std::vector<int> parts;
  for (int j = nu.lo(); j <= nu.hi(); ++j) {
    if (j == i) {
      parts.push_back(ks.a);
      parts.push_back(1);
    } else {
      parts.push_back(nu[j]);
    }
  }
  std::erase(parts, 0);
  ks.rho = Composition(1, std::move(parts));
  return ks;
}

std::optional<KeySituation> KeySituation::between(const Composition& nu, const Composition& nu_prime) {
  if (nu.total() != nu_prime.total() || nu.empty()) return std::nullopt;
  for (int i = nu.lo(); i <= nu.hi(); ++i) {
    if (nu[i] > 0 && nu.adjusted(i, -1).adjusted(i + 1, 1) == nu_prime) return at(nu, i);
  }
  return std::nullopt;
}

}  // namespace coinv

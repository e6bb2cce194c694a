#include "coinv/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "coinv/errors.hpp"

namespace coinv {

bool Tableau::column_strict() const {
  for (std::size_t r = 1; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (rows[r][c] <= rows[r - 1][c]) return false;
    }
  }
  return true;
}

bool Tableau::rows_weakly_increasing() const {
  for (const auto& row : rows) {
    if (!std::is_sorted(row.begin(), row.end())) return false;
  }
  return true;
}

std::vector<int> Tableau::reading_word() const {
  std::vector<int> w;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
  return w;
}

IntPolynomial::IntPolynomial(std::vector<long> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

long IntPolynomial::coeff(int r) const {
  return r >= 0 && r < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(r)] : 0;
}

long IntPolynomial::at_one() const {
  long s = 0;
  for (long c : coeffs_) s += c;
  return s;
}

void IntPolynomial::add_term(int r, long c) {
  if (r < 0) throw InvalidInput("negative power of t");
  if (static_cast<int>(coeffs_.size()) <= r) coeffs_.resize(static_cast<std::size_t>(r) + 1, 0);
  coeffs_[static_cast<std::size_t>(r)] += c;
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string IntPolynomial::to_string() const {
  std::string s;
  for (std::size_t r = 0; r < coeffs_.size(); ++r) {
    long c = coeffs_[r];
    if (c == 0) continue;
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    long a = c < 0 ? -c : c;
    std::string power = r == 0 ? "" : r == 1 ? "t" : "t^" + std::to_string(r);
    if (power.empty()) s += std::to_string(a);
    else if (a == 1) s += power;
    else s += std::to_string(a) + "*" + power;
  }
  return s.empty() ? "0" : s;
}

namespace {

// Fill the shape row by row, trying values in increasing order.
std::vector<Tableau> fill(const Partition& lam, const Composition& nu, bool semistandard) {
  std::vector<Tableau> out;
  if (lam.total() != nu.total()) return out;
  std::vector<int> values = nu.support();
  std::vector<int> left;
  for (int v : values) left.push_back(nu[v]);

  Tableau t;
  t.shape = lam;
  for (int p : lam.parts()) t.rows.emplace_back(static_cast<std::size_t>(p), 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t r, std::size_t c) {
    if (r == t.rows.size()) {
      out.push_back(t);
      return;
    }
    if (c == t.rows[r].size()) {
      rec(r + 1, 0);
      return;
    }
    for (std::size_t v = 0; v < values.size(); ++v) {
      if (left[v] == 0) continue;
      int x = values[v];
      if (r > 0 && x <= t.rows[r - 1][c]) continue;
      if (semistandard && c > 0 && x < t.rows[r][c - 1]) continue;
      --left[v];
      t.rows[r][c] = x;
      rec(r, c + 1);
      ++left[v];
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace

long count_column_strict(const Partition& lam, const Composition& nu) {
  if (lam.total() != nu.total()) return 0;
  std::vector<int> cols = transpose(lam).parts();
  std::vector<int> content;
  for (int v : nu.support()) content.push_back(nu[v]);
  // Each column is a strictly increasing sequence, i.e. a subset of the
  // values; count sequences of subsets using up the content exactly.
  std::map<std::pair<std::size_t, std::vector<int>>, long> memo;
  std::function<long(std::size_t, std::vector<int>&)> count = [&](std::size_t j, std::vector<int>& rem) -> long {
    if (j == cols.size()) return 1;
    auto key = std::make_pair(j, rem);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    long total = 0;
    std::function<void(std::size_t, int)> pick = [&](std::size_t v, int need) {
      if (need == 0) {
        total += count(j + 1, rem);
        return;
      }
      if (rem.size() - v < static_cast<std::size_t>(need)) return;
      if (rem[v] > 0) {
        --rem[v];
        pick(v + 1, need - 1);
        ++rem[v];
      }
      pick(v + 1, need);
    };
    pick(0, cols[j]);
    memo.emplace(std::move(key), total);
    return total;
  };
  return count(0, content);
}

std::vector<Tableau> enumerate_column_strict(const Partition& lam, const Composition& nu) {
  return fill(lam, nu, false);
}

std::vector<Tableau> enumerate_semistandard(const Partition& lam, const Composition& nu) {
  return fill(lam, nu, true);
}

long kostka(const Partition& lam, const Composition& nu) {
  return static_cast<long>(enumerate_semistandard(lam, nu).size());
}

int charge_word(const std::vector<int>& word) {
  std::map<int, int> content;
  for (int x : word) ++content[x];
  int expected = 1;
  int prev = -1;
  for (const auto& [letter, count] : content) {
    if (letter != expected++ || (prev >= 0 && count > prev)) {
      throw InvalidInput("charge needs a word whose content is a partition");
    }
    prev = count;
  }

  std::vector<bool> used(word.size(), false);
  std::size_t remaining = word.size();
  int total = 0;
  auto n = static_cast<long>(word.size());
  while (remaining > 0) {
    // rightmost unused 1
    long pos = -1;
    for (long p = n - 1; p >= 0; --p) {
      if (!used[static_cast<std::size_t>(p)] && word[static_cast<std::size_t>(p)] == 1) {
        pos = p;
        break;
      }
    }
    used[static_cast<std::size_t>(pos)] = true;
    --remaining;
    int index = 0;
    // then 2, 3, ... scanning leftwards cyclically; wrapping raises the index
    for (int r = 2;; ++r) {
      long found = -1;
      bool wrapped = false;
      for (long p = pos - 1; p >= 0 && found < 0; --p) {
        if (!used[static_cast<std::size_t>(p)] && word[static_cast<std::size_t>(p)] == r) found = p;
      }
      for (long p = n - 1; p > pos && found < 0; --p) {
        if (!used[static_cast<std::size_t>(p)] && word[static_cast<std::size_t>(p)] == r) {
          found = p;
          wrapped = true;
        }
      }
      if (found < 0) break;
      if (wrapped) ++index;
      total += index;
      used[static_cast<std::size_t>(found)] = true;
      --remaining;
      pos = found;
    }
  }
  return total;
}

int charge(const Tableau& t) { return charge_word(t.reading_word()); }

IntPolynomial kostka_foulkes(const Partition& tau, const Composition& mu) {
  IntPolynomial out;
  if (tau.total() != mu.total()) return out;
  Composition content = Composition::from_partition(sort_to_partition(mu), 1);
  for (const Tableau& t : enumerate_semistandard(tau, content)) out.add_term(charge(t), 1);
  return out;
}

}  // namespace coinv

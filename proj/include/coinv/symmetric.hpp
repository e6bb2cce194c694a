#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "coinv/polynomial.hpp"
#include "coinv/shapes.hpp"

namespace coinv {

struct SignedPermutation {
  std::array<std::uint8_t, kMaxVars> image{};  // image[j-1] = w(j)
  int sign = 1;
};

/// All elements of the Young subgroup permuting consecutive blocks of the given
/// sizes (zeros ignored). Cached; the identity comes first.
const std::vector<SignedPermutation>& young_subgroup(const std::vector<int>& blocks);

Monomial permute(const SignedPermutation& w, const Monomial& m, int n);

/// (1/|S_nu|) sum_w w.f
Polynomial symmetrize(const Polynomial& f, const Composition& nu);
/// (1/|S_nu|) sum_w sgn(w) w.f
Polynomial antisymmetrize(const Polynomial& f, const Composition& nu);

/// Elementary / complete symmetric polynomial of degree r in the listed
/// variables of the ring Q[x_1..x_n]. Zero for r < 0, and e_r = 0 for r > |vars|.
Polynomial e_sym(int n, const std::vector<int>& vars, int r);
Polynomial h_sym(int n, const std::vector<int>& vars, int r);
/// Shorthand for all n variables.
Polynomial e_all(int n, int r);
Polynomial h_all(int n, int r);

/// The variables x_j of block X_i: sum_{h<i} nu_h < j <= sum_{h<=i} nu_h.
std::vector<int> block_vars(const Composition& nu, int i);
/// Union of blocks; throws InvalidInput on a repeated index.
std::vector<int> block_union(const Composition& nu, const std::vector<int>& indices);

/// e_r(nu; i_1..i_m), h_r(nu; i_1..i_m) as symmetric polynomials in the union of blocks.
Polynomial e_block(const Composition& nu, const std::vector<int>& indices, int r);
Polynomial h_block(const Composition& nu, const std::vector<int>& indices, int r);
/// The same elements built as sum_{r_1+..+r_m=r} prod_j e_{r_j}(nu; i_j).
Polynomial e_block_convolution(const Composition& nu, const std::vector<int>& indices, int r);
Polynomial h_block_convolution(const Composition& nu, const std::vector<int>& indices, int r);

/// (1/n!) prod_{i<j} (x_i - x_j)
Polynomial eps_full(int n);
/// (1/|S_nu|) prod over pairs i<j in a common block of nu.
Polynomial eps_nu(const Composition& nu);
/// Same for the intersection of S_nu and S_nu'; throws InvalidInput unless
/// nu' arises from nu by moving one unit from some index i to i+1.
Polynomial eps_pair(const Composition& nu, const Composition& nu_prime);
/// Block-size form shared by the three above.
Polynomial eps_blocks(int n, const std::vector<int>& blocks);

}  // namespace coinv

#pragma once

#include <string>
#include <vector>

#include "coinv/report.hpp"

namespace coinv {

struct SuiteOptions {
  int n = 3;       // sizes 1..n are swept
  int lo = 1;      // index window for weights
  int hi = 4;
  int r_max = -1;  // identity degrees; -1 means 2n
};

/// Window used when none is given: [1, max(n, 4)].
SuiteOptions default_options(int n);

/// Symmetric-function identities as exact polynomial identities over all
/// splits of subsets of {1..n}, the block identities in C_nu, divisibility
/// of antisymmetric polynomials by eps_nu, and block convolutions.
Report identity_suite(int n, int r_max);

/// h-form and e-form generating sets give the same ideal; regular mu gives
/// the coinvariant ideal; extra zero blocks in the h-form change nothing.
Report ideals_equal_suite(const SuiteOptions& opt);

/// dim C = n!, dim C_nu = |S_n/S_nu|, Poincare symmetry, and the dimension,
/// vanishing and top-degree statements for every (mu, nu) in the window.
Report dims_suite(const SuiteOptions& opt);

Report relations_suite(const SuiteOptions& opt);
Report ideal_invariance_suite(const SuiteOptions& opt);
Report weights_suite(const SuiteOptions& opt);
Report hilbert_suite(const SuiteOptions& opt);
Report traces_suite(const SuiteOptions& opt);

/// dim C^mu_nu next to the number of column-strict lambda-tableaux of type nu,
/// for mu over partitions and nu over the window.
Table center_dimension_table(const SuiteOptions& opt);

const std::vector<std::string>& suite_names();
/// Runs one suite by name ("all" runs every suite and adds the center
/// dimension table). Throws InvalidInput for an unknown name.
Report run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace coinv

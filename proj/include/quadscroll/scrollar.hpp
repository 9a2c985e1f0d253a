#pragma once

// Scrollar invariants of the pencil cut by vertical lines on the
// normalization C of a nodal curve of type (k, a) whose nodes sit on k-1
// horizontal lines.
//
// Two independent routes:
//   * closed form: the multiset {a - y_i - 2};
//   * ladder: |omega_C - m g^1_k| is cut by forms of bidegree (k-2, a-2-m)
//     through the nodes, so its dimension is a rank computation. The
//     differences f(n) = h0(omega_C - (n-1) g) - h0(omega_C - n g) then give
//     e_i + 2 = min{ n : f(n) < k - i }.

#include <string>
#include <vector>

#include "quadscroll/linear_systems.hpp"

namespace quadscroll {

struct LadderTable {
  int m_max = 0;
  std::vector<int> canonical_dims;  // m = 0..m_max, projective (-1 = empty)
  std::vector<int> f_values;        // n = 1..m_max
};

enum class ProfileSource { closed_form, ladder };

struct ScrollarProfile {
  int k = 0;
  int a = 0;
  std::vector<int> ys;
  std::vector<int> es;  // ascending
  int genus = 0;
  ProfileSource source = ProfileSource::closed_form;
  /// 1-based starts s_0 = 1 < s_1 < ... < s_t = k of the runs of equal y_i.
  std::vector<int> block_starts;
};

/// Throws std::invalid_argument when a < y_1 + 2.
ScrollarProfile scrollar_closed_form(const NodeConfiguration& cfg);

/// dim |(k-2, a-2-m) - D_1 - ... - D_{k-1}|, i.e. dim |omega_C - m g^1_k|.
int canonical_dim(const NodeConfiguration& cfg, int m);

/// canonical_dim for m = 0..a and the differences f(1..a).
LadderTable compute_ladder(const NodeConfiguration& cfg);

/// Reads e_1..e_{k-1} off the ladder. genus = canonical_dims[0] + 1.
/// Throws std::runtime_error when f never drops low enough.
ScrollarProfile scrollar_from_ladder(const LadderTable& table, int k);

/// h0(n g^1_k) = n k - g + 1 + h0(omega_C - n g^1_k).
int h0_pencil_multiples(const NodeConfiguration& cfg, int n);

/// (k-1)(a-1) - sum y_i.
int arithmetic_genus_minus_nodes(const NodeConfiguration& cfg);

std::vector<int> block_starts(const std::vector<int>& ys, int k);

struct CrossValidation {
  bool agree = false;
  ScrollarProfile closed_form;
  ScrollarProfile ladder;
  LadderTable table;
  std::string diff;  // empty when the routes agree
};

CrossValidation cross_validate(const NodeConfiguration& cfg);

}  // namespace quadscroll

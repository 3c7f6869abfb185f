#pragma once

// Reduction of basis combinations. Integration by parts gives
//   b_k = (k+1) p_{k+2} - k p_k
//   c_k = (k+1) q_{k+2} - k q_k + p_{k+2} - p_k
//   d_k = -k a_k + p_k
//   e_k = s_k + k r_k - (k+1) r_{k+2}
//   f_k = -r_k + k s_k
// which remove the derived families, and the recurrences
//   p_{k+2} = (1+k^2) p_k / (k(k+1))
//   q_{k+2} = ((1+k^2) q_k - (2k+1) p_{k+2} + 2k p_k) / (k(k+1))
//   r_{k+2} = ((k^2-3) r_k + 2k s_k + 2 sqrt2 p_{k+2}) / (k(k+1))
//   s_{k+2} = ((k^2-3) s_k + 2(k+1) r_{k+2} - 2k r_k
//              + 2 sqrt2 (k+3) p_{k+4} - 2 sqrt2 (k+2) p_{k+2}) / ((k+1)(k+2))
//   a_{k+2} = ((1+k^2) a_k - 2k p_k + 2(k+1) p_{k+2}) / ((k+1)(k+2))
// which bring every index down to the core {p1, q1, a1, r1, s1} (or the
// index-2 analogues for even k).
//
// The a-recurrence follows from a_k = -b_k + k d_k - (k+1) d_{k+2}.

#include <string>
#include <vector>

#include "fgr/basis.hpp"

namespace fgr {

enum class Stage { Raw, DerivedEliminated, Core };

std::string to_string(Stage s);
Stage stage_from_string(std::string_view s);

BasisCombo eliminate_derived(const BasisCombo& c);
BasisCombo reduce_p(const BasisCombo& c);
BasisCombo reduce_q(const BasisCombo& c);
BasisCombo reduce_rs(const BasisCombo& c);
BasisCombo reduce_a(const BasisCombo& c);

/// eliminate_derived, then p, q, rs, a.
BasisCombo reduce_full(const BasisCombo& c);

BasisCombo reduce_to_stage(const BasisCombo& c, Stage stage);

/// True when every index is odd and at most `max_k`.
bool within_standard_range(const BasisCombo& c, int max_k = 9);

/// One application of a relation: lhs == rhs, with rhs not yet reduced further.
struct RewriteRule {
  std::string name;
  BasisIntegral lhs;
  BasisCombo rhs;
};

/// The five derived-family relations and the five recurrences instantiated
/// at index k (recurrences produce index k+2 from lower indices).
std::vector<RewriteRule> rewrite_rules(int k);

}  // namespace fgr

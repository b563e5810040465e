#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "lcomplex/engine.hpp"
#include "lcomplex/report.hpp"

namespace lcx {

// Computational checks of the closed-form results, conjectures and open
// questions about l-complexity. Every check reads prebuilt tables and is
// safe to run concurrently with the others.

/// ||2^m 6^r||_2 = m + 3r (r <= 7) and within [m+3r-1, m+3r] (r = 8, 9);
/// ||2^m 10^r||_2 = m + 4r (r <= 4) and within [m+19, m+20] (r = 5). Covers
/// whatever prefix of those families the table reaches.
VerificationReport verify_six_ten(const ComplexityTable& table2);

/// ||2^m 6^r||_2 = m + 3r and ||2^m 10^r||_2 = m + 4r for 1 <= r <= r_max,
/// 0 <= m <= m_max, in range.
VerificationReport verify_conjecture_l2(const ComplexityTable& table2, unsigned r_max, unsigned m_max);

/// ||2^m (2^u + 2)^r||_2 = m + (u+1) r for 2 <= u <= u_max.
VerificationReport verify_question4(const ComplexityTable& table2, unsigned u_max, unsigned r_max, unsigned m_max);

using TableFactory = std::function<ComplexityTable(u64 l)>;

/// ||l^m (k l)^r||_l = m + k r for k in {2, 3}, k not dividing l, 2 <= l <= l_max.
VerificationReport verify_question2(u64 l_max, unsigned r_max, unsigned m_max, const TableFactory& make_table);

/// ||2^a 3^b||_1 = 2a + 3b for a >= 1.
VerificationReport verify_conjecture_l1(const ComplexityTable& table1, unsigned a_max, unsigned b_max);

// ---------------------------------------------------------------------------
// A_l = { n : ||l^m n||_l = m + ||n||_l for all m >= 0 }
// ---------------------------------------------------------------------------

struct ASetStatus {
  enum class Verdict { NonMember, NoViolationUpTo };

  u64 n;
  Verdict verdict;
  unsigned m;  // least violating m for NonMember, checked limit otherwise
};

/// Largest m with l^m * n <= table.max_n().
unsigned max_feasible_m(const ComplexityTable& table, u64 n);

/// Throws RangeExceeded unless l^m_max * n fits the table.
ASetStatus check_a_set(u64 l, u64 n, unsigned m_max, const ComplexityTable& table);

/// Single-n report; m_max defaults to the largest feasible.
VerificationReport verify_a_set(const ComplexityTable& table, u64 n, std::optional<unsigned> m_max);

/// Membership evidence for every n <= n_max, the non-member density, and for
/// each non-member the least m0 after which l^m0 * n shows no violation.
VerificationReport scan_a_set(u64 l, u64 n_max, unsigned m_max, const ComplexityTable& table);

// ---------------------------------------------------------------------------
// Optimal l = 1 representations reread over l = 2
// ---------------------------------------------------------------------------

struct Question5Result {
  VerificationReport report;
  u64 pairs = 0;                  // distinct (n, normalized R) pairs examined
  u64 equal_pairs = 0;            // ||a(n,R)||_2 == ||n||_1
  u64 structural_violations = 0;  // ||a(n,R)||_2 > ||n||_1; must stay zero
  std::vector<u64> capped;        // n whose representation list hit the cap
  /// n (with a complete list) for which no optimal R attains equality
  std::vector<u64> no_equal_representation;
};

/// For each n <= n_max: enumerate optimal l = 1 trees (at most `cap`),
/// normalize runs of ones, replace 1 by 2 and compare ||a(n,R)||_2 with
/// ||n||_1. Values past table2 are resolved by BoundedSearch.
Question5Result verify_question5(u64 n_max, std::size_t cap, const ComplexityTable& table1,
                                 const ComplexityTable& table2);

/// All optimal expressions for n over l = 1, deduplicated, at most `cap`.
/// `complete` reports whether the list is exhaustive.
struct OptimalTrees {
  std::vector<Expr> trees;
  bool complete = true;
};
OptimalTrees enumerate_optimal_trees_l1(u64 n, std::size_t cap, const ComplexityTable& table1);

// ---------------------------------------------------------------------------
// Engine self-checks
// ---------------------------------------------------------------------------

/// Both directions of the m+1 and m+2 classifications against the table,
/// the count law, form reconstruction and the refined lower bound.
VerificationReport verify_classify2_exhaustive(const ComplexityTable& table2);

/// log-growth floor, digit bound, log-growth ceiling, two-power exactness,
/// and for l = 2 the refined floor, for every entry.
VerificationReport verify_bounds(const ComplexityTable& table);

/// Tables built with and without the b + a*l shortcut are identical, and
/// the identity holds entrywise.
VerificationReport verify_reduction(u64 l, u64 max_n);

/// build_table against reachable_sets_oracle up to l^m_max, both ways.
VerificationReport verify_oracle_equivalence(u64 l, unsigned m_max);

/// Witness evaluates to n with ||n||_l leaves, for `samples` random n.
VerificationReport verify_witnesses(const ComplexityTable& table, std::size_t samples, std::uint64_t seed);

/// Re-derives each counterexample's `actual` from the table where the table
/// covers it. True when every covered one reproduces.
bool counterexamples_reproduce(const VerificationReport& report, const ComplexityTable& table);

}  // namespace lcx

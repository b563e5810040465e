#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <unordered_map>
#include <vector>

#include "lcomplex/expr.hpp"
#include "lcomplex/intmath.hpp"

namespace lcx {

// ---------------------------------------------------------------------------
// Bounds
// ---------------------------------------------------------------------------

/// ceil(log_l n) for l >= 2, by exact comparison against powers of l.
unsigned lower_bound(u64 n, u64 l);

/// Lower bound for l = 1: the least k with n^3 <= 3^k, i.e. ceil(3 log_3 n).
unsigned lower_bound_l1(u64 n);

/// Base-l digit bound m_1 + sum(a_i) - 1 for n in lZ+, l >= 2.
unsigned upper_bound_digits(u64 n, u64 l);

/// Whether upper <= l*log_l(n) - 1, decided exactly (l^(upper+1) <= n^l).
bool within_log_growth_ceiling(unsigned upper, u64 n, u64 l);

/// Expression with upper_bound_digits(n, l) leaves built by peeling off the
/// lowest base-l digit: n = l^(e-1) * (rest + a*l) where l^e is the lowest
/// nonzero place.
Expr digit_expression(u64 n, u64 l);

// ---------------------------------------------------------------------------
// Tables
// ---------------------------------------------------------------------------

enum class DivisorMethod : unsigned char { Sieve, TrialDivision };

struct BuildConfig {
  u64 l = 2;
  u64 max_n = 2;
  bool use_reduction = true;  // forced off when l == 1
  unsigned threads = 1;
  DivisorMethod divisors = DivisorMethod::Sieve;
  /// Scan every addition split. Disables the log-growth early stop and the
  /// refined l = 2 skip; only useful for checking them.
  bool exhaustive_additions = false;
};

/// Dense ||n||_l for n = l, 2l, ..., max_n. entries()[i] = ||(i+1) l||_l.
class ComplexityTable {
 public:
  ComplexityTable(u64 l, u64 max_n, std::vector<std::uint8_t> entries);

  u64 l() const noexcept { return l_; }
  u64 max_n() const noexcept { return max_n_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::span<const std::uint8_t> entries() const noexcept { return entries_; }

  bool contains(u64 n) const noexcept { return n >= l_ && n <= max_n_ && n % l_ == 0; }

  /// Checked lookup: throws NotMultipleOfL or OutOfRange.
  unsigned complexity(u64 n) const;

  /// Unchecked lookup; n must satisfy contains(n).
  unsigned operator[](u64 n) const noexcept { return entries_[n / l_ - 1]; }

  friend bool operator==(const ComplexityTable&, const ComplexityTable&) = default;

 private:
  u64 l_;
  u64 max_n_;
  std::vector<std::uint8_t> entries_;
};

/// Throws CapacityExceeded when l*log_l(max_n) - 1 > 255 (entries would not
/// fit a byte), InvalidConfig when max_n is not a positive multiple of l.
void validate_config(const BuildConfig& cfg);

ComplexityTable build_table(const BuildConfig& cfg);

inline unsigned complexity(const ComplexityTable& table, u64 n) { return table.complexity(n); }

/// Minimal expression for n. Tie-break: the b + a*l reduction (l > 1), then
/// the product with the smallest factor, then the sum with the smallest
/// addend.
Expr witness(const ComplexityTable& table, u64 n);

/// ||n||_l - floor(log_l n) for l > 1, so pure powers of l have defect 0.
/// For l = 1 the subtracted term is floor(3 log_3 n).
unsigned defect(const ComplexityTable& table, u64 n);

std::map<unsigned, u64> defect_histogram(const ComplexityTable& table);

/// Factor pairs (a, n/a) with a, n/a in lZ+ and a <= n/a, smallest a first.
/// For l = 1 the trivial pair (1, n) is omitted.
std::vector<u64> small_factors(u64 n, u64 l);

// ---------------------------------------------------------------------------
// Ground truth by enumeration
// ---------------------------------------------------------------------------

struct OracleResult {
  /// value -> least number of leaves that builds it
  std::map<u64, unsigned> complexity;
  /// level_max[m] = largest value buildable with exactly m leaves (index 0 unused)
  std::vector<u64> level_max;
};

/// S_1 = {l}, S_m = { a+b, a*b : a in S_i, b in S_j, i + j = m }.
/// Independent of build_table. Throws Overflow if the values can exceed u64.
OracleResult reachable_sets_oracle(u64 l, unsigned m_max);

// ---------------------------------------------------------------------------
// Values past the end of a table
// ---------------------------------------------------------------------------

/// Exact ||n||_l for n beyond a table's range by branch and bound: iterative
/// deepening on the leaf budget, with the table answering small operands.
/// Not thread-safe (memoizes); use one instance per thread. l >= 2.
class BoundedSearch {
 public:
  explicit BoundedSearch(const ComplexityTable& table);

  unsigned complexity(u64 n);

 private:
  bool fits(u64 n, unsigned budget);
  unsigned floor_of(u64 n) const;

  const ComplexityTable& table_;
  std::unordered_map<u64, unsigned> exact_;
  std::unordered_map<u64, unsigned> refuted_;  // n needs more than this many leaves
};

}  // namespace lcx

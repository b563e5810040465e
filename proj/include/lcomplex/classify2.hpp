#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lcomplex/intmath.hpp"

namespace lcx {

/// Binary expansion of an even n: exponents of the set bits, strictly
/// decreasing, all >= 1.
struct Pow2Decomposition {
  std::vector<unsigned> exponents;

  u64 value() const noexcept;
};

Pow2Decomposition decompose_pow2(u64 n);

// Closed forms of even n whose 2-complexity sits at the logarithmic floor
// (m + 1) or one above it (m + 2), where 2^m < n <= 2^(m+1).
namespace form {

struct PurePower {  // 2^exponent, exponent = m + 1
  unsigned exponent;
};
struct TwoPowers {  // 2^high + 2^low, 1 <= low < high
  unsigned high, low;
};
struct FormA {  // 2^m1 + 2^m2 + 2^m3, m1 > m2 > m3 >= 1
  unsigned m1, m2, m3;
};
struct FormB {  // 2^m1 + 2^m2 + 2^m3 + 2^m4, m1 > m2 > m3 > m4 >= 2, m1 + m4 = m2 + m3
  unsigned m1, m2, m3, m4;
};
struct FormC {  // 2^m1 + 2^(m1-3) + 2^m2 + 2^(m2-1), m1 >= m2 + 3 >= 6
  unsigned m1, m2;
};
struct FormD {  // 2^m + 2^(m-5) + 2^(m-6) + 2^(m-7), m >= 10
  unsigned m;
};

}  // namespace form

using ClassifiedForm =
    std::variant<form::PurePower, form::TwoPowers, form::FormA, form::FormB, form::FormC, form::FormD>;

/// Value the form denotes. FormC with m1 = m2 + 3 merges two terms; the sum
/// is still taken literally.
u64 reconstruct(const ClassifiedForm& f);

/// Whether the parameters satisfy the variant's constraints.
bool parameters_valid(const ClassifiedForm& f);

/// Short tag with parameters, e.g. "FormD{10}".
std::string describe(const ClassifiedForm& f);

/// m with 2^m < n <= 2^(m+1).
inline unsigned floor_exponent(u64 n) noexcept { return ceil_log2(n) - 1; }

/// PurePower or TwoPowers when ||n||_2 = m + 1, otherwise nothing.
std::optional<ClassifiedForm> classify_m_plus_1(u64 n);

/// Every FormA..FormD variant whose reconstruction equals n. The forms
/// overlap, so more than one entry is possible. For m >= 3 an empty result
/// means ||n||_2 >= m + 3.
std::vector<ClassifiedForm> classify_m_plus_2(u64 n);

/// Lower bound on ||n||_2 from the two classifications: ceil(log2 n), plus
/// one if n has no (m+1)-form, plus one more if it has no (m+2)-form either
/// (only asserted for m >= 3). Allocation-free; suitable for DP pruning.
unsigned refined_lower_bound_2(u64 n) noexcept;

}  // namespace lcx

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "lcomplex/engine.hpp"
#include "lcomplex/error.hpp"

namespace lcx {

namespace {

struct DigitTerm {
  unsigned exponent;
  u64 digit;
};

std::vector<DigitTerm> base_l_terms(u64 n, u64 l) {
  // Highest place first. l | n, so the units digit is zero and skipped.
  std::vector<DigitTerm> terms;
  unsigned e = 0;
  for (u64 rest = n; rest > 0; rest /= l, ++e) {
    if (rest % l != 0) terms.push_back({e, rest % l});
  }
  return {terms.rbegin(), terms.rend()};
}

Expr build_digits(std::span<const DigitTerm> terms, unsigned shift) {
  const unsigned lowest = terms.back().exponent - shift;
  const unsigned factor = lowest - 1;  // l^(lowest-1) pulled out front
  const auto last_digit = static_cast<unsigned>(terms.back().digit);

  Expr inner = repeated_sum(last_digit);
  if (terms.size() > 1) {
    inner = Expr::add(build_digits(terms.first(terms.size() - 1), shift + factor), inner);
  }
  return factor > 0 ? Expr::mul(repeated_product(factor), inner) : inner;
}

void require_multiple(u64 n, u64 l) {
  if (l < 2) throw Error(ErrorCode::InvalidConfig, "bound needs l >= 2");
  if (n == 0 || n % l != 0) {
    throw Error(ErrorCode::NotMultipleOfL, std::to_string(n) + " is not a positive multiple of " + std::to_string(l));
  }
}

}  // namespace

unsigned lower_bound(u64 n, u64 l) {
  require_multiple(n, l);
  return ceil_log(n, l);
}

unsigned lower_bound_l1(u64 n) {
  using u128 = unsigned __int128;
  const u128 cube = static_cast<u128>(n) * n * n;
  unsigned k = 0;
  for (u128 p = 1; p < cube; p *= 3) ++k;
  return k;
}

unsigned upper_bound_digits(u64 n, u64 l) {
  require_multiple(n, l);
  const auto terms = base_l_terms(n, l);
  u64 sum = 0;
  for (const auto& t : terms) sum += t.digit;
  return static_cast<unsigned>(terms.front().exponent + sum - 1);
}

bool within_log_growth_ceiling(unsigned upper, u64 n, u64 l) {
  using boost::multiprecision::cpp_int;
  const cpp_int lhs = boost::multiprecision::pow(cpp_int(l), upper + 1);
  const cpp_int rhs = boost::multiprecision::pow(cpp_int(n), static_cast<unsigned>(l));
  return lhs <= rhs;
}

Expr digit_expression(u64 n, u64 l) {
  require_multiple(n, l);
  const auto terms = base_l_terms(n, l);
  return build_digits(terms, 0);
}

}  // namespace lcx

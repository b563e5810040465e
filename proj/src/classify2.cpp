#include "lcomplex/classify2.hpp"

#include <bit>

#include "lcomplex/error.hpp"

namespace lcx {

namespace {

constexpr u64 bit(unsigned e) noexcept { return u64{1} << e; }

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool four_bit_form(unsigned b1, unsigned b2, unsigned b3, unsigned b4) noexcept {
  // b1 > b2 > b3 > b4 are the set bits of n.
  if (b4 >= 2 && b1 + b4 == b2 + b3) return true;                       // (b)
  if (b2 + 3 == b1 && b4 + 1 == b3 && b3 >= 3 && b1 >= b3 + 4) return true;  // (c)
  if (b1 >= 10 && b2 + 5 == b1 && b3 + 6 == b1 && b4 + 7 == b1) return true;  // (d)
  return false;
}

}  // namespace

u64 Pow2Decomposition::value() const noexcept {
  u64 v = 0;
  for (unsigned e : exponents) v += bit(e);
  return v;
}

Pow2Decomposition decompose_pow2(u64 n) {
  if (n < 2 || n % 2 != 0) {
    throw Error(ErrorCode::NotMultipleOfL, "decompose_pow2 needs an even n >= 2, got " + std::to_string(n));
  }
  Pow2Decomposition d;
  for (unsigned e = 64; e-- > 1;) {
    if (n & bit(e)) d.exponents.push_back(e);
  }
  return d;
}

u64 reconstruct(const ClassifiedForm& f) {
  return std::visit(
      overloaded{
          [](const form::PurePower& p) { return bit(p.exponent); },
          [](const form::TwoPowers& p) { return bit(p.high) + bit(p.low); },
          [](const form::FormA& p) { return bit(p.m1) + bit(p.m2) + bit(p.m3); },
          [](const form::FormB& p) { return bit(p.m1) + bit(p.m2) + bit(p.m3) + bit(p.m4); },
          [](const form::FormC& p) { return bit(p.m1) + bit(p.m1 - 3) + bit(p.m2) + bit(p.m2 - 1); },
          [](const form::FormD& p) { return bit(p.m) + bit(p.m - 5) + bit(p.m - 6) + bit(p.m - 7); },
      },
      f);
}

bool parameters_valid(const ClassifiedForm& f) {
  return std::visit(
      overloaded{
          [](const form::PurePower& p) { return p.exponent >= 1 && p.exponent < 64; },
          [](const form::TwoPowers& p) { return 1 <= p.low && p.low < p.high && p.high < 64; },
          [](const form::FormA& p) { return p.m1 < 64 && p.m1 > p.m2 && p.m2 > p.m3 && p.m3 >= 1; },
          [](const form::FormB& p) {
            return p.m1 < 64 && p.m1 > p.m2 && p.m2 > p.m3 && p.m3 > p.m4 && p.m4 >= 2 &&
                   p.m1 + p.m4 == p.m2 + p.m3;
          },
          [](const form::FormC& p) { return p.m1 < 64 && p.m1 >= p.m2 + 3 && p.m2 + 3 >= 6; },
          [](const form::FormD& p) { return p.m >= 10 && p.m < 64; },
      },
      f);
}

std::string describe(const ClassifiedForm& f) {
  auto s = [](unsigned v) { return std::to_string(v); };
  return std::visit(
      overloaded{
          [&](const form::PurePower& p) { return "PurePower{" + s(p.exponent) + "}"; },
          [&](const form::TwoPowers& p) { return "TwoPowers{" + s(p.high) + "," + s(p.low) + "}"; },
          [&](const form::FormA& p) { return "FormA{" + s(p.m1) + "," + s(p.m2) + "," + s(p.m3) + "}"; },
          [&](const form::FormB& p) {
            return "FormB{" + s(p.m1) + "," + s(p.m2) + "," + s(p.m3) + "," + s(p.m4) + "}";
          },
          [&](const form::FormC& p) { return "FormC{" + s(p.m1) + "," + s(p.m2) + "}"; },
          [&](const form::FormD& p) { return "FormD{" + s(p.m) + "}"; },
      },
      f);
}

std::optional<ClassifiedForm> classify_m_plus_1(u64 n) {
  if (n < 2 || n % 2 != 0) return std::nullopt;
  const unsigned m = floor_exponent(n);
  if (n == bit(m + 1)) return form::PurePower{m + 1};
  const u64 rest = n - bit(m);
  if (std::has_single_bit(rest)) {
    const auto low = static_cast<unsigned>(std::countr_zero(rest));
    if (low >= 1 && low < m) return form::TwoPowers{m, low};
  }
  return std::nullopt;
}

std::vector<ClassifiedForm> classify_m_plus_2(u64 n) {
  std::vector<ClassifiedForm> out;
  if (n < 2 || n % 2 != 0) return out;
  const unsigned m = floor_exponent(n);

  for (unsigned m2 = 2; m2 < m; ++m2) {
    for (unsigned m3 = 1; m3 < m2; ++m3) {
      form::FormA a{m, m2, m3};
      if (reconstruct(a) == n) out.emplace_back(a);
    }
  }
  for (unsigned m2 = 4; m2 < m; ++m2) {
    for (unsigned m3 = 3; m3 < m2; ++m3) {
      if (m2 + m3 < m + 2) continue;
      const unsigned m4 = m2 + m3 - m;
      if (m4 >= m3) continue;
      form::FormB b{m, m2, m3, m4};
      if (reconstruct(b) == n) out.emplace_back(b);
    }
  }
  if (m >= 6) {
    for (unsigned m2 = 3; m2 + 3 <= m; ++m2) {
      form::FormC c{m, m2};
      if (reconstruct(c) == n) out.emplace_back(c);
    }
  }
  if (m >= 10) {
    form::FormD d{m};
    if (reconstruct(d) == n) out.emplace_back(d);
  }
  return out;
}

unsigned refined_lower_bound_2(u64 n) noexcept {
  const unsigned floor_bound = ceil_log2(n);
  switch (std::popcount(n)) {
    case 1:
    case 2:
      return floor_bound;  // pure power or two powers (n even)
    case 3:
      return floor_bound + 1;  // always form (a)
    case 4: {
      unsigned b[4];
      u64 rest = n;
      for (auto& e : b) {
        e = floor_log2(rest);
        rest -= bit(e);
      }
      return floor_bound + (four_bit_form(b[0], b[1], b[2], b[3]) ? 1 : 2);
    }
    default:
      return floor_bound + 2;
  }
}

}  // namespace lcx

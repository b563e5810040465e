#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "lcomplex/classify2.hpp"
#include "lcomplex/engine.hpp"
#include "lcomplex/error.hpp"
#include "naive_oracle.hpp"

namespace lcx {
namespace {

std::vector<std::string> tags(const std::vector<ClassifiedForm>& forms) {
  std::vector<std::string> out;
  for (const auto& f : forms) out.push_back(describe(f));
  std::sort(out.begin(), out.end());
  return out;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

// Independent check of set-bit structure: popcount and bit positions.
std::vector<unsigned> bits_of(u64 n) {
  std::vector<unsigned> out;
  for (int b = 63; b >= 0; --b) {
    if ((n >> b) & 1) out.push_back(static_cast<unsigned>(b));
  }
  return out;
}

TEST(DecomposePow2, Examples) {
  EXPECT_EQ(decompose_pow2(6).exponents, (std::vector<unsigned>{2, 1}));
  EXPECT_EQ(decompose_pow2(1080).exponents, (std::vector<unsigned>{10, 5, 4, 3}));
  EXPECT_EQ(decompose_pow2(2).exponents, (std::vector<unsigned>{1}));
}

TEST(DecomposePow2, RoundTrip) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10000; ++i) {
    const u64 n = (rng() >> 2) & ~u64{1};
    if (n == 0) continue;
    const auto d = decompose_pow2(n);
    ASSERT_EQ(d.value(), n);
    ASSERT_EQ(d.exponents, bits_of(n));
  }
}

TEST(DecomposePow2, RejectsOddInput) {
  for (u64 n : {0u, 1u, 7u}) {
    try {
      decompose_pow2(n);
      ADD_FAILURE() << n;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NotMultipleOfL);
    }
  }
}

TEST(ClassifyMPlus1, Examples) {
  const auto f24 = classify_m_plus_1(24);
  ASSERT_TRUE(f24);
  EXPECT_EQ(describe(*f24), "TwoPowers{4,3}");
  const auto f16 = classify_m_plus_1(16);
  ASSERT_TRUE(f16);
  EXPECT_EQ(describe(*f16), "PurePower{4}");
  EXPECT_FALSE(classify_m_plus_1(14));
  EXPECT_EQ(floor_exponent(24), 4u);
  EXPECT_EQ(floor_exponent(16), 3u);
}

TEST(ClassifyMPlus2, Examples) {
  EXPECT_EQ(tags(classify_m_plus_2(14)), (std::vector<std::string>{"FormA{3,2,1}"}));
  EXPECT_TRUE(contains(tags(classify_m_plus_2(60)), "FormB{5,4,3,2}"));
  EXPECT_EQ(tags(classify_m_plus_2(156)), (std::vector<std::string>{"FormC{7,3}"}));
  EXPECT_EQ(tags(classify_m_plus_2(1080)), (std::vector<std::string>{"FormD{10}"}));
  EXPECT_TRUE(classify_m_plus_2(62).empty());
}

TEST(ClassifyMPlus2, DegenerateFormCAlsoMatchesFormA) {
  // m1 = m2 + 3 merges 2^(m1-3) and 2^m2 into 2^(m2+1).
  const u64 n = reconstruct(form::FormC{6, 3});
  EXPECT_EQ(n, 64u + 8 + 8 + 4);
  const auto t = tags(classify_m_plus_2(n));
  EXPECT_TRUE(contains(t, "FormC{6,3}"));
  EXPECT_TRUE(contains(t, "FormA{6,4,2}"));
}

TEST(ClassifiedForms, ExamplesMatchComplexities) {
  const auto t = build_table({.l = 2, .max_n = 2048});
  EXPECT_EQ(t[24], 5u);
  EXPECT_EQ(t[16], 4u);
  EXPECT_EQ(t[14], 5u);
  EXPECT_EQ(t[60], 7u);
  EXPECT_EQ(t[156], 9u);
  EXPECT_EQ(t[1080], 12u);
  EXPECT_EQ(t[62], 8u);
}

TEST(RefinedLowerBound, Examples) {
  EXPECT_EQ(refined_lower_bound_2(24), 5u);
  EXPECT_EQ(refined_lower_bound_2(14), 5u);
  EXPECT_EQ(refined_lower_bound_2(62), 8u);
  EXPECT_EQ(refined_lower_bound_2(2), 1u);
}

TEST(RefinedLowerBound, MatchesDefinitionByClassification) {
  for (u64 n = 2; n <= (1 << 16); n += 2) {
    const unsigned base = ceil_log2(n);
    unsigned want = base;
    if (!classify_m_plus_1(n)) {
      want = base + 1;
      if (floor_exponent(n) >= 3 && classify_m_plus_2(n).empty()) want = base + 2;
    }
    ASSERT_EQ(refined_lower_bound_2(n), want) << n;
  }
}

TEST(Classification, ExhaustiveAgainstNaiveComplexities) {
  const auto naive = testing::naive_complexities(2, 4096);
  for (const auto& [n, c] : naive) {
    const unsigned m = floor_exponent(n);
    ASSERT_EQ(c == m + 1, classify_m_plus_1(n).has_value()) << n;
    if (m >= 3 && !classify_m_plus_1(n)) {
      ASSERT_EQ(c == m + 2, !classify_m_plus_2(n).empty()) << n;
    }
    ASSERT_LE(refined_lower_bound_2(n), c) << n;
  }
}

TEST(Classification, ExhaustiveAgainstTable) {
  const auto t = build_table({.l = 2, .max_n = 1 << 18});
  for (u64 n = 2; n <= t.max_n(); n += 2) {
    const unsigned m = floor_exponent(n);
    const bool m1 = classify_m_plus_1(n).has_value();
    ASSERT_EQ(t[n] == m + 1, m1) << n;
    if (m >= 3 && !m1) {
      ASSERT_EQ(t[n] == m + 2, !classify_m_plus_2(n).empty()) << n;
    }
    ASSERT_LE(refined_lower_bound_2(n), t[n]) << n;
  }
}

TEST(Classification, CountLaw) {
  for (unsigned m = 1; m <= 20; ++m) {
    u64 count = 0;
    for (u64 n = (u64{1} << m) + 2; n <= (u64{1} << (m + 1)); n += 2) count += classify_m_plus_1(n) ? 1 : 0;
    EXPECT_EQ(count, m) << m;
  }
}

TEST(Classification, EveryMatchReconstructs) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 20000; ++i) {
    // Values with few set bits exercise the forms.
    u64 n = 0;
    const int k = 1 + static_cast<int>(rng() % 4);
    for (int j = 0; j < k; ++j) n |= u64{1} << (1 + rng() % 50);
    if (const auto f = classify_m_plus_1(n)) {
      ASSERT_EQ(reconstruct(*f), n);
      ASSERT_TRUE(parameters_valid(*f));
    } else {
      for (const auto& g : classify_m_plus_2(n)) {
        ASSERT_EQ(reconstruct(g), n) << describe(g);
        ASSERT_TRUE(parameters_valid(g)) << describe(g);
      }
    }
  }
}

TEST(Classification, ParameterValidity) {
  EXPECT_TRUE(parameters_valid(form::FormD{10}));
  EXPECT_FALSE(parameters_valid(form::FormD{9}));
  EXPECT_TRUE(parameters_valid(form::FormC{6, 3}));
  EXPECT_FALSE(parameters_valid(form::FormC{5, 2}));
  EXPECT_TRUE(parameters_valid(form::FormB{5, 4, 3, 2}));
  EXPECT_FALSE(parameters_valid(form::FormB{5, 4, 2, 1}));
  EXPECT_FALSE(parameters_valid(form::TwoPowers{3, 3}));
}

}  // namespace
}  // namespace lcx

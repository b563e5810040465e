#include "lcomplex/harness.hpp"

#include <random>
#include <sstream>

#include "lcomplex/classify2.hpp"
#include "lcomplex/error.hpp"

namespace lcx {

namespace {

ordered_json point(u64 l, u64 value) { return ordered_json{{"l", l}, {"value", value}}; }

ordered_json point(u64 l, u64 value, std::initializer_list<std::pair<const char*, u64>> extra) {
  auto j = point(l, value);
  for (const auto& [k, v] : extra) j[k] = v;
  return j;
}

// Counterexample whose `actual` is some derived quantity rather than the
// table entry for `value`.
ordered_json tagged(ordered_json j, const char* quantity) {
  j["quantity"] = quantity;
  return j;
}

/// base^r * mult^m, or nullopt past u64.
std::optional<u64> family_value(u64 base, unsigned r, u64 mult, unsigned m) {
  auto a = checked_pow(base, r);
  auto b = checked_pow(mult, m);
  if (!a || !b) return std::nullopt;
  return checked_mul(*a, *b);
}

std::string range_text(const std::string& family, unsigned r_lo, unsigned r_hi, u64 max_n) {
  std::ostringstream os;
  if (r_hi < r_lo) {
    os << family << ": none";
  } else {
    os << family << ": r=" << r_lo << ".." << r_hi;
  }
  os << " (n <= " << max_n << ")";
  return os.str();
}

void require_l(const ComplexityTable& t, u64 l, const char* who) {
  if (t.l() != l) {
    throw Error(ErrorCode::InvalidConfig,
                std::string(who) + " needs an l=" + std::to_string(l) + " table, got l=" + std::to_string(t.l()));
  }
}

}  // namespace

// ---------------------------------------------------------------------------

VerificationReport verify_six_ten(const ComplexityTable& t) {
  require_l(t, 2, "six-ten");
  VerificationReport rep;
  rep.check_name = "six-ten";
  rep.params = {{"max_n", t.max_n()}};
  ordered_json exact = ordered_json::array();

  struct Family {
    u64 base;
    unsigned per_r;     // leaves per factor of base
    unsigned exact_to;  // equality proven for r <= exact_to
    unsigned r_max;     // bracket [m + per_r*r - 1, m + per_r*r] for exact_to < r <= r_max
  };
  const Family families[] = {{6, 3, 7, 9}, {10, 4, 4, 5}};

  std::vector<std::string> ranges;
  for (const auto& f : families) {
    unsigned reached = 0;
    for (unsigned r = 1; r <= f.r_max; ++r) {
      bool any = false;
      for (unsigned m = 0;; ++m) {
        const auto n = family_value(f.base, r, 2, m);
        if (!n || *n > t.max_n()) break;
        any = true;
        const unsigned hi = m + f.per_r * r;
        const unsigned got = t[*n];
        const auto in = point(2, *n, {{"m", m}, {"r", r}});
        if (r <= f.exact_to) {
          if (got != hi) rep.add_counterexample(in, hi, got);
        } else {
          if (got + 1 < hi || got > hi) rep.add_counterexample(in, ordered_json::array({hi - 1, hi}), got);
          exact.push_back(ordered_json{{"base", f.base}, {"m", m}, {"r", r}, {"n", *n}, {"complexity", got}});
        }
      }
      if (any) reached = r;
    }
    ranges.push_back(range_text(std::to_string(f.base) + "^r", 1, reached, t.max_n()));
    if (reached < f.r_max) {
      rep.add_note("table reaches " + std::to_string(f.base) + "^r only for r <= " + std::to_string(reached));
    }
  }
  rep.checked_range = ranges[0] + "; " + ranges[1];
  rep.findings["bracketed_exact_values"] = std::move(exact);
  rep.finish(false);
  return rep;
}

VerificationReport verify_conjecture_l2(const ComplexityTable& t, unsigned r_max, unsigned m_max) {
  require_l(t, 2, "conjecture-l2");
  VerificationReport rep;
  rep.check_name = "conjecture-l2";
  rep.params = {{"r_max", r_max}, {"m_max", m_max}, {"max_n", t.max_n()}};
  bool beyond_theorem = false;
  u64 checked = 0;
  for (const auto& [base, per_r, proven_to] : {std::tuple<u64, unsigned, unsigned>{6, 3, 7}, {10, 4, 4}}) {
    for (unsigned r = 1; r <= r_max; ++r) {
      for (unsigned m = 0; m <= m_max; ++m) {
        const auto n = family_value(base, r, 2, m);
        if (!n || *n > t.max_n()) break;
        ++checked;
        beyond_theorem |= r > proven_to;
        const unsigned want = m + per_r * r;
        if (t[*n] != want) rep.add_counterexample(point(2, *n, {{"m", m}, {"r", r}}), want, t[*n]);
        if (r > proven_to) {
          rep.findings["beyond_theorem"].push_back(
              ordered_json{{"base", base}, {"m", m}, {"r", r}, {"n", *n}, {"complexity", t[*n]}});
        }
      }
    }
  }
  rep.checked_range = std::to_string(checked) + " (m, r) pairs with r <= " + std::to_string(r_max) +
                      ", m <= " + std::to_string(m_max) + ", n <= " + std::to_string(t.max_n());
  if (checked == 0) rep.checked_range = "empty";
  rep.finish(beyond_theorem);
  return rep;
}

VerificationReport verify_question4(const ComplexityTable& t, unsigned u_max, unsigned r_max, unsigned m_max) {
  require_l(t, 2, "question4");
  VerificationReport rep;
  rep.check_name = "question4";
  rep.params = {{"u_max", u_max}, {"r_max", r_max}, {"m_max", m_max}, {"max_n", t.max_n()}};
  bool beyond_theorem = false;
  u64 checked = 0;
  u64 construction_failures = 0;
  for (unsigned u = 2; u <= u_max; ++u) {
    const u64 base = (u64{1} << u) + 2;
    const Expr base_tree = Expr::add(repeated_product(u), Expr::leaf());
    for (unsigned r = 1; r <= r_max; ++r) {
      for (unsigned m = 0; m <= m_max; ++m) {
        const auto n = family_value(base, r, 2, m);
        if (!n || *n > t.max_n()) break;
        ++checked;
        beyond_theorem |= !(r == 1 || (u == 2 && r <= 7) || (u == 3 && r <= 4));

        // Upper bound by construction: 2^m * (2^u + 2)^r.
        Expr tree = base_tree;
        for (unsigned i = 1; i < r; ++i) tree = Expr::mul(tree, base_tree);
        if (m > 0) tree = Expr::mul(repeated_product(m), tree);
        const unsigned want = m + (u + 1) * r;
        if (evaluate(tree, 2) != *n || tree.leaf_count() != want) ++construction_failures;

        const unsigned got = t[*n];
        if (got != want) rep.add_counterexample(point(2, *n, {{"u", u}, {"m", m}, {"r", r}}), want, got);
        if (got < want) rep.findings["strictly_smaller"].push_back(*n);
      }
    }
  }
  if (construction_failures > 0) {
    rep.add_note(std::to_string(construction_failures) + " constructions did not match their target");
    rep.add_counterexample(tagged(point(2, 0), "construction_failures"), 0,
                           construction_failures);
  }
  rep.checked_range = checked == 0 ? "empty"
                                   : std::to_string(checked) + " (u, m, r) triples, n <= " + std::to_string(t.max_n());
  rep.finish(beyond_theorem);
  return rep;
}

VerificationReport verify_question2(u64 l_max, unsigned r_max, unsigned m_max, const TableFactory& make_table) {
  VerificationReport rep;
  rep.check_name = "question2";
  rep.params = {{"l_max", l_max}, {"r_max", r_max}, {"m_max", m_max}};
  u64 checked = 0;
  for (u64 l = 2; l <= l_max; ++l) {
    const ComplexityTable t = make_table(l);
    require_l(t, l, "question2");
    for (u64 k : {u64{2}, u64{3}}) {
      if (l % k == 0) continue;
      for (unsigned r = 1; r <= r_max; ++r) {
        for (unsigned m = 0; m <= m_max; ++m) {
          const auto n = family_value(k * l, r, l, m);
          if (!n || *n > t.max_n()) break;
          ++checked;
          const unsigned want = m + static_cast<unsigned>(k) * r;
          const unsigned got = t[*n];
          // want is attained by l^m * (l+...+l)^r, so got > want is an engine fault.
          if (got != want) rep.add_counterexample(point(l, *n, {{"k", k}, {"m", m}, {"r", r}}), want, got);
        }
      }
    }
  }
  rep.checked_range = checked == 0 ? "empty" : std::to_string(checked) + " (l, k, m, r) cases, l <= " + std::to_string(l_max);
  rep.finish(checked > 0);
  return rep;
}

VerificationReport verify_conjecture_l1(const ComplexityTable& t, unsigned a_max, unsigned b_max) {
  require_l(t, 1, "conjecture-l1");
  VerificationReport rep;
  rep.check_name = "conjecture-l1";
  rep.params = {{"a_max", a_max}, {"b_max", b_max}, {"max_n", t.max_n()}};
  u64 checked = 0;
  for (unsigned a = 1; a <= a_max; ++a) {
    for (unsigned b = 0; b <= b_max; ++b) {
      const auto n = family_value(3, b, 2, a);
      if (!n || *n > t.max_n()) break;
      ++checked;
      const unsigned want = 2 * a + 3 * b;
      if (t[*n] != want) rep.add_counterexample(point(1, *n, {{"a", a}, {"b", b}}), want, t[*n]);
    }
  }
  rep.checked_range = checked == 0 ? "empty"
                                   : std::to_string(checked) + " values 2^a 3^b <= " + std::to_string(t.max_n());
  rep.finish(checked > 0);
  return rep;
}

// ---------------------------------------------------------------------------

unsigned max_feasible_m(const ComplexityTable& t, u64 n) {
  unsigned m = 0;
  for (u64 v = n; v <= t.max_n() / t.l(); v *= t.l()) ++m;
  return n > t.max_n() ? 0 : m;
}

ASetStatus check_a_set(u64 l, u64 n, unsigned m_max, const ComplexityTable& t) {
  require_l(t, l, "a-set");
  t.complexity(n);
  if (l < 2) throw Error(ErrorCode::InvalidConfig, "A_l is defined for l > 1");
  if (m_max > max_feasible_m(t, n)) {
    throw Error(ErrorCode::RangeExceeded, "l^" + std::to_string(m_max) + " * " + std::to_string(n) +
                                              " exceeds table range " + std::to_string(t.max_n()));
  }
  const unsigned base = t[n];
  u64 v = n;
  for (unsigned m = 1; m <= m_max; ++m) {
    v *= l;
    if (t[v] < m + base) return {n, ASetStatus::Verdict::NonMember, m};
  }
  return {n, ASetStatus::Verdict::NoViolationUpTo, m_max};
}

VerificationReport verify_a_set(const ComplexityTable& t, u64 n, std::optional<unsigned> m_max) {
  const unsigned limit = m_max.value_or(max_feasible_m(t, n));
  const ASetStatus s = check_a_set(t.l(), n, limit, t);
  VerificationReport rep;
  rep.check_name = "a-set";
  rep.params = {{"l", t.l()}, {"n", n}, {"m_max", limit}};
  rep.checked_range = "m = 1.." + std::to_string(limit);
  const bool member_so_far = s.verdict == ASetStatus::Verdict::NoViolationUpTo;
  rep.findings["verdict"] = member_so_far ? "NoViolationUpTo" : "NonMember";
  rep.findings["m"] = s.m;
  rep.findings["complexity"] = t[n];
  if (!member_so_far) {
    u64 v = n;
    for (unsigned i = 0; i < s.m; ++i) v *= t.l();
    rep.findings["witness_value"] = v;
    rep.findings["witness_complexity"] = t[v];
    rep.add_note("non-member: ||" + std::to_string(v) + "|| = " + std::to_string(t[v]) + " < " +
                 std::to_string(s.m) + " + " + std::to_string(t[n]));
  }
  rep.finish(member_so_far);
  return rep;
}

VerificationReport scan_a_set(u64 l, u64 n_max, unsigned m_max, const ComplexityTable& t) {
  require_l(t, l, "a-set scan");
  VerificationReport rep;
  rep.check_name = "a-set";
  rep.params = {{"l", l}, {"n_max", n_max}, {"m_max", m_max}, {"max_n", t.max_n()}};
  n_max = std::min(n_max, t.max_n());

  // ||l^m n|| <= m + ||n|| must hold everywhere before violations of
  // equality mean anything.
  for (u64 n = l; n <= n_max; n += l) {
    const unsigned limit = std::min(m_max, max_feasible_m(t, n));
    u64 v = n;
    for (unsigned m = 1; m <= limit; ++m) {
      v *= l;
      if (t[v] > m + t[n]) rep.add_counterexample(point(l, v, {{"n", n}, {"m", m}}), m + t[n], t[v]);
    }
  }

  u64 checked = 0;
  u64 unchecked = 0;
  ordered_json non_members = ordered_json::array();
  for (u64 n = l; n <= n_max; n += l) {
    const unsigned limit = std::min(m_max, max_feasible_m(t, n));
    if (limit == 0) {
      ++unchecked;
      continue;
    }
    ++checked;
    const ASetStatus s = check_a_set(l, n, limit, t);
    if (s.verdict != ASetStatus::Verdict::NonMember) continue;

    ordered_json entry{{"n", n}, {"witness_m", s.m}};
    ordered_json m0 = nullptr;
    u64 v = n;
    for (unsigned k = 1;; ++k) {
      v *= l;
      const unsigned rest = std::min(m_max, max_feasible_m(t, v));
      if (rest == 0) break;
      if (check_a_set(l, v, rest, t).verdict == ASetStatus::Verdict::NoViolationUpTo) {
        m0 = k;
        break;
      }
    }
    entry["m0"] = m0;
    non_members.push_back(std::move(entry));
  }
  rep.findings["checked"] = checked;
  rep.findings["non_member_count"] = non_members.size();
  rep.findings["density"] = checked == 0 ? 0.0 : static_cast<double>(non_members.size()) / static_cast<double>(checked);
  rep.findings["non_members"] = std::move(non_members);
  rep.checked_range = "n <= " + std::to_string(n_max) + ", m <= " + std::to_string(m_max) + " within n*l^m <= " +
                      std::to_string(t.max_n());
  if (unchecked > 0) rep.add_note(std::to_string(unchecked) + " values had no room for m >= 1");
  rep.finish(true);
  return rep;
}

// ---------------------------------------------------------------------------

VerificationReport verify_classify2_exhaustive(const ComplexityTable& t) {
  require_l(t, 2, "classify2-exhaustive");
  VerificationReport rep;
  rep.check_name = "classify2-exhaustive";
  rep.params = {{"max_n", t.max_n()}};
  std::vector<u64> floor_count(64, 0);
  u64 m_plus_1 = 0;
  u64 m_plus_2 = 0;
  for (u64 n = 2; n <= t.max_n(); n += 2) {
    const unsigned m = floor_exponent(n);
    const unsigned c = t[n];
    const auto one = classify_m_plus_1(n);
    const auto two = classify_m_plus_2(n);
    const auto in = point(2, n, {{"m", m}});
    if ((c == m + 1) != one.has_value()) {
      rep.add_counterexample(in, one ? ordered_json(m + 1) : ordered_json("!= " + std::to_string(m + 1)), c);
    }
    if (c == m + 1) {
      ++floor_count[m];
      ++m_plus_1;
    }
    if (m >= 3 && !one && (c == m + 2) != !two.empty()) {
      rep.add_counterexample(in, two.empty() ? ordered_json(">= " + std::to_string(m + 3)) : ordered_json(m + 2), c);
    }
    if (c == m + 2) ++m_plus_2;
    for (const auto& f : two) {
      if (reconstruct(f) != n || !parameters_valid(f)) rep.add_counterexample(in, describe(f), "bad form");
    }
    if (one && (reconstruct(*one) != n || !parameters_valid(*one))) {
      rep.add_counterexample(in, describe(*one), "bad form");
    }
    const unsigned rlb = refined_lower_bound_2(n);
    const unsigned expected_rlb = one ? m + 1 : (!two.empty() || m < 3) ? m + 2 : m + 3;
    if (rlb != expected_rlb || rlb > c) rep.add_counterexample(tagged(in, "refined_lower_bound"), expected_rlb, rlb);
  }
  unsigned full_m = 0;
  for (unsigned m = 1; m < 63 && (u64{1} << (m + 1)) <= t.max_n(); ++m) {
    full_m = m;
    if (floor_count[m] != m) {
      rep.add_counterexample(point(2, u64{1} << (m + 1), {{"m", m}}), m, floor_count[m]);
    }
  }
  rep.findings["m_plus_1_count"] = m_plus_1;
  rep.findings["m_plus_2_count"] = m_plus_2;
  rep.checked_range = "even n <= " + std::to_string(t.max_n()) + "; count law for m = 1.." + std::to_string(full_m);
  rep.finish(false);
  return rep;
}

VerificationReport verify_bounds(const ComplexityTable& t) {
  const u64 l = t.l();
  VerificationReport rep;
  rep.check_name = "bounds";
  rep.params = {{"l", l}, {"max_n", t.max_n()}};
  for (u64 n = l; n <= t.max_n(); n += l) {
    const unsigned c = t[n];
    if (l == 1) {
      if (lower_bound_l1(n) > c) rep.add_counterexample(point(1, n), ">= " + std::to_string(lower_bound_l1(n)), c);
      // ||n|| <= 3 log2 n  <=>  2^c <= n^3, for n >= 2
      if (n >= 2 && c < 128) {
        const unsigned __int128 cube = static_cast<unsigned __int128>(n) * n * n;
        if ((static_cast<unsigned __int128>(1) << c) > cube) rep.add_counterexample(point(1, n), "<= 3 log2 n", c);
      }
      continue;
    }
    const unsigned lo = lower_bound(n, l);
    const unsigned hi = upper_bound_digits(n, l);
    if (lo > c) rep.add_counterexample(point(l, n), ">= " + std::to_string(lo), c);
    if (c > hi) rep.add_counterexample(point(l, n), "<= " + std::to_string(hi), c);
    if (!within_log_growth_ceiling(hi, n, l)) rep.add_counterexample(tagged(point(l, n), "digit_bound"), "<= l log_l n - 1", hi);
    if (l == 2 && refined_lower_bound_2(n) > c) {
      rep.add_counterexample(point(2, n), ">= " + std::to_string(refined_lower_bound_2(n)), c);
    }
  }
  u64 two_power_cases = 0;
  if (l > 1) {
    for (unsigned m = 1;; ++m) {
      const auto hi = checked_pow(l, m);
      if (!hi || *hi > t.max_n()) break;
      for (unsigned m2 = 1; m2 <= m; ++m2) {
        const u64 n = *hi + *checked_pow(l, m2);
        if (n > t.max_n()) break;
        ++two_power_cases;
        if (t[n] != m + 1) rep.add_counterexample(point(l, n, {{"m", m}, {"m2", m2}}), m + 1, t[n]);
      }
    }
  }
  rep.findings["two_power_cases"] = two_power_cases;
  rep.checked_range = "every multiple of " + std::to_string(l) + " up to " + std::to_string(t.max_n());
  rep.finish(false);
  return rep;
}

VerificationReport verify_reduction(u64 l, u64 max_n) {
  VerificationReport rep;
  rep.check_name = "reduction";
  rep.params = {{"l", l}, {"max_n", max_n}};
  if (l < 2) throw Error(ErrorCode::InvalidConfig, "the reduction identity needs l >= 2");
  BuildConfig cfg{.l = l, .max_n = max_n / l * l};
  const ComplexityTable with = build_table(cfg);
  cfg.use_reduction = false;
  const ComplexityTable without = build_table(cfg);

  u64 byte_mismatches = 0;
  for (u64 n = l; n <= without.max_n(); n += l) {
    if (with[n] != without[n]) {
      ++byte_mismatches;
      rep.add_counterexample(tagged(point(l, n), "reduction_table"), without[n], with[n]);
    }
    const u64 l2 = l * l;
    const u64 a = (n % l2) / l;
    const u64 b = n - a * l;
    const unsigned want = (b == 0 ? 0 : without[b]) + static_cast<unsigned>(a);
    if (without[n] != want) rep.add_counterexample(point(l, n, {{"b", b}, {"a", a}}), want, without[n]);
  }
  rep.findings["byte_mismatches"] = byte_mismatches;
  rep.checked_range = "multiples of " + std::to_string(l) + " up to " + std::to_string(without.max_n());
  rep.finish(false);
  return rep;
}

VerificationReport verify_oracle_equivalence(u64 l, unsigned m_max) {
  VerificationReport rep;
  rep.check_name = "oracle-equivalence";
  rep.params = {{"l", l}, {"m_max", m_max}};
  const OracleResult oracle = reachable_sets_oracle(l, m_max);
  // Everything with complexity <= m_max is at most l^m_max (l > 1) or 3^(m_max/3) (l = 1).
  const u64 max_n = l == 1 ? *checked_pow(3, m_max / 3) : *checked_pow(l, m_max);
  const ComplexityTable t = build_table(BuildConfig{.l = l, .max_n = max_n});

  u64 compared = 0;
  for (const auto& [v, m] : oracle.complexity) {
    if (v > max_n) continue;
    ++compared;
    if (t[v] != m) rep.add_counterexample(point(l, v), m, t[v]);
  }
  for (u64 n = l; n <= max_n; n += l) {
    if (t[n] <= m_max && !oracle.complexity.contains(n)) {
      rep.add_counterexample(point(l, n), "> " + std::to_string(m_max), t[n]);
    }
  }
  if (l > 1) {
    for (unsigned m = 1; m <= m_max; ++m) {
      if (oracle.level_max[m] != *checked_pow(l, m)) {
        rep.add_counterexample(tagged(point(l, oracle.level_max[m], {{"level", m}}), "level_max"), *checked_pow(l, m),
                               oracle.level_max[m]);
      }
    }
  }
  rep.findings["compared"] = compared;
  rep.checked_range = "n <= " + std::to_string(max_n) + " with complexity <= " + std::to_string(m_max);
  rep.finish(false);
  return rep;
}

VerificationReport verify_witnesses(const ComplexityTable& t, std::size_t samples, std::uint64_t seed) {
  VerificationReport rep;
  rep.check_name = "witness";
  rep.params = {{"l", t.l()}, {"max_n", t.max_n()}, {"samples", samples}, {"seed", seed}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<u64> pick(1, t.max_n() / t.l());
  for (std::size_t i = 0; i < samples; ++i) {
    const u64 n = pick(rng) * t.l();
    const Expr w = witness(t, n);
    const u64 v = evaluate(w, t.l());
    if (v != n || w.leaf_count() != t[n]) {
      rep.add_counterexample(point(t.l(), n), ordered_json{{"value", n}, {"leaves", t[n]}},
                             ordered_json{{"value", v}, {"leaves", w.leaf_count()}});
    }
  }
  rep.checked_range = std::to_string(samples) + " uniform samples";
  rep.finish(false);
  return rep;
}

bool counterexamples_reproduce(const VerificationReport& report, const ComplexityTable& t) {
  for (const auto& c : report.counterexamples) {
    if (!c.input.contains("l") || !c.input.contains("value") || c.input.contains("quantity")) continue;
    if (!c.actual.is_number_unsigned()) continue;
    const u64 l = c.input["l"].get<u64>();
    const u64 v = c.input["value"].get<u64>();
    if (l != t.l() || !t.contains(v)) continue;
    if (c.actual.get<u64>() != t[v]) return false;
  }
  return true;
}

}  // namespace lcx

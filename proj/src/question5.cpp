#include <unordered_map>
#include <unordered_set>

#include "lcomplex/error.hpp"
#include "lcomplex/harness.hpp"

namespace lcx {

namespace {

// Optimal trees for every n up to some bound, memoized. A tree's root split
// fixes its left operand's value, and operands are ordered (smaller value
// left; equal values by list index), so each commutative class is produced
// once and no further deduplication is needed.
class OptimalTreeEnumerator {
 public:
  OptimalTreeEnumerator(const ComplexityTable& t, std::size_t cap) : t_(t), cap_(cap) {}

  const OptimalTrees& get(u64 n) {
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    OptimalTrees out = generate(n);
    return memo_.emplace(n, std::move(out)).first->second;
  }

 private:
  OptimalTrees generate(u64 n) {
    OptimalTrees out;
    if (n == 1) {
      out.trees.push_back(Expr::leaf());
      return out;
    }
    const unsigned c = t_[n];

    auto combine = [&](u64 a, u64 b, bool is_add) {
      const OptimalTrees& left = get(a);
      const OptimalTrees& right = get(b);
      out.complete &= left.complete && right.complete;
      for (std::size_t i = 0; i < left.trees.size(); ++i) {
        for (std::size_t j = (a == b ? i : 0); j < right.trees.size(); ++j) {
          if (out.trees.size() >= cap_) {
            out.complete = false;
            return;
          }
          out.trees.push_back(is_add ? Expr::add(left.trees[i], right.trees[j])
                                     : Expr::mul(left.trees[i], right.trees[j]));
        }
      }
    };

    for (u64 a = 1; a <= n / 2; ++a) {
      if (t_[a] + t_[n - a] == c) combine(a, n - a, true);
    }
    for (u64 a : small_factors(n, 1)) {
      if (t_[a] + t_[n / a] == c) combine(a, n / a, false);
    }
    return out;
  }

  const ComplexityTable& t_;
  std::size_t cap_;
  std::unordered_map<u64, OptimalTrees> memo_;
};

}  // namespace

OptimalTrees enumerate_optimal_trees_l1(u64 n, std::size_t cap, const ComplexityTable& table1) {
  if (table1.l() != 1) throw Error(ErrorCode::InvalidConfig, "optimal tree enumeration needs an l=1 table");
  table1.complexity(n);
  OptimalTreeEnumerator en(table1, cap);
  return en.get(n);
}

Question5Result verify_question5(u64 n_max, std::size_t cap, const ComplexityTable& table1,
                                 const ComplexityTable& table2) {
  if (table1.l() != 1 || table2.l() != 2) {
    throw Error(ErrorCode::InvalidConfig, "question5 needs an l=1 table and an l=2 table");
  }
  if (n_max > table1.max_n()) {
    throw Error(ErrorCode::RangeExceeded, "n_max exceeds the l=1 table range " + std::to_string(table1.max_n()));
  }

  Question5Result res;
  VerificationReport& rep = res.report;
  rep.check_name = "question5";
  rep.params = {{"n_max", n_max}, {"cap", cap}, {"table2_max_n", table2.max_n()}};

  OptimalTreeEnumerator enumerator(table1, cap);
  BoundedSearch beyond(table2);
  u64 searched = 0;
  u64 max_mapped = 0;
  u64 normalization_faults = 0;

  for (u64 n = 1; n <= n_max; ++n) {
    const OptimalTrees& reps = enumerator.get(n);
    if (!reps.complete) res.capped.push_back(n);
    const unsigned c1 = table1[n];
    // Distinct optimal trees can normalize to the same tree; count it once.
    std::unordered_set<std::string> seen;
    bool any_equal = false;
    for (const Expr& r : reps.trees) {
      const Expr normalized = normalize_ones_runs(r);
      if (has_long_ones_run(normalized) || normalized.leaf_count() != c1 || evaluate(normalized, 1) != n) {
        ++normalization_faults;
      }
      std::string text = to_string(normalized, 1);
      if (!seen.insert(text).second) continue;
      const u64 a = map_leaves(normalized, 1, 2).value;
      max_mapped = std::max(max_mapped, a);
      unsigned c2;
      if (table2.contains(a)) {
        c2 = table2[a];
      } else {
        ++searched;
        c2 = beyond.complexity(a);
      }
      ++res.pairs;
      if (c2 == c1) {
        ++res.equal_pairs;
        any_equal = true;
      }
      if (c2 > c1) ++res.structural_violations;
      if (c2 != c1) {
        ordered_json in{{"l", 2}, {"value", a}, {"n", n}, {"R", std::move(text)}};
        if (!table2.contains(a)) in["quantity"] = "bounded_search";
        rep.add_counterexample(std::move(in), c1, c2);
      }
    }
    if (!any_equal && reps.complete) res.no_equal_representation.push_back(n);
  }

  const double rate = res.pairs == 0 ? 1.0 : static_cast<double>(res.equal_pairs) / static_cast<double>(res.pairs);
  rep.findings["pairs"] = res.pairs;
  rep.findings["equal_pairs"] = res.equal_pairs;
  rep.findings["equality_rate"] = rate;
  rep.findings["structural_violations"] = res.structural_violations;
  rep.findings["normalization_faults"] = normalization_faults;
  rep.findings["no_equal_representation"] = res.no_equal_representation;
  rep.findings["capped_n"] = res.capped;
  rep.findings["max_mapped_value"] = max_mapped;
  rep.findings["resolved_by_search"] = searched;
  rep.checked_range = "n = 1.." + std::to_string(n_max) + ", at most " + std::to_string(cap) + " trees per n";
  rep.add_note("equality rate " + std::to_string(rate) + " over " + std::to_string(res.pairs) + " (n, R) pairs");
  if (!res.capped.empty()) rep.add_note(std::to_string(res.capped.size()) + " values hit the representation cap");
  if (normalization_faults > 0) rep.add_note(std::to_string(normalization_faults) + " normalization faults");
  rep.finish(true);
  return res;
}

}  // namespace lcx

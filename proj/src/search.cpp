#include "lcomplex/classify2.hpp"
#include "lcomplex/engine.hpp"
#include "lcomplex/error.hpp"

namespace lcx {

BoundedSearch::BoundedSearch(const ComplexityTable& table) : table_(table) {
  if (table.l() < 2) throw Error(ErrorCode::InvalidConfig, "bounded search needs l >= 2");
}

unsigned BoundedSearch::floor_of(u64 n) const {
  return table_.l() == 2 ? refined_lower_bound_2(n) : lower_bound(n, table_.l());
}

unsigned BoundedSearch::complexity(u64 n) {
  const u64 l = table_.l();
  if (n == 0 || n % l != 0) throw Error(ErrorCode::NotMultipleOfL, std::to_string(n) + " is not a multiple of l");
  if (table_.contains(n)) return table_[n];
  if (auto it = exact_.find(n); it != exact_.end()) return it->second;

  unsigned result;
  const u64 l2 = l * l;
  if (n % l2 != 0) {
    const u64 a = (n % l2) / l;
    const u64 b = n - a * l;
    result = (b == 0 ? 0 : complexity(b)) + static_cast<unsigned>(a);
  } else {
    result = upper_bound_digits(n, l);
    for (unsigned k = floor_of(n); k < result; ++k) {
      if (fits(n, k)) {
        result = k;
        break;
      }
    }
  }
  exact_.emplace(n, result);
  return result;
}

// ||n|| <= budget?
bool BoundedSearch::fits(u64 n, unsigned budget) {
  const u64 l = table_.l();
  if (table_.contains(n)) return table_[n] <= budget;
  if (auto it = exact_.find(n); it != exact_.end()) return it->second <= budget;
  if (budget < floor_of(n)) return false;
  if (upper_bound_digits(n, l) <= budget) return true;
  if (auto it = refuted_.find(n); it != refuted_.end() && it->second >= budget) return false;

  const u64 l2 = l * l;
  if (n % l2 != 0) {
    const u64 a = (n % l2) / l;
    const u64 b = n - a * l;
    if (a > budget) return false;
    return b == 0 || fits(b, budget - static_cast<unsigned>(a));
  }

  bool ok = false;
  const u64 q = n / l2;
  for (u64 d = 1; !ok && d * d <= q; ++d) {
    if (q % d != 0) continue;
    const u64 a = d * l;
    const unsigned ca = complexity(a);
    ok = ca < budget && fits(n / a, budget - ca);
  }

  if (!ok) {
    unsigned hf = 0;  // ceil(log_l(n/2))
    for (unsigned __int128 p = 2; p < n; p *= l) ++hf;
    for (u64 a = l; !ok && a <= n / 2; a += l) {
      if (ceil_log(a, l) + hf > budget) break;
      const unsigned ca = complexity(a);
      ok = ca < budget && fits(n - a, budget - ca);
    }
  }

  if (!ok) {
    auto& r = refuted_[n];
    r = std::max(r, budget);
  }
  return ok;
}

}  // namespace lcx

#include <algorithm>

#include "lcomplex/engine.hpp"
#include "lcomplex/error.hpp"

namespace lcx {

OracleResult reachable_sets_oracle(u64 l, unsigned m_max) {
  if (l == 0 || m_max == 0) throw Error(ErrorCode::InvalidConfig, "oracle needs l >= 1 and m_max >= 1");

  // No value built from m leaves exceeds l^m (l > 1) or 3^ceil(m/3) (l = 1).
  const auto cap = l == 1 ? checked_pow(3, m_max / 3 + 1) : checked_pow(l, m_max);
  if (!cap) throw Error(ErrorCode::Overflow, "l^m_max exceeds 64 bits");

  std::vector<std::vector<u64>> levels(m_max + 1);
  levels[1] = {l};
  std::vector<char> mark(*cap / l + 1);

  for (unsigned m = 2; m <= m_max; ++m) {
    std::fill(mark.begin(), mark.end(), 0);
    for (unsigned i = 1; i <= m / 2; ++i) {
      for (u64 a : levels[i]) {
        for (u64 b : levels[m - i]) {
          const u64 sum = a + b;
          const u64 prod = a * b;  // both <= cap, so no wraparound
          mark[sum / l] = 1;
          mark[prod / l] = 1;
        }
      }
    }
    for (u64 k = 0; k < mark.size(); ++k) {
      if (mark[k]) levels[m].push_back(k * l);
    }
  }

  OracleResult out;
  out.level_max.assign(m_max + 1, 0);
  for (unsigned m = 1; m <= m_max; ++m) {
    if (!levels[m].empty()) out.level_max[m] = levels[m].back();
    for (u64 v : levels[m]) out.complexity.emplace(v, m);  // keeps the first (least) m
  }
  return out;
}

}  // namespace lcx

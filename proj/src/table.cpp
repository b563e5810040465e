#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "lcomplex/classify2.hpp"
#include "lcomplex/engine.hpp"
#include "lcomplex/error.hpp"

namespace lcx {

ComplexityTable::ComplexityTable(u64 l, u64 max_n, std::vector<std::uint8_t> entries)
    : l_(l), max_n_(max_n), entries_(std::move(entries)) {
  if (l_ == 0 || max_n_ < l_ || max_n_ % l_ != 0) {
    throw Error(ErrorCode::InvalidConfig, "table range must be a positive multiple of l");
  }
  if (entries_.size() != max_n_ / l_) {
    throw Error(ErrorCode::InvalidConfig, "table holds " + std::to_string(entries_.size()) +
                                              " entries, expected " + std::to_string(max_n_ / l_));
  }
}

unsigned ComplexityTable::complexity(u64 n) const {
  if (n == 0 || n % l_ != 0) {
    throw Error(ErrorCode::NotMultipleOfL, std::to_string(n) + " is not a multiple of l=" + std::to_string(l_));
  }
  if (n > max_n_) {
    throw Error(ErrorCode::OutOfRange, std::to_string(n) + " exceeds table range " + std::to_string(max_n_));
  }
  return (*this)[n];
}

void validate_config(const BuildConfig& cfg) {
  if (cfg.l == 0) throw Error(ErrorCode::InvalidConfig, "l must be positive");
  if (cfg.max_n < cfg.l || cfg.max_n % cfg.l != 0) {
    throw Error(ErrorCode::InvalidConfig,
                "max_n=" + std::to_string(cfg.max_n) + " is not a positive multiple of l=" + std::to_string(cfg.l));
  }
  if (cfg.threads == 0) throw Error(ErrorCode::InvalidConfig, "threads must be >= 1");
  if (cfg.l > 1 && !checked_mul(cfg.l, cfg.l)) throw Error(ErrorCode::InvalidConfig, "l*l overflows 64 bits");
  // Largest possible entry is l*log_l(max_n) - 1 (3*log_2(max_n) for l = 1).
  const long double ceiling =
      cfg.l == 1 ? 3.0L * std::log2(static_cast<long double>(cfg.max_n))
                 : static_cast<long double>(cfg.l) * std::log(static_cast<long double>(cfg.max_n)) /
                           std::log(static_cast<long double>(cfg.l)) - 1.0L;
  if (ceiling > 255.0L) {
    throw Error(ErrorCode::CapacityExceeded, "values up to " + std::to_string(static_cast<double>(ceiling)) +
                                                 " do not fit 8-bit entries");
  }
}

namespace {

using u128 = unsigned __int128;

class TableBuilder {
 public:
  explicit TableBuilder(const BuildConfig& cfg)
      : l_(cfg.l),
        l2_(cfg.l * cfg.l),
        max_n_(cfg.max_n),
        reduce_(cfg.use_reduction && cfg.l > 1),
        exhaustive_(cfg.exhaustive_additions),
        refine_(cfg.l == 2 && !cfg.exhaustive_additions),
        threads_(cfg.threads),
        entries_(cfg.max_n / cfg.l, 0) {
    if (cfg.divisors == DivisorMethod::Sieve) build_sieve(l_ == 1 ? max_n_ : max_n_ / l2_);
  }

  std::vector<std::uint8_t> run() {
    if (threads_ <= 1) {
      for (u64 n = l_; n <= max_n_; n += l_) store(n, compute(n));
    } else {
      run_blocks();
    }
    return std::move(entries_);
  }

 private:
  unsigned at(u64 n) const noexcept { return entries_[n / l_ - 1]; }
  void store(u64 n, unsigned v) noexcept { entries_[n / l_ - 1] = static_cast<std::uint8_t>(v); }

  bool reducible(u64 n) const noexcept { return reduce_ && n % l2_ != 0; }

  unsigned reduced(u64 n) const noexcept {
    const u64 a = (n % l2_) / l_;
    const u64 b = n - a * l_;
    return (b == 0 ? 0 : at(b)) + static_cast<unsigned>(a);
  }

  unsigned initial(u64 n) const {
    if (l_ > 1) return upper_bound_digits(n, l_);
    return at(n / 2) + 2 + static_cast<unsigned>(n & 1);  // n = (1+1)*(n/2) [+1]
  }

  // Floor for ||x|| over all x >= n/2, the partner of any addend a <= n/2.
  unsigned half_floor(u64 n) const noexcept {
    if (l_ == 1) {
      const u128 cube = static_cast<u128>(n) * n * n;
      unsigned k = 0;
      for (u128 p = 8; p < cube; p *= 3) ++k;
      return k;
    }
    unsigned k = 0;
    for (u128 p = 2; p < n; p *= l_) ++k;
    return k;
  }

  template <class F>
  void for_each_factor(u64 n, F&& f) const {
    u64 q;
    u64 first;
    if (l_ == 1) {
      q = n;
      first = 2;
    } else {
      if (n % l2_ != 0) return;
      q = n / l2_;
      first = 1;
    }
    if (!spf_.empty()) {
      thread_local std::vector<u64> divs;
      divs.assign(1, 1);
      for (u64 rest = q; rest > 1;) {
        const u64 p = spf_[rest];
        unsigned e = 0;
        while (rest % p == 0) {
          rest /= p;
          ++e;
        }
        const std::size_t count = divs.size();
        u64 pk = 1;
        for (unsigned i = 0; i < e; ++i) {
          pk *= p;
          for (std::size_t j = 0; j < count; ++j) divs.push_back(divs[j] * pk);
        }
      }
      for (u64 d : divs) {
        if (d >= first && d * d <= q) f(d * l_, n / (d * l_));
      }
    } else {
      for (u64 d = first; d * d <= q; ++d) {
        if (q % d == 0) f(d * l_, n / (d * l_));
      }
    }
  }

  unsigned multiplicative(u64 n, unsigned best) const {
    for_each_factor(n, [&](u64 a, u64 b) { best = std::min(best, at(a) + at(b)); });
    return best;
  }

  // Addition splits n = a + (n - a) for a in [a_lo, a_hi], a multiple of l.
  unsigned additive(u64 n, u64 a_lo, u64 a_hi, unsigned best) const {
    if (a_lo > a_hi) return best;
    const unsigned hf = half_floor(n);
    unsigned lb = 0;
    u128 pw = 1;  // l = 1: 3^lb against a^3; l > 1: l^lb against a
    for (u64 a = a_lo; a <= a_hi; a += l_) {
      if (l_ == 1) {
        const u128 cube = static_cast<u128>(a) * a * a;
        while (pw < cube) {
          pw *= 3;
          ++lb;
        }
      } else {
        while (pw < a) {
          pw *= l_;
          ++lb;
        }
      }
      if (!exhaustive_ && lb + hf >= best) break;
      const u64 b = n - a;
      if (refine_ && refined_lower_bound_2(a) + refined_lower_bound_2(b) >= best) continue;
      best = std::min(best, at(a) + at(b));
    }
    return best;
  }

  unsigned compute(u64 n) const {
    if (n == l_) return 1;
    if (reducible(n)) return reduced(n);
    unsigned best = multiplicative(n, initial(n));
    return additive(n, l_, n / 2, best);
  }

  // Entries below B are final before [B, 2B) starts. Products and the large
  // addends only touch that prefix and run in parallel; the small addends
  // reach back into the block and are finished in ascending order.
  void run_blocks() {
    const u64 seed_end = std::min(max_n_, l_ * 4096);
    for (u64 n = l_; n <= seed_end; n += l_) store(n, compute(n));

    std::vector<std::uint8_t> partial;
    for (u64 lo = seed_end + l_; lo <= max_n_;) {
      const u64 hi = std::min(max_n_, 2 * lo - l_);  // last n in the block, n < 2*lo
      const u64 count = (hi - lo) / l_ + 1;
      partial.assign(count, 0);

      std::atomic<u64> next{0};
      constexpr u64 chunk = 1024;
      auto worker = [&] {
        for (;;) {
          const u64 begin = next.fetch_add(chunk);
          if (begin >= count) return;
          const u64 end = std::min(count, begin + chunk);
          for (u64 i = begin; i < end; ++i) {
            const u64 n = lo + i * l_;
            if (reducible(n)) continue;
            const u64 from = std::max(l_, (n - lo) / l_ * l_ + l_);  // first a with n - a < lo
            partial[i] = static_cast<std::uint8_t>(additive(n, from, n / 2, multiplicative(n, initial(n))));
          }
        }
      };
      {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads_; ++t) pool.emplace_back(worker);
      }

      for (u64 i = 0; i < count; ++i) {
        const u64 n = lo + i * l_;
        if (reducible(n)) {
          store(n, reduced(n));
        } else {
          const u64 to = std::min(n / 2, n - lo);
          store(n, additive(n, l_, to, partial[i]));
        }
      }
      lo = hi + l_;
    }
  }

  void build_sieve(u64 limit) {
    spf_.assign(limit + 1, 0);
    std::vector<u64> primes;
    for (u64 i = 2; i <= limit; ++i) {
      if (spf_[i] == 0) {
        spf_[i] = static_cast<std::uint32_t>(i);
        primes.push_back(i);
      }
      for (u64 p : primes) {
        if (p > spf_[i] || i * p > limit) break;
        spf_[i * p] = static_cast<std::uint32_t>(p);
      }
    }
  }

  u64 l_;
  u64 l2_;
  u64 max_n_;
  bool reduce_;
  bool exhaustive_;
  bool refine_;
  unsigned threads_;
  std::vector<std::uint8_t> entries_;
  std::vector<std::uint32_t> spf_;
};

}  // namespace

ComplexityTable build_table(const BuildConfig& cfg) {
  validate_config(cfg);
  return ComplexityTable(cfg.l, cfg.max_n, TableBuilder(cfg).run());
}

std::vector<u64> small_factors(u64 n, u64 l) {
  std::vector<u64> out;
  if (l == 1) {
    for (u64 a = 2; a * a <= n; ++a) {
      if (n % a == 0) out.push_back(a);
    }
    return out;
  }
  const u64 l2 = l * l;
  if (n % l2 != 0) return out;
  const u64 q = n / l2;
  for (u64 d = 1; d * d <= q; ++d) {
    if (q % d == 0) out.push_back(d * l);
  }
  return out;
}

namespace {

Expr witness_of(const ComplexityTable& t, u64 n) {
  const u64 l = t.l();
  if (n == l) return Expr::leaf();
  const unsigned c = t[n];

  if (l > 1 && n % (l * l) != 0) {
    const u64 a = (n % (l * l)) / l;
    const u64 b = n - a * l;
    if (b == 0) return repeated_sum(static_cast<unsigned>(a));
    Expr e = witness_of(t, b);
    for (u64 i = 0; i < a; ++i) e = Expr::add(e, Expr::leaf());
    return e;
  }
  for (u64 a : small_factors(n, l)) {
    const u64 b = n / a;
    if (t[a] + t[b] == c) return Expr::mul(witness_of(t, a), witness_of(t, b));
  }
  for (u64 a = l; a <= n / 2; a += l) {
    if (t[a] + t[n - a] == c) return Expr::add(witness_of(t, a), witness_of(t, n - a));
  }
  throw std::logic_error("table entry for " + std::to_string(n) + " has no supporting split");
}

}  // namespace

Expr witness(const ComplexityTable& table, u64 n) {
  table.complexity(n);  // range and divisibility checks
  return witness_of(table, n);
}

unsigned defect(const ComplexityTable& table, u64 n) {
  const unsigned c = table.complexity(n);
  if (table.l() > 1) return c - floor_log(n, table.l());
  // largest k with 3^k <= n^3
  using u128 = unsigned __int128;
  const u128 cube = static_cast<u128>(n) * n * n;
  unsigned k = 0;
  for (u128 p = 3; p <= cube; p *= 3) ++k;
  return c - k;
}

std::map<unsigned, u64> defect_histogram(const ComplexityTable& table) {
  std::map<unsigned, u64> hist;
  const u64 l = table.l();
  for (u64 n = l; n <= table.max_n(); n += l) ++hist[defect(table, n)];
  return hist;
}

}  // namespace lcx

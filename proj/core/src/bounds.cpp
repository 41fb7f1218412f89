#include "sysgraph/bounds.hpp"

#include <stdexcept>

namespace sysgraph {

namespace mp = boost::multiprecision;

BigInt binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt ceil_rat(const BigRat& r) {
  BigInt num = mp::numerator(r);
  BigInt den = mp::denominator(r);
  BigInt q = num / den;  // truncates toward zero
  if (num > 0 && q * den != num) ++q;
  return q;
}

namespace {

void require_domain(BoundParams p, int min_chi) {
  if (p.chi < 1 || p.k < 1) throw std::domain_error("bounds: require chi >= 1, k >= 1");
  if (p.chi < min_chi)
    throw std::domain_error("bounds: chi = " + std::to_string(p.chi) +
                            " below evaluator domain (needs chi >= " + std::to_string(min_chi) +
                            ")");
}

BoundValue make(BoundId id, BigRat raw) {
  BoundValue v;
  v.id = id;
  v.ceiled = ceil_rat(raw);
  v.raw = std::move(raw);
  return v;
}

BoundValue one(BoundId id) { return make(id, 1); }

long long half_floor(int x) { return (x - 1) / 2; }  // floor((x-1)/2) for x >= 1

/// prod_{i=0}^{k-1} (base + i) over 2^{k-1} k^k.
BigRat product_term(int base, int k) {
  BigInt num = 1;
  for (int i = 0; i < k; ++i) num *= base + i;
  BigInt den = mp::pow(BigInt(2), static_cast<unsigned>(k - 1)) *
               mp::pow(BigInt(k), static_cast<unsigned>(k));
  return BigRat(num, den);
}

/// 2 C(k-2+J, J) + C(k-2+J, J-1) with J = floor((chi-1)/2).
BigInt mix_ball_term(int chi, int k) {
  long long j = half_floor(chi);
  return 2 * binom(k - 2 + j, j) + binom(k - 2 + j, j - 1);
}

}  // namespace

BoundValue bound_sys(BoundParams p) {
  require_domain(p, 1);
  long long j = half_floor(p.chi);
  return make(BoundId::Sys,
              BigRat(2 * binom(p.k - 1 + j, p.k - 1) + binom(p.k - 1 + j, p.k) - 1));
}

BoundValue bound_bb1(BoundParams p) {
  require_domain(p, 1);
  if (p.chi == 1) return one(BoundId::BB1);
  return make(BoundId::BB1, product_term(p.chi + p.k - 1, p.k) + 1);
}

BoundValue bound_bb2(BoundParams p) {
  require_domain(p, 1);
  if (p.chi == 1) return one(BoundId::BB2);
  return make(BoundId::BB2, product_term(p.chi + p.k - 2, p.k) +
                                BigInt(p.chi - 1) * (p.k - 1) + 2);
}

BoundValue bound_bb3(BoundParams p) {
  require_domain(p, 1);
  if (p.chi == 1) return one(BoundId::BB3);
  BigRat middle(BigInt(p.k - 1) * (p.chi - 2) * (p.chi + 1), 2);
  return make(BoundId::BB3, BigRat(p.chi - 1) + middle + 1);
}

BoundValue bound_mix1(BoundParams p) {
  require_domain(p, 1);
  if (p.chi == 1) return one(BoundId::Mix1);
  return make(BoundId::Mix1,
              product_term(p.chi + p.k - 2, p.k) + mix_ball_term(p.chi, p.k) + 1);
}

BoundValue bound_mix2(BoundParams p) {
  require_domain(p, 1);
  if (p.chi == 1) return one(BoundId::Mix2);
  BigRat middle(BigInt(p.k - 1) * (p.chi - 3) * p.chi, 2);
  return make(BoundId::Mix2,
              BigRat(p.chi - 2) + middle + BigRat(mix_ball_term(p.chi, p.k)) + 1);
}

BoundValue bound_mix3_printed(BoundParams p) {
  require_domain(p, 1);
  if (p.chi == 1) return one(BoundId::Mix3Printed);
  long long j = half_floor(p.chi);
  BigInt value = 4 * binom(p.k - 1 + j, j) + 2 * binom(p.k - 1 + j, j - 1) - 1;
  if (p.chi % 2 == 0) value -= 2 * binom(p.k - 2 + j, j) + binom(p.k - 2 + j, j - 1);
  return make(BoundId::Mix3Printed, BigRat(value));
}

BoundValue bound_mix3_recursive(BoundParams p) {
  require_domain(p, 1);
  if (p.chi == 1) return one(BoundId::Mix3Recursive);
  return make(BoundId::Mix3Recursive, BigRat(f_recursive(p.chi - 1, p.k) + 1));
}

BoundValue bound_eq2(BoundParams p) {
  require_domain(p, 1);
  if (p.chi == 1) return one(BoundId::Eq2);
  return make(BoundId::Eq2, BigRat(BigInt(p.k - 1) * (p.chi - 1) + 1));
}

BoundValue ball_lower_a(BoundParams p) {
  require_domain(p, 3);
  long long j = half_floor(p.chi);
  return make(BoundId::BallA, BigRat(2 * binom(p.k - 2 + j, j) + binom(p.k - 2 + j, j - 1)));
}

BoundValue ball_lower_b(BoundParams p) {
  require_domain(p, 3);
  long long j = half_floor(p.chi);
  return make(BoundId::BallB,
              BigRat(2 * binom(p.k - 1 + j, p.k - 1) + binom(p.k - 1 + j, p.k) - 1));
}

BigInt d_lower(int m, int k) {
  if (m < 1 || k < 1) throw std::domain_error("d_lower: require m >= 1, k >= 1");
  long long h = m / 2;
  return 2 * binom(k - 2 + h, h) + binom(k - 2 + h, h - 1);
}

BigInt f_recursive(int m, int k) {
  if (m < 1 || k < 1) throw std::domain_error("f_recursive: require m >= 1, k >= 1");
  BigInt f = 1;
  for (int c = 2; c <= m; ++c) f += d_lower(c, k);
  return f;
}

BnTable bn_table(int n, int r) {
  if (n < 1 || r < 0) throw std::domain_error("bn_table: require n >= 1, r >= 0");
  BnTable table;
  table.n = n;
  table.r = r;
  table.values.resize(static_cast<std::size_t>(r) + 2);
  for (int i = 0; i <= r; ++i) table.values[static_cast<std::size_t>(i)] = 2 * i + 1;
  table.values[static_cast<std::size_t>(r) + 1] = 2 * r + 2;
  for (int level = 2; level <= n; ++level) {
    BigInt running = 0;
    for (auto& value : table.values) {
      running += value;
      value = running;
    }
  }
  return table;
}

BoundValue bound_gromov(int n_essential, int s) {
  if (n_essential < 1) throw std::domain_error("gromov: require essentiality >= 1");
  if (s < 3) throw std::domain_error("gromov: require finite girth >= 3");
  long long n = n_essential, s2 = s / 2;
  return make(BoundId::Gromov,
              BigRat(binom(n + s2 - 1, n - 1) + 2 * binom(n + s2 - 1, n) - 1));
}

BoundValue evaluate_bound(BoundId id, BoundParams p) {
  switch (id) {
    case BoundId::Sys: return bound_sys(p);
    case BoundId::BB1: return bound_bb1(p);
    case BoundId::BB2: return bound_bb2(p);
    case BoundId::BB3: return bound_bb3(p);
    case BoundId::Mix1: return bound_mix1(p);
    case BoundId::Mix2: return bound_mix2(p);
    case BoundId::Mix3Printed: return bound_mix3_printed(p);
    case BoundId::Mix3Recursive: return bound_mix3_recursive(p);
    case BoundId::BallA: return ball_lower_a(p);
    case BoundId::BallB: return ball_lower_b(p);
    case BoundId::Eq2: return bound_eq2(p);
    case BoundId::Gromov: break;
  }
  throw std::invalid_argument("evaluate_bound: estimate is not (chi, k)-parameterized");
}

BoundValue best_bound(BoundParams p, std::span<const BoundId> catalog) {
  if (catalog.empty()) throw std::invalid_argument("best_bound: empty catalog");
  BoundValue best = evaluate_bound(catalog.front(), p);
  for (std::size_t i = 1; i < catalog.size(); ++i) {
    BoundValue candidate = evaluate_bound(catalog[i], p);
    if (candidate.raw >= best.raw) best = std::move(candidate);
  }
  return best;
}

std::string bound_label(BoundId id) {
  switch (id) {
    case BoundId::Sys: return "sys";
    case BoundId::BB1: return "BB-1";
    case BoundId::BB2: return "BB-2";
    case BoundId::BB3: return "BB-3";
    case BoundId::Mix1: return "MIX-1";
    case BoundId::Mix2: return "MIX-2";
    case BoundId::Mix3Printed: return "MIX-3";
    case BoundId::Mix3Recursive: return "MIX-3rec";
    case BoundId::BallA: return "ball-A";
    case BoundId::BallB: return "ball-B";
    case BoundId::Eq2: return "EQ-2";
    case BoundId::Gromov: return "gromov";
  }
  throw std::invalid_argument("bound_label: unknown id");
}

std::string bound_name(BoundId id) {
  switch (id) {
    case BoundId::Sys: return "sys";
    case BoundId::BB1: return "bb1";
    case BoundId::BB2: return "bb2";
    case BoundId::BB3: return "bb3";
    case BoundId::Mix1: return "mix1";
    case BoundId::Mix2: return "mix2";
    case BoundId::Mix3Printed: return "mix3_printed";
    case BoundId::Mix3Recursive: return "mix3_recursive";
    case BoundId::BallA: return "ball_a";
    case BoundId::BallB: return "ball_b";
    case BoundId::Eq2: return "eq2";
    case BoundId::Gromov: return "gromov";
  }
  throw std::invalid_argument("bound_name: unknown id");
}

std::optional<BoundId> bound_from_name(std::string_view name) {
  for (BoundId id : {BoundId::Sys, BoundId::BB1, BoundId::BB2, BoundId::BB3, BoundId::Mix1,
                     BoundId::Mix2, BoundId::Mix3Printed, BoundId::Mix3Recursive, BoundId::BallA,
                     BoundId::BallB, BoundId::Eq2, BoundId::Gromov}) {
    if (bound_name(id) == name) return id;
  }
  return std::nullopt;
}

std::string rat_string(const BigRat& r) {
  BigInt num = mp::numerator(r);
  BigInt den = mp::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace sysgraph

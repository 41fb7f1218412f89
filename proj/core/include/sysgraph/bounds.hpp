#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sysgraph {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Binomial coefficient with the convention C(n, k) = 0 for k < 0, n < 0 or
/// k > n. Exact for any arguments.
BigInt binom(long long n, long long k);

BigInt ceil_rat(const BigRat& r);

/// The catalog of vertex-count / ball-size estimates, in the order they are
/// compared (ties between equal values are broken toward the later entry).
enum class BoundId {
  Sys,            // 2 C(k-1+J, k-1) + C(k-1+J, k) - 1,  J = floor((chi-1)/2)
  BB1,            // prod_{i<k}(chi+k-1+i) / (2^{k-1} k^k) + 1
  BB2,            // prod_{i<k}(chi+k-2+i) / (2^{k-1} k^k) + (chi-1)(k-1) + 2
  BB3,            // (chi-1) + (k-1)(chi-2)(chi+1)/2 + 1
  Mix1,           // BB2 product + ball term + 1
  Mix2,           // (chi-2) + (k-1)(chi-3)chi/2 + ball term + 1
  Mix3Printed,    // binomial form as printed (odd/even chi cases)
  Mix3Recursive,  // f_recursive(chi-1, k) + 1
  BallA,          // radius-(k-1) ball estimate, 2 C(k-2+n0, n0) + C(k-2+n0, n0-1)
  BallB,          // radius-k ball estimate, 2 C(k-1+n0, k-1) + C(k-1+n0, k) - 1
  Eq2,            // radius-(k-1) ball estimate, (k-1)(chi-1) + 1
  Gromov,         // C(n+s2-1, n-1) + 2 C(n+s2-1, n) - 1, n = forest essentiality
};

struct BoundParams {
  int chi = 0;
  int k = 0;
};

/// One evaluated estimate: exact rational value and its ceiling (the usable
/// integer lower bound).
struct BoundValue {
  BoundId id{};
  BigRat raw;
  BigInt ceiled;
};

// Every (chi, k) evaluator below requires chi >= 1 and k >= 1, evaluates the
// formula exactly as printed, and returns 1 when chi == 1 (every estimate
// degenerates to the one-vertex bound there).
BoundValue bound_sys(BoundParams p);
BoundValue bound_bb1(BoundParams p);
BoundValue bound_bb2(BoundParams p);
BoundValue bound_bb3(BoundParams p);
BoundValue bound_mix1(BoundParams p);  // chi >= 2
BoundValue bound_mix2(BoundParams p);  // chi >= 2
BoundValue bound_mix3_printed(BoundParams p);
BoundValue bound_mix3_recursive(BoundParams p);
BoundValue bound_eq2(BoundParams p);
BoundValue ball_lower_a(BoundParams p);  // chi >= 3
BoundValue ball_lower_b(BoundParams p);  // chi >= 3

/// Radius-(k-1) ball lower estimate for m-chromatic subgraphs:
/// 2 C(k-2+floor(m/2), floor(m/2)) + C(k-2+floor(m/2), floor(m/2)-1).
BigInt d_lower(int m, int k);

/// f(1, k) = 1; f(m, k) = 1 + sum_{c=2..m} d_lower(c, k). Monotone in both
/// arguments; the sound recursive variant of the Mix3 estimate is f(chi-1,k)+1.
BigInt f_recursive(int m, int k);

/// Ball-size table b_n(i) for i = 0..r+1 from the layered recursion:
/// b_1(i) = 2i+1 (i <= r), b_1(r+1) = 2r+2, b_n(i) = sum_{j<=i} b_{n-1}(j).
struct BnTable {
  int n = 0;
  int r = 0;
  std::vector<BigInt> values;  // index i = 0..r+1
};
BnTable bn_table(int n, int r);

/// C(n+floor(s/2)-1, n-1) + 2 C(n+floor(s/2)-1, n) - 1 for an n-essential
/// complex with systole s; requires n >= 1 and finite s >= 3.
BoundValue bound_gromov(int n_essential, int s);

/// Dispatch for the (chi, k)-parameterized estimates (everything but Gromov).
BoundValue evaluate_bound(BoundId id, BoundParams p);

/// Largest raw value in the catalog; ties prefer the later catalog entry.
BoundValue best_bound(BoundParams p, std::span<const BoundId> catalog);

inline constexpr std::array<BoundId, 4> table1_catalog{BoundId::Sys, BoundId::BB1, BoundId::BB2,
                                                       BoundId::BB3};
inline constexpr std::array<BoundId, 7> table2_catalog{BoundId::Sys,  BoundId::BB1,  BoundId::BB2,
                                                       BoundId::BB3,  BoundId::Mix1, BoundId::Mix2,
                                                       BoundId::Mix3Printed};

/// Display label ("sys", "BB-2", "MIX-3", ...). The two Mix3 variants carry
/// distinct labels outside table rendering.
std::string bound_label(BoundId id);
/// Stable lowercase identifier ("sys", "bb2", "mix3_printed", ...).
std::string bound_name(BoundId id);
std::optional<BoundId> bound_from_name(std::string_view name);

/// "p/q" (or "p" for integers) — exact fractions are always printed this way.
std::string rat_string(const BigRat& r);

}  // namespace sysgraph

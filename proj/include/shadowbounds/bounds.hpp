#ifndef SHADOWBOUNDS_BOUNDS_HPP
#define SHADOWBOUNDS_BOUNDS_HPP

#include "shadowbounds/arith.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace sdb::bounds {

// Which closed-form case produced a bound. The improved bound dispatches on
// five disjoint regions of the (n, d) plane, the prior bound on three.
enum class CaseTag {
  N2Mod4,  // v-split maximization over Delsarte caps, n == 2 (mod 4)
  PriorI,
  PriorII,
  PriorIII,
  ImprovedI,
  ImprovedII,
  ImprovedIII,
  ImprovedIV,
  ImprovedV,
};

// "2mod4", "prior-i".."prior-iii", "i".."v".
const char* case_tag_label(CaseTag tag);

// Length n, code minimum weight d, shadow minimum weight s = d/2 + 1.
struct ShadowParams {
  std::int64_t n = 0;
  std::int64_t d = 0;
  std::int64_t s = 0;
};

// Validate n == 0 (mod 4), d == n-2 (mod 8); derives s = d/2 + 1 (even).
ShadowParams shadow_params_0mod4(std::int64_t n, std::int64_t d);
// Validate n == 2 (mod 4), s odd, s >= 3, 2s == n (mod 8) (i.e. d == n-2 (mod 8)).
ShadowParams shadow_params_2mod4(std::int64_t n, std::int64_t s);

// An upper bound on B_s, the number of weight-s shadow vectors.
struct BoundStatement {
  std::int64_t n = 0;
  std::int64_t d = 0;
  std::int64_t s = 0;
  std::int64_t bound = 0;               // floored value
  Rational bound_exact;                 // exact value before flooring
  CaseTag case_tag = CaseTag::N2Mod4;
  std::vector<std::int64_t> excluded;   // values below the bound that are impossible
};

// B_s <= max over 0 <= v <= n/2 of floor(M(v, s) + M(n-v, s)), where M is the
// Delsarte cap of johnson::bound_m. Only for n == 2 (mod 4).
BoundStatement bound_n2mod4(std::int64_t n, std::int64_t s);

// Cap 2k - 1 on the number of weight-s vectors in one shadow coset, with
// k = ceil((n-d+2)/(2s)), from summing them with the all-one vector. Empty
// when 2s divides n (no constraint arises). Only for n == 0 (mod 4).
std::optional<std::int64_t> odd_coset_cap(std::int64_t n, std::int64_t d);

// max{a+b : a, b integers, 0 <= a,b <= s, s(a+b) - ab <= n}.
// Closed form 2s - ceil(2 sqrt(s^2 - n)); requires n < s^2.
std::int64_t max_ab_closed(std::int64_t s, std::int64_t n);

// Exhaustive version, valid for every n >= 0; also returns the achieving
// unordered pairs {a, b} with a <= b.
struct MaxAbResult {
  std::int64_t value = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
};
MaxAbResult max_ab_bruteforce(std::int64_t s, std::int64_t n);

// The two coarse per-coset caps l1, l2 and their refinements l1p <= l1,
// l2p <= l2. Only for n == 0 (mod 4).
struct LBounds {
  Rational l1;   // 2n/(d+2)
  Rational l2;   // min{d+2, 2(2n-d-2)/d}
  Rational l1p;  // l1 if 2s | n, else 2*ceil((n-d+2)/(d+2)) - 1
  Rational l2p;  // d+2-ceil(sqrt((d+2)^2-4n)) if 4n < (d+2)^2, else min{d+2, 4*ceil((n-d+2)/(d+2)) - 2}
};
LBounds l_bounds(std::int64_t n, std::int64_t d);

// Baseline three-case bound on B_s for n == 0 (mod 4).
BoundStatement bound_prior(std::int64_t n, std::int64_t d);

// Improved five-case bound on B_s for n == 0 (mod 4); always equals
// floor(max{l1p, l2p}) and never exceeds bound_prior.
BoundStatement bound_improved(std::int64_t n, std::int64_t d);

struct Table1Row {
  std::int64_t n = 0;
  std::int64_t dn = 0;  // largest published minimum weight for this length
  std::int64_t d = 0;
  std::int64_t s = 0;
  BoundStatement stmt;
};

struct Table2Row {
  std::int64_t n = 0;
  std::optional<std::int64_t> dn;
  std::int64_t d = 0;
  std::int64_t s = 0;
  BoundStatement improved;
  BoundStatement prior;
};

// The shipped parameter sets; bounds are recomputed on every call.
std::vector<Table1Row> table1();
std::vector<Table2Row> table2();

}  // namespace sdb::bounds

#endif

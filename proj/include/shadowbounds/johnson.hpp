#ifndef SHADOWBOUNDS_JOHNSON_HPP
#define SHADOWBOUNDS_JOHNSON_HPP

#include "shadowbounds/arith.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace sdb::johnson {

// Johnson graph J(v, d): vertices are the d-subsets of a v-set; relation R_i
// joins subsets meeting in d - i points.
struct JohnsonParams {
  std::int64_t v = 0;
  std::int64_t d = 0;
};

// Second eigenmatrix of J(v, d). entry(i, j) = q_j(i), the degree-j Hahn
// polynomial evaluated at relation index i. Requires v >= 2d.
class EigenmatrixQ {
 public:
  EigenmatrixQ(JohnsonParams params, std::vector<std::vector<Rational>> entries)
      : params_(params), entries_(std::move(entries)) {}

  const JohnsonParams& params() const { return params_; }
  std::int64_t size() const { return params_.d + 1; }
  const Rational& entry(std::int64_t relation, std::int64_t eigenspace) const {
    return entries_.at(static_cast<std::size_t>(relation)).at(static_cast<std::size_t>(eigenspace));
  }

 private:
  JohnsonParams params_;
  std::vector<std::vector<Rational>> entries_;
};

// Hahn polynomial value for J(v, k):
//   (C(v,l) - C(v,l-1)) * sum_{i=0}^{l} (-1)^i C(l,i) C(v+1-l,i) C(x,i) / (C(k,i) C(v-k,i))
// Requires v >= 2k (the denominators vanish otherwise), 0 <= l <= k, 0 <= x <= k.
Rational hahn(std::int64_t v, std::int64_t k, std::int64_t l, std::int64_t x);

EigenmatrixQ q_matrix(const JohnsonParams& params);

// Inner distribution of a nonempty vertex set Y:
//   counts[i] = |(Y x Y) ∩ R_i| / |Y|.
struct IntersectionDistribution {
  std::vector<Rational> counts;
  std::uint64_t size = 0;
};

// Subsets are bitmasks over ground-set elements 0..v-1 (v <= 64). Returns the
// inner distribution a and the product vector aQ; the Delsarte inequalities
// say every entry of aQ is nonnegative.
std::pair<IntersectionDistribution, std::vector<Rational>> delsarte_vector(
    const std::vector<std::uint64_t>& subsets, const JohnsonParams& params);

// Exact cap on |Y| for families Y of d-subsets of a v-set whose distinct
// members meet in exactly one point:
//   min{ 1 - q_j(0)/q_j(d-1) : 1 <= j <= d, q_j(d-1) < 0 }   for v >= 2d,
// and 2 / 1 / 0 on the short ranges v = 2d-1, d <= v <= 2d-2, v <= d-1.
// Not floored. Signals a domain error if no eigenspace index qualifies.
Rational bound_m(std::int64_t v, std::int64_t d);

}  // namespace sdb::johnson

#endif

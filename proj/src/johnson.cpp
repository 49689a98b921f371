#include "shadowbounds/johnson.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <set>

namespace sdb::johnson {

Rational hahn(std::int64_t v, std::int64_t k, std::int64_t l, std::int64_t x) {
  if (k < 1) throw DomainError("hahn: k must be positive");
  if (v < 2 * k) throw DomainError("hahn: requires v >= 2k");
  if (l < 0 || l > k) throw DomainError("hahn: l out of range [0, k]");
  if (x < 0 || x > k) throw DomainError("hahn: x out of range [0, k]");
  Rational sum = 0;
  for (std::int64_t i = 0; i <= l; ++i) {
    const BigInt cxi = binom(x, i);
    if (cxi == 0) break;  // all later terms vanish as well
    Rational term(binom(l, i) * binom(v + 1 - l, i) * cxi, binom(k, i) * binom(v - k, i));
    if (i % 2 == 1)
      sum -= term;
    else
      sum += term;
  }
  return Rational(binom(v, l) - binom(v, l - 1)) * sum;
}

EigenmatrixQ q_matrix(const JohnsonParams& params) {
  if (params.d < 1) throw DomainError("q_matrix: d must be positive");
  if (params.v < 2 * params.d) throw DomainError("q_matrix: requires v >= 2d");
  const std::int64_t m = params.d + 1;
  std::vector<std::vector<Rational>> entries(m, std::vector<Rational>(m));
  for (std::int64_t i = 0; i < m; ++i)
    for (std::int64_t j = 0; j < m; ++j) entries[i][j] = hahn(params.v, params.d, j, i);
  return EigenmatrixQ(params, std::move(entries));
}

std::pair<IntersectionDistribution, std::vector<Rational>> delsarte_vector(
    const std::vector<std::uint64_t>& subsets, const JohnsonParams& params) {
  const std::int64_t v = params.v;
  const std::int64_t d = params.d;
  if (v < 1 || v > 64) throw DomainError("delsarte_vector: v must be in [1, 64]");
  if (subsets.empty()) throw DomainError("delsarte_vector: Y must be nonempty");
  const std::uint64_t ground = (v == 64) ? ~0ull : ((1ull << v) - 1);
  std::set<std::uint64_t> seen;
  for (std::uint64_t y : subsets) {
    if ((y & ~ground) != 0) throw DomainError("delsarte_vector: subset has elements outside the ground set");
    if (std::popcount(y) != d) throw DomainError("delsarte_vector: member is not a d-subset");
    if (!seen.insert(y).second) throw DomainError("delsarte_vector: members must be distinct");
  }

  std::vector<BigInt> pair_counts(static_cast<std::size_t>(d + 1), 0);
  for (std::uint64_t a : subsets)
    for (std::uint64_t b : subsets) pair_counts[static_cast<std::size_t>(d - std::popcount(a & b))] += 1;

  IntersectionDistribution dist;
  dist.size = subsets.size();
  dist.counts.resize(static_cast<std::size_t>(d + 1));
  for (std::int64_t i = 0; i <= d; ++i)
    dist.counts[static_cast<std::size_t>(i)] = Rational(pair_counts[static_cast<std::size_t>(i)], BigInt(dist.size));

  const EigenmatrixQ q = q_matrix(params);
  std::vector<Rational> product(static_cast<std::size_t>(d + 1), 0);
  for (std::int64_t j = 0; j <= d; ++j) {
    Rational acc = 0;
    for (std::int64_t i = 0; i <= d; ++i) acc += dist.counts[static_cast<std::size_t>(i)] * q.entry(i, j);
    product[static_cast<std::size_t>(j)] = acc;
  }
  return {std::move(dist), std::move(product)};
}

Rational bound_m(std::int64_t v, std::int64_t d) {
  if (d < 1) throw DomainError("bound_m: d must be positive");
  if (v < 0) throw DomainError("bound_m: v must be nonnegative");
  if (v <= d - 1) return 0;
  if (v <= 2 * d - 2) return 1;
  if (v == 2 * d - 1) return 2;

  const EigenmatrixQ q = q_matrix({v, d});
  if (q.entry(d - 1, 0) != 1) throw InternalError("bound_m: trivial eigenspace column is not all ones");
  std::optional<Rational> best;
  for (std::int64_t j = 1; j <= d; ++j) {
    const Rational& at_d1 = q.entry(d - 1, j);
    if (at_d1 < 0) {
      Rational candidate = 1 - q.entry(0, j) / at_d1;
      if (!best || candidate < *best) best = candidate;
    }
  }
  if (!best) throw DomainError("bound_m: no negative eigenvalue entry at relation d-1");
  return *best;
}

}  // namespace sdb::johnson

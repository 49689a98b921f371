#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "shadowbounds/johnson.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>
#include <vector>

using sdb::BigInt;
using sdb::Rational;
using namespace sdb::johnson;

namespace {

void check_eigenmatrix_invariants(std::int64_t v, std::int64_t d) {
  const EigenmatrixQ q = q_matrix({v, d});
  for (std::int64_t i = 0; i <= d; ++i) CHECK(q.entry(i, 0) == 1);
  for (std::int64_t j = 0; j <= d; ++j)
    CHECK(q.entry(0, j) == Rational(sdb::binom(v, j) - sdb::binom(v, j - 1)));
  // weighted orthogonality with valencies k_i = C(d,i) C(v-d,i)
  for (std::int64_t j = 0; j <= d; ++j)
    for (std::int64_t jp = j; jp <= d; ++jp) {
      Rational acc = 0;
      for (std::int64_t i = 0; i <= d; ++i)
        acc += Rational(sdb::binom(d, i) * sdb::binom(v - d, i)) * q.entry(i, j) * q.entry(i, jp);
      const Rational expected = (j == jp) ? Rational(sdb::binom(v, d)) * q.entry(0, j) : Rational(0);
      CHECK(acc == expected);
    }
}

std::uint64_t random_subset(std::int64_t v, std::int64_t d, std::mt19937_64& rng) {
  std::vector<int> idx(static_cast<std::size_t>(v));
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng);
  std::uint64_t mask = 0;
  for (std::int64_t i = 0; i < d; ++i) mask |= 1ull << idx[static_cast<std::size_t>(i)];
  return mask;
}

}  // namespace

TEST_CASE("hahn polynomial special values") {
  // l = 0 collapses to the single i = 0 term
  for (std::int64_t v = 4; v <= 12; ++v)
    for (std::int64_t k = 1; 2 * k <= v; ++k)
      for (std::int64_t x = 0; x <= k; ++x) CHECK(hahn(v, k, 0, x) == 1);
  // x = 0 kills every i >= 1 term
  for (std::int64_t l = 0; l <= 4; ++l)
    CHECK(hahn(10, 4, l, 0) == Rational(sdb::binom(10, l) - sdb::binom(10, l - 1)));
  // hand evaluation: 3 * (1 - 1*4*(1/2)*(1/2)*1) = 0
  CHECK(hahn(4, 2, 1, 1) == 0);

  CHECK_THROWS_AS(hahn(3, 2, 0, 0), sdb::DomainError);   // v < 2k
  CHECK_THROWS_AS(hahn(8, 3, 4, 0), sdb::DomainError);   // l > k
  CHECK_THROWS_AS(hahn(8, 3, 0, -1), sdb::DomainError);  // x out of range
}

TEST_CASE("eigenmatrix of J(4,2) (octahedron)") {
  const EigenmatrixQ q = q_matrix({4, 2});
  const std::int64_t expected[3][3] = {{1, 3, 2}, {1, 0, -1}, {1, -3, 2}};
  for (std::int64_t i = 0; i <= 2; ++i)
    for (std::int64_t j = 0; j <= 2; ++j) CHECK(q.entry(i, j) == expected[i][j]);
  CHECK(q.entry(0, 1) == sdb::binom(4, 1) - sdb::binom(4, 0));
}

TEST_CASE("eigenmatrix invariants over a moderate sweep") {
  for (std::int64_t d = 1; d <= 6; ++d)
    for (std::int64_t v = 2 * d; v <= 20; ++v) check_eigenmatrix_invariants(v, d);
  check_eigenmatrix_invariants(9, 4);
}

TEST_CASE("delsarte vector of a single vertex is the multiplicity row") {
  const JohnsonParams params{8, 3};
  const auto [dist, product] = delsarte_vector({0b00000111ull}, params);
  CHECK(dist.size == 1);
  CHECK(dist.counts[0] == 1);
  for (std::int64_t i = 1; i <= 3; ++i) CHECK(dist.counts[static_cast<std::size_t>(i)] == 0);
  const EigenmatrixQ q = q_matrix(params);
  for (std::int64_t j = 0; j <= 3; ++j) {
    CHECK(product[static_cast<std::size_t>(j)] == q.entry(0, j));
    CHECK(product[static_cast<std::size_t>(j)] > 0);
  }
}

TEST_CASE("delsarte vector of the complete design") {
  const JohnsonParams params{6, 3};
  std::vector<std::uint64_t> all;
  for (std::uint64_t m = 0; m < 64; ++m)
    if (std::popcount(m) == 3) all.push_back(m);
  CHECK(all.size() == 20);
  const auto [dist, product] = delsarte_vector(all, params);
  CHECK(product[0] == 20);
  for (std::size_t j = 1; j < product.size(); ++j) CHECK(product[j] == 0);
}

TEST_CASE("delsarte nonnegativity on random vertex sets") {
  std::mt19937_64 rng(20240817);
  for (const auto& [v, d] : std::vector<std::pair<std::int64_t, std::int64_t>>{{8, 3}, {10, 4}, {12, 5}}) {
    for (int trial = 0; trial < 100; ++trial) {
      std::uniform_int_distribution<int> size_dist(1, 40);
      std::set<std::uint64_t> chosen;
      const int want = size_dist(rng);
      while (static_cast<int>(chosen.size()) < want) chosen.insert(random_subset(v, d, rng));
      const auto [dist, product] = delsarte_vector({chosen.begin(), chosen.end()}, {v, d});
      Rational total = 0;
      for (const Rational& a : dist.counts) total += a;
      CHECK(total == dist.size);
      CHECK(dist.counts[0] == 1);
      for (const Rational& entry : product) CHECK(entry >= 0);
    }
  }
}

TEST_CASE("delsarte vector input validation") {
  CHECK_THROWS_AS(delsarte_vector({}, {8, 3}), sdb::DomainError);
  CHECK_THROWS_AS(delsarte_vector({0b11ull}, {8, 3}), sdb::DomainError);          // wrong size
  CHECK_THROWS_AS(delsarte_vector({0b111ull, 0b111ull}, {8, 3}), sdb::DomainError);  // duplicate
  CHECK_THROWS_AS(delsarte_vector({0b100000111ull}, {8, 3}), sdb::DomainError);   // out of range
}

TEST_CASE("bound_m piecewise branches and pinned values") {
  CHECK(bound_m(4, 5) == 0);   // v <= d-1
  CHECK(bound_m(9, 5) == 2);   // v = 2d-1
  CHECK(bound_m(7, 5) == 1);   // d <= v <= 2d-2
  CHECK(bound_m(0, 3) == 0);
  CHECK(bound_m(4, 2) == 3);   // J(4,2): 1 - 2/(-1)
  CHECK_THROWS_AS(bound_m(6, 1), sdb::DomainError);  // no negative entry at relation 0
  CHECK_THROWS_AS(bound_m(-1, 2), sdb::DomainError);
  CHECK_THROWS_AS(bound_m(4, 0), sdb::DomainError);
}

TEST_CASE("pairwise one-point-intersecting families respect bound_m") {
  std::mt19937_64 rng(7);
  for (const auto& [v, d] : std::vector<std::pair<std::int64_t, std::int64_t>>{{8, 3}, {10, 4}, {12, 5}, {11, 3}}) {
    const Rational cap = bound_m(v, d);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<std::uint64_t> family;
      for (int attempt = 0; attempt < 400; ++attempt) {
        const std::uint64_t cand = random_subset(v, d, rng);
        bool ok = true;
        for (std::uint64_t y : family)
          if (cand == y || std::popcount(cand & y) != 1) {
            ok = false;
            break;
          }
        if (ok) family.push_back(cand);
      }
      if (family.empty()) continue;
      CHECK(Rational(static_cast<std::int64_t>(family.size())) <= cap);
    }
  }
}

TEST_CASE("bound_m monotonicity in v (observed, not guaranteed)") {
  Rational prev = 0;
  for (std::int64_t v = 0; v <= 26; ++v) {
    const Rational m = bound_m(v, 5);
    const std::string note = "bound_m(" + std::to_string(v) + ",5) dipped below its predecessor";
    WARN_MESSAGE(m >= prev, note);
    prev = m;
  }
}

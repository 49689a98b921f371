#include "shadowbounds/bounds.hpp"

#include "shadowbounds/johnson.hpp"
#include "shadowbounds/refdata.hpp"

#include <algorithm>

namespace sdb::bounds {

const char* case_tag_label(CaseTag tag) {
  switch (tag) {
    case CaseTag::N2Mod4: return "2mod4";
    case CaseTag::PriorI: return "prior-i";
    case CaseTag::PriorII: return "prior-ii";
    case CaseTag::PriorIII: return "prior-iii";
    case CaseTag::ImprovedI: return "i";
    case CaseTag::ImprovedII: return "ii";
    case CaseTag::ImprovedIII: return "iii";
    case CaseTag::ImprovedIV: return "iv";
    case CaseTag::ImprovedV: return "v";
  }
  throw InternalError("case_tag_label: unknown tag");
}

ShadowParams shadow_params_0mod4(std::int64_t n, std::int64_t d) {
  if (n < 4) throw DomainError("shadow parameters: n must be a positive length");
  if (n % 4 != 0) throw DomainError("shadow parameters: requires n == 0 (mod 4)");
  if (d < 2 || d % 2 != 0) throw DomainError("shadow parameters: d must be a positive even weight");
  if ((n - 2 - d) % 8 != 0) throw DomainError("shadow parameters: requires d == n-2 (mod 8)");
  return ShadowParams{n, d, d / 2 + 1};
}

ShadowParams shadow_params_2mod4(std::int64_t n, std::int64_t s) {
  if (n < 2) throw DomainError("shadow parameters: n must be a positive length");
  if (n % 4 != 2) throw DomainError("shadow parameters: requires n == 2 (mod 4)");
  if (s < 3 || s % 2 == 0) throw DomainError("shadow parameters: s must be odd and at least 3");
  if ((n - 2 * s) % 8 != 0) throw DomainError("shadow parameters: requires d == n-2 (mod 8), i.e. 2s == n (mod 8)");
  return ShadowParams{n, 2 * (s - 1), s};
}

BoundStatement bound_n2mod4(std::int64_t n, std::int64_t s) {
  const ShadowParams p = shadow_params_2mod4(n, s);
  BigInt best;
  bool first = true;
  for (std::int64_t v = 0; v <= n / 2; ++v) {
    // Floor applies to the sum of the two exact caps, not to each term.
    BigInt value = floor_rat(johnson::bound_m(v, s) + johnson::bound_m(n - v, s));
    if (first || value > best) {
      best = value;
      first = false;
    }
  }
  BoundStatement st;
  st.n = p.n;
  st.d = p.d;
  st.s = p.s;
  st.bound = to_int64(best);
  st.bound_exact = Rational(best);
  st.case_tag = CaseTag::N2Mod4;
  return st;
}

std::optional<std::int64_t> odd_coset_cap(std::int64_t n, std::int64_t d) {
  const ShadowParams p = shadow_params_0mod4(n, d);
  if (n % (2 * p.s) == 0) return std::nullopt;
  const std::int64_t k = ceil_div(n - d + 2, 2 * p.s);
  return 2 * k - 1;
}

std::int64_t max_ab_closed(std::int64_t s, std::int64_t n) {
  if (s < 1) throw DomainError("max_ab_closed: s must be positive");
  if (n < 0) throw DomainError("max_ab_closed: n must be nonnegative");
  if (n >= s * s) throw DomainError("max_ab_closed: requires n < s^2");
  return 2 * s - to_int64(ceil_two_sqrt(BigInt(s) * s - n));
}

MaxAbResult max_ab_bruteforce(std::int64_t s, std::int64_t n) {
  if (s < 1) throw DomainError("max_ab_bruteforce: s must be positive");
  if (n < 0) throw DomainError("max_ab_bruteforce: n must be nonnegative");
  MaxAbResult result;
  result.value = -1;
  for (std::int64_t a = 0; a <= s; ++a) {
    for (std::int64_t b = a; b <= s; ++b) {
      if (s * (a + b) - a * b > n) continue;
      if (a + b > result.value) {
        result.value = a + b;
        result.pairs.clear();
      }
      if (a + b == result.value) result.pairs.emplace_back(a, b);
    }
  }
  return result;  // a = b = 0 is always feasible, so value >= 0
}

LBounds l_bounds(std::int64_t n, std::int64_t d) {
  const ShadowParams p = shadow_params_0mod4(n, d);
  LBounds lb;
  lb.l1 = Rational(2 * n, d + 2);
  lb.l2 = std::min(Rational(d + 2), Rational(2 * (2 * n - d - 2), d));
  lb.l1p = (n % (2 * p.s) == 0) ? lb.l1 : Rational(2 * ceil_div(n - d + 2, d + 2) - 1);
  if (4 * n < (d + 2) * (d + 2))
    lb.l2p = Rational(d + 2 - to_int64(ceil_sqrt(BigInt(d + 2) * (d + 2) - 4 * n)));
  else
    lb.l2p = std::min(Rational(d + 2), Rational(4 * ceil_div(n - d + 2, d + 2) - 2));
  return lb;
}

BoundStatement bound_prior(std::int64_t n, std::int64_t d) {
  const ShadowParams p = shadow_params_0mod4(n, d);
  BoundStatement st;
  st.n = p.n;
  st.d = p.d;
  st.s = p.s;
  if (2 * n > (d + 2) * (d + 2)) {
    st.case_tag = CaseTag::PriorI;
    st.bound_exact = Rational(2 * n, d + 2);
  } else if (4 * n < (d + 2) * (d + 2)) {
    st.case_tag = CaseTag::PriorIII;
    st.bound_exact = Rational(2 * (2 * n - d - 2), d);
  } else {
    st.case_tag = CaseTag::PriorII;
    st.bound_exact = Rational(d + 2);
    st.excluded.push_back(d + 1);
  }
  st.bound = to_int64(floor_rat(st.bound_exact));
  return st;
}

BoundStatement bound_improved(std::int64_t n, std::int64_t d) {
  const ShadowParams p = shadow_params_0mod4(n, d);
  const bool divisible = n % (2 * p.s) == 0;
  BoundStatement st;
  st.n = p.n;
  st.d = p.d;
  st.s = p.s;
  std::int64_t value = 0;
  if (2 * n > d * d + 6 * d) {
    st.case_tag = CaseTag::ImprovedI;
    value = divisible ? 2 * n / (d + 2) : 2 * ceil_div(n - d + 2, d + 2) - 1;
  } else if (2 * n > (d + 2) * (d + 2)) {
    st.case_tag = CaseTag::ImprovedII;
    value = divisible ? 2 * n / (d + 2) : d + 2;
  } else if (4 * n > d * d + 8 * d - 4) {
    st.case_tag = CaseTag::ImprovedIII;
    value = d + 2;
    st.excluded.push_back(d + 1);
  } else if (4 * n >= (d + 2) * (d + 2)) {
    st.case_tag = CaseTag::ImprovedIV;
    value = 4 * ceil_div(n - d + 2, d + 2) - 2;
  } else if (4 * n < (d + 2) * (d + 2)) {
    st.case_tag = CaseTag::ImprovedV;
    value = d + 2 - to_int64(ceil_sqrt(BigInt(d + 2) * (d + 2) - 4 * n));
  } else {
    throw InternalError("bound_improved: no region matched");
  }
  st.bound = value;
  st.bound_exact = Rational(value);
  return st;
}

std::vector<Table1Row> table1() {
  static constexpr struct {
    std::int64_t n, d, s;
  } kRows[] = {
      {42, 8, 5}, {62, 12, 7}, {70, 12, 7}, {82, 16, 9}, {90, 16, 9}, {98, 16, 9},
  };
  std::vector<Table1Row> rows;
  for (const auto& r : kRows) {
    const auto dn = gf2::known_dn(r.n);
    if (!dn) throw InternalError("table1: missing d(n) reference value");
    rows.push_back({r.n, *dn, r.d, r.s, bound_n2mod4(r.n, r.s)});
  }
  return rows;
}

std::vector<Table2Row> table2() {
  static constexpr struct {
    std::int64_t n, d;
  } kRows[] = {{72, 14}, {100, 18}, {108, 18}, {116, 18}, {128, 22}};
  std::vector<Table2Row> rows;
  for (const auto& r : kRows) {
    Table2Row row;
    row.n = r.n;
    row.dn = gf2::known_dn(r.n);
    row.d = r.d;
    row.s = r.d / 2 + 1;
    row.improved = bound_improved(r.n, r.d);
    row.prior = bound_prior(r.n, r.d);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace sdb::bounds

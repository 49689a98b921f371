#include "shadowbounds/families.hpp"

#include <algorithm>
#include <set>

namespace sdb::families {

BigInt AffineForm::eval(const std::map<std::string, BigInt>& point) const {
  BigInt acc = constant;
  for (const auto& [name, coeff] : coeffs) {
    auto it = point.find(name);
    if (it == point.end()) throw DomainError("evaluate: missing value for parameter " + name);
    acc += coeff * it->second;
  }
  return acc;
}

bool AffineForm::is_bare_param(std::string* name) const {
  if (constant != 0 || coeffs.size() != 1 || coeffs.begin()->second != 1) return false;
  if (name) *name = coeffs.begin()->first;
  return true;
}

std::string AffineForm::str() const {
  std::string out;
  if (constant != 0 || coeffs.empty()) out = constant.str();
  for (const auto& [name, coeff] : coeffs) {
    if (coeff == 0) continue;
    const BigInt mag = abs(coeff);
    std::string term = (mag == 1) ? name : mag.str() + "*" + name;
    if (out.empty())
      out = (coeff < 0 ? "-" : "") + term;
    else
      out += (coeff < 0 ? " - " : " + ") + term;
  }
  return out;
}

namespace {

AffineForm af(BigInt constant, std::initializer_list<std::pair<const char*, std::int64_t>> terms = {}) {
  AffineForm f;
  f.constant = std::move(constant);
  for (const auto& [name, coeff] : terms) f.coeffs[name] = coeff;
  return f;
}

EnumeratorFamily make_family(const std::string& name) {
  EnumeratorFamily f;
  f.name = name;
  if (name == "W42") {
    f.n = 42; f.d = 8; f.s = 5;
    f.params = {"beta"};
    f.code_leading = {{0, af(1)}, {8, af(84, {{"beta", 8}})}, {10, af(1449, {{"beta", -24}})}};
    f.shadow_leading = {{5, af(0, {{"beta", 1}})}, {9, af(896, {{"beta", -8}})}, {13, af(48384, {{"beta", 28}})}};
    f.prior = {{af(0, {{"beta", 1}})}, {af(42, {{"beta", -1}})}};
    f.prior_display = "0 <= beta <= 42";
  } else if (name == "W62") {
    f.n = 62; f.d = 12; f.s = 7;
    f.params = {"beta"};
    f.code_leading = {{0, af(1)}, {12, af(1860, {{"beta", 32}})}, {14, af(28055, {{"beta", -160}})}};
    f.shadow_leading = {{7, af(0, {{"beta", 1}})}, {11, af(1116, {{"beta", -12}})}, {15, af(171368, {{"beta", 66}})}};
    f.prior = {{af(0, {{"beta", 1}})}, {af(93, {{"beta", -1}})}};
    f.prior_display = "0 <= beta <= 93";
  } else if (name == "W72") {
    f.n = 72; f.d = 14; f.s = 8;
    f.params = {"alpha"};
    f.code_leading = {{0, af(1)}, {14, af(8640, {{"alpha", -64}})}, {16, af(124281, {{"alpha", 384}})}};
    f.shadow_leading = {{8, af(0, {{"alpha", 1}})}, {12, af(546, {{"alpha", -14}})}, {16, af(244584, {{"alpha", 91}})}};
    f.prior = {{af(0, {{"alpha", 1}})}, {af(39, {{"alpha", -1}})}};
    f.prior_display = "0 <= alpha <= 39";
  } else if (name == "W82") {
    f.n = 82; f.d = 16; f.s = 9;
    f.params = {"alpha"};
    f.code_leading = {{0, af(1)}, {16, af(39524, {{"alpha", 128}})}, {18, af(556985, {{"alpha", -896}})}};
    f.shadow_leading = {{9, af(0, {{"alpha", 1}})}, {13, af(1640, {{"alpha", -1}})}, {17, af(281424, {{"alpha", 120}})}};
    f.prior = {{af(0, {{"alpha", 1}})}, {af(621, {{"alpha", -1}})}};
    f.prior_display = "0 <= alpha <= 621";
  } else if (name == "W90") {
    f.n = 90; f.d = 16; f.s = 9;
    f.params = {"alpha", "beta"};
    f.code_leading = {{0, af(1)}, {16, af(9180, {{"beta", 8}})}, {18, af(224360, {{"alpha", -512}, {"beta", -24}})}};
    f.shadow_leading = {{9, af(0, {{"alpha", 1}})},
                        {13, af(0, {{"alpha", -18}, {"beta", 1}})},
                        {17, af(112320, {{"alpha", 153}, {"beta", -16}})}};
    // 0 <= alpha, 18*alpha <= beta, beta/18 <= 9348
    f.prior = {{af(0, {{"alpha", 1}})}, {af(0, {{"alpha", -18}, {"beta", 1}})}, {af(168264, {{"beta", -1}})}};
    f.prior_display = "0 <= alpha <= beta/18 <= 9348";
  } else if (name == "W100") {
    f.n = 100; f.d = 18; f.s = 10;
    f.params = {"alpha", "beta"};
    f.code_leading = {{0, af(1)}, {18, af(52250, {{"beta", 16}})}, {20, af(972180, {{"alpha", 1024}, {"beta", -64}})}};
    f.shadow_leading = {{10, af(0, {{"alpha", 1}})},
                        {14, af(0, {{"alpha", -20}, {"beta", -1}})},
                        {18, af(104500, {{"alpha", 190}, {"beta", 18}})}};
    // 0 <= alpha, 20*alpha <= -beta, -beta/20 <= 5225/32 (i.e. 8*beta + 26125 >= 0)
    f.prior = {{af(0, {{"alpha", 1}})}, {af(0, {{"alpha", -20}, {"beta", -1}})}, {af(26125, {{"beta", 8}})}};
    f.prior_display = "0 <= alpha <= -beta/20 <= 5225/32";
  } else {
    throw DomainError("unknown enumerator family: " + name);
  }
  return f;
}

BigInt coeff_of(const AffineForm& f, const std::string& name) {
  auto it = f.coeffs.find(name);
  return it == f.coeffs.end() ? BigInt(0) : it->second;
}

AffineForm scaled_sum(const AffineForm& a, const BigInt& ka, const AffineForm& b, const BigInt& kb) {
  AffineForm out;
  out.constant = ka * a.constant + kb * b.constant;
  for (const auto& [name, c] : a.coeffs) out.coeffs[name] += ka * c;
  for (const auto& [name, c] : b.coeffs) out.coeffs[name] += kb * c;
  for (auto it = out.coeffs.begin(); it != out.coeffs.end();)
    it = (it->second == 0) ? out.coeffs.erase(it) : std::next(it);
  return out;
}

struct Projection {
  std::optional<Rational> lo, hi;
  bool feasible = true;
};

// Fourier-Motzkin elimination down to the target parameter. The constraint
// sets here have at most two parameters and a handful of rows, so the exact
// rational sweep is plenty.
Projection project_interval(std::vector<AffineForm> forms, const std::vector<std::string>& params,
                            const std::string& target) {
  for (const std::string& q : params) {
    if (q == target) continue;
    std::vector<AffineForm> uppers, lowers, rest;
    for (AffineForm& f : forms) {
      const BigInt a = coeff_of(f, q);
      if (a > 0)
        lowers.push_back(std::move(f));
      else if (a < 0)
        uppers.push_back(std::move(f));
      else
        rest.push_back(std::move(f));
    }
    for (const AffineForm& up : uppers)
      for (const AffineForm& lo : lowers)
        rest.push_back(scaled_sum(lo, -coeff_of(up, q), up, coeff_of(lo, q)));
    forms = std::move(rest);
  }

  Projection out;
  for (const AffineForm& f : forms) {
    const BigInt a = coeff_of(f, target);
    if (a == 0) {
      if (f.constant < 0) out.feasible = false;
      continue;
    }
    const Rational endpoint = make_rational(-f.constant, a);  // constant + a*t >= 0
    if (a > 0) {
      if (!out.lo || endpoint > *out.lo) out.lo = endpoint;
    } else {
      if (!out.hi || endpoint < *out.hi) out.hi = endpoint;
    }
  }
  if (out.lo && out.hi && *out.lo > *out.hi) out.feasible = false;
  return out;
}

BigInt ceil_rat(const Rational& r) { return -floor_rat(-r); }

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {"W42", "W62", "W72", "W82", "W90", "W100"};
  return names;
}

EnumeratorFamily family(const std::string& name) { return make_family(name); }

ParameterRange refine_with(const EnumeratorFamily& fam, const bounds::BoundStatement& stmt) {
  auto lead_it = fam.shadow_leading.find(fam.s);
  if (lead_it == fam.shadow_leading.end())
    throw InternalError("refine: family lacks the weight-s shadow coefficient");
  const AffineForm& lead = lead_it->second;

  // bound - lead >= 0
  AffineForm cap = scaled_sum(af(stmt.bound), 1, lead, -1);

  ParameterRange out;
  out.applied = stmt;

  std::vector<AffineForm> projection_set;
  std::set<std::string> seen;
  auto add_constraint = [&](const AffineForm& form) {
    if (seen.insert(form.str()).second) out.all_constraints.push_back({form});
  };
  for (const Constraint& c : fam.prior) {
    projection_set.push_back(c.form);
    add_constraint(c.form);
  }
  projection_set.push_back(cap);
  add_constraint(cap);
  for (const auto& table : {fam.code_leading, fam.shadow_leading})
    for (const auto& [weight, form] : table)
      if (!form.coeffs.empty()) add_constraint(form);

  for (const Constraint& c : out.all_constraints)
    if (c.multi_param()) out.couplings.push_back(c);

  std::string bare;
  const bool lead_is_param = lead.is_bare_param(&bare);

  for (const std::string& p : fam.params) {
    const Projection proj = project_interval(projection_set, fam.params, p);
    ParamInterval interval;
    interval.lo = proj.lo;
    interval.hi = proj.hi;
    if (proj.lo) interval.lo_int = ceil_rat(*proj.lo);
    if (proj.hi) interval.hi_int = floor_rat(*proj.hi);
    if (lead_is_param && p == bare) interval.excluded = stmt.excluded;
    out.feasible = out.feasible && proj.feasible;
    out.intervals[p] = std::move(interval);
  }
  return out;
}

ParameterRange refine(const std::string& name) {
  const EnumeratorFamily fam = family(name);
  const bounds::BoundStatement stmt = (fam.n % 4 == 2) ? bounds::bound_n2mod4(fam.n, fam.s)
                                                       : bounds::bound_improved(fam.n, fam.d);
  return refine_with(fam, stmt);
}

Evaluation evaluate(const EnumeratorFamily& fam, const std::map<std::string, BigInt>& point) {
  Evaluation out;
  for (const auto& [weight, form] : fam.code_leading) {
    out.code_coeffs[weight] = form.eval(point);
    if (out.code_coeffs[weight] < 0) {
      out.nonnegative = false;
      out.violations.push_back("code coefficient at weight " + std::to_string(weight) + " is negative");
    }
  }
  for (const auto& [weight, form] : fam.shadow_leading) {
    out.shadow_coeffs[weight] = form.eval(point);
    if (out.shadow_coeffs[weight] < 0) {
      out.nonnegative = false;
      out.violations.push_back("shadow coefficient at weight " + std::to_string(weight) + " is negative");
    }
  }
  for (const Constraint& c : fam.prior)
    if (c.form.eval(point) < 0) {
      out.inside_prior = false;
      out.violations.push_back("outside prior constraint: " + c.str());
    }

  std::set<std::string> prior_strs;
  for (const Constraint& c : fam.prior) prior_strs.insert(c.str());

  const bounds::BoundStatement stmt = (fam.n % 4 == 2) ? bounds::bound_n2mod4(fam.n, fam.s)
                                                       : bounds::bound_improved(fam.n, fam.d);
  const ParameterRange refined = refine_with(fam, stmt);
  out.inside_refined = out.inside_prior;
  for (const Constraint& c : refined.all_constraints)
    if (c.form.eval(point) < 0) {
      out.inside_refined = false;
      if (!prior_strs.count(c.str()))
        out.violations.push_back("outside refined constraint: " + c.str());
    }
  std::string bare;
  if (fam.shadow_leading.at(fam.s).is_bare_param(&bare)) {
    const BigInt value = point.count(bare) ? point.at(bare) : BigInt(0);
    for (std::int64_t ex : stmt.excluded)
      if (value == ex) {
        out.inside_refined = false;
        out.violations.push_back("parameter " + bare + " hits excluded value " + std::to_string(ex));
      }
  }
  return out;
}

}  // namespace sdb::families

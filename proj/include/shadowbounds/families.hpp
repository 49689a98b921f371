#ifndef SHADOWBOUNDS_FAMILIES_HPP
#define SHADOWBOUNDS_FAMILIES_HPP

#include "shadowbounds/bounds.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sdb::families {

// Integer-coefficient affine expression in the family parameters.
struct AffineForm {
  BigInt constant;
  std::map<std::string, BigInt> coeffs;

  BigInt eval(const std::map<std::string, BigInt>& point) const;
  // True when the form is a single parameter with coefficient one.
  bool is_bare_param(std::string* name = nullptr) const;
  std::string str() const;  // e.g. "546 - 14*alpha"
};

// form >= 0
struct Constraint {
  AffineForm form;
  std::string str() const { return form.str() + " >= 0"; }
  bool multi_param() const { return form.coeffs.size() >= 2; }
};

// A parametrized weight-enumerator/shadow pair. Only the leading coefficients
// that are part of the published displays are stored; the tails are absent
// and `truncated` records that explicitly.
struct EnumeratorFamily {
  std::string name;
  std::int64_t n = 0;
  std::int64_t d = 0;
  std::int64_t s = 0;
  std::vector<std::string> params;
  std::map<std::int64_t, AffineForm> code_leading;    // weight -> coefficient of W
  std::map<std::int64_t, AffineForm> shadow_leading;  // weight -> coefficient of S
  bool truncated = true;
  std::vector<Constraint> prior;  // parameter constraints exactly as published
  std::string prior_display;      // the published chain, for reports
};

const std::vector<std::string>& family_names();
EnumeratorFamily family(const std::string& name);

struct ParamInterval {
  std::optional<Rational> lo, hi;        // exact endpoints
  std::optional<BigInt> lo_int, hi_int;  // integer truncation of the endpoints
  std::vector<std::int64_t> excluded;    // excluded integer points inside the interval
};

struct ParameterRange {
  std::map<std::string, ParamInterval> intervals;
  std::vector<Constraint> couplings;        // multi-parameter constraints, kept verbatim
  std::vector<Constraint> all_constraints;  // the full refined constraint set
  bounds::BoundStatement applied;           // the B_s bound used for the refinement
  bool feasible = true;
};

// Imposes 0 <= (weight-s shadow coefficient) <= bound on top of the prior
// constraints and nonnegativity of every stored coefficient. Per-parameter
// numeric intervals are projected from the prior set plus the new cap only;
// everything involving two parameters stays a symbolic coupling, so the
// refinement never invents a tighter printed range than the published one.
ParameterRange refine(const std::string& name);

// Same refinement with an injected statement (used to exercise propagation of
// excluded values).
ParameterRange refine_with(const EnumeratorFamily& fam, const bounds::BoundStatement& stmt);

struct Evaluation {
  std::map<std::int64_t, BigInt> code_coeffs;
  std::map<std::int64_t, BigInt> shadow_coeffs;
  bool nonnegative = true;     // every listed coefficient evaluates >= 0
  bool inside_prior = true;
  bool inside_refined = true;
  std::vector<std::string> violations;
};

// Instantiates the stored leading coefficients at the given parameter values.
// Out-of-range values are flagged in the report, never rejected.
Evaluation evaluate(const EnumeratorFamily& fam, const std::map<std::string, BigInt>& point);

}  // namespace sdb::families

#endif

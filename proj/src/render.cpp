#include "shadowbounds/render.hpp"

#include "shadowbounds/johnson.hpp"

using nlohmann::json;

namespace sdb::render {

json bound_statement(const bounds::BoundStatement& st) {
  return json{{"n", st.n},
              {"d", st.d},
              {"s", st.s},
              {"bound", st.bound},
              {"case", bounds::case_tag_label(st.case_tag)},
              {"excluded", st.excluded}};
}

json table1() {
  json rows = json::array();
  for (const auto& row : bounds::table1()) rows.push_back(bound_statement(row.stmt));
  return rows;
}

json table2() {
  json rows = json::array();
  for (const auto& row : bounds::table2()) {
    rows.push_back(bound_statement(row.improved));
    rows.push_back(bound_statement(row.prior));
  }
  return rows;
}

json qmatrix(std::int64_t v, std::int64_t d) {
  const johnson::EigenmatrixQ q = johnson::q_matrix({v, d});
  json entries = json::array();
  for (std::int64_t i = 0; i <= d; ++i) {
    json row = json::array();
    for (std::int64_t j = 0; j <= d; ++j) row.push_back(rat_str(q.entry(i, j)));
    entries.push_back(std::move(row));
  }
  return json{{"v", v}, {"d", d}, {"entries", entries}};
}

json bound_m(std::int64_t v, std::int64_t d) {
  return json{{"v", v}, {"d", d}, {"m", rat_str(johnson::bound_m(v, d))}};
}

json bound(std::int64_t n, std::int64_t d, bool compare_prior) {
  if (n % 4 == 2) {
    if (compare_prior)
      throw DomainError("the prior/improved comparison applies to n == 0 (mod 4) only");
    if (d < 2 || d % 2 != 0) throw DomainError("bound: d must be a positive even weight");
    return bound_statement(bounds::bound_n2mod4(n, d / 2 + 1));
  }
  const bounds::BoundStatement improved = bounds::bound_improved(n, d);
  if (!compare_prior) return bound_statement(improved);
  return json::array({bound_statement(improved), bound_statement(bounds::bound_prior(n, d))});
}

json max_ab(std::int64_t s, std::int64_t n, bool with_oracle) {
  json out{{"s", s}, {"n", n}};
  const bool closed_ok = n < s * s;
  if (!closed_ok && !with_oracle)
    throw DomainError("max_ab closed form requires n < s^2; rerun with the oracle");
  out["closed"] = closed_ok ? json(bounds::max_ab_closed(s, n)) : json(nullptr);
  if (with_oracle) {
    const bounds::MaxAbResult oracle = bounds::max_ab_bruteforce(s, n);
    json pairs = json::array();
    for (const auto& [a, b] : oracle.pairs) pairs.push_back(json::array({a, b}));
    out["oracle"] = json{{"value", oracle.value},
                         {"pairs", pairs},
                         {"unique", oracle.pairs.size() == 1},
                         {"agrees_with_closed", closed_ok ? json(oracle.value == bounds::max_ab_closed(s, n))
                                                          : json(nullptr)}};
  }
  return out;
}

namespace {

json interval_json(const families::ParamInterval& iv) {
  json out;
  out["min_exact"] = iv.lo ? json(rat_str(*iv.lo)) : json(nullptr);
  out["max_exact"] = iv.hi ? json(rat_str(*iv.hi)) : json(nullptr);
  out["min"] = iv.lo_int ? json(iv.lo_int->str()) : json(nullptr);
  out["max"] = iv.hi_int ? json(iv.hi_int->str()) : json(nullptr);
  out["excluded"] = iv.excluded;
  return out;
}

}  // namespace

json restrict_family(const std::string& name) {
  const families::EnumeratorFamily fam = families::family(name);
  const families::ParameterRange range = families::refine(name);

  json shadow_terms = json::object();
  for (const auto& [weight, form] : fam.shadow_leading) shadow_terms[std::to_string(weight)] = form.str();
  json code_terms = json::object();
  for (const auto& [weight, form] : fam.code_leading) code_terms[std::to_string(weight)] = form.str();

  json prior = json::array();
  for (const auto& c : fam.prior) prior.push_back(c.str());
  json couplings = json::array();
  for (const auto& c : range.couplings) couplings.push_back(c.str());
  json constraints = json::array();
  for (const auto& c : range.all_constraints) constraints.push_back(c.str());

  json intervals = json::object();
  for (const auto& [param, iv] : range.intervals) intervals[param] = interval_json(iv);

  return json{{"family", fam.name},
              {"n", fam.n},
              {"d", fam.d},
              {"s", fam.s},
              {"params", fam.params},
              {"code_leading", code_terms},
              {"shadow_leading", shadow_terms},
              {"truncated", fam.truncated},
              {"prior_display", fam.prior_display},
              {"prior", prior},
              {"bound", bound_statement(range.applied)},
              {"refined", json{{"intervals", intervals},
                               {"couplings", couplings},
                               {"constraints", constraints},
                               {"feasible", range.feasible}}}};
}

namespace {

const char* parity_label(gf2::Parity p) {
  switch (p) {
    case gf2::Parity::DoublyEven: return "doubly-even";
    case gf2::Parity::SinglyEven: return "singly-even";
    case gf2::Parity::NotSelfDual: return "not-self-dual";
  }
  throw InternalError("parity_label: unknown parity");
}

json weights_json(const std::vector<std::uint64_t>& hist) {
  json out = json::object();  // nonzero entries only
  for (std::size_t w = 0; w < hist.size(); ++w)
    if (hist[w]) out[std::to_string(w)] = hist[w];
  return out;
}

}  // namespace

json verify_code(const gf2::BinaryCode& code, std::int64_t max_n,
                 const std::vector<std::string>& warnings) {
  const gf2::Classification cls = gf2::classify(code, max_n);
  json out{{"n", code.length},
           {"k", code.dimension()},
           {"classification",
            json{{"self_dual", cls.self_dual},
                 {"parity", parity_label(cls.parity)},
                 {"min_weight", cls.min_weight},
                 {"extremal", cls.extremal}}},
           {"warnings", warnings}};
  const auto dn = gf2::known_dn(code.length);
  out["known_dn"] = dn ? json(*dn) : json(nullptr);

  if (!cls.self_dual || cls.parity != gf2::Parity::SinglyEven) {
    out["shadow"] = nullptr;
    return out;
  }

  const gf2::ShadowDecomposition dec = gf2::shadow_decompose(code, max_n);
  const gf2::StructureReport structure = gf2::check_shadow_structure(dec);
  const gf2::BoundCheck bound = gf2::verify_bound(dec);

  json checks = json::array();
  for (const auto& c : structure.checks)
    checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"checked", c.checked}, {"note", c.note}});

  json bound_json{{"applicable", bound.applicable}, {"count_at_s", bound.count_at_s}};
  if (bound.applicable) {
    bound_json["statement"] = bound_statement(*bound.statement);
    bound_json["within_bound"] = bound.within_bound;
    bound_json["pattern_ok"] = bound.pattern_ok;
    bound_json["pattern_note"] = bound.pattern_note;
  } else {
    bound_json["reason"] = bound.reason;
  }

  out["shadow"] = json{{"code_weights", weights_json(dec.code_weights)},
                       {"shadow_weights", weights_json(dec.shadow_weights)},
                       {"min_weight", dec.shadow_min_weight},
                       {"structure_checks",
                        json{{"all_pass", structure.all_pass},
                             {"exhaustive", structure.exhaustive},
                             {"checks", checks}}},
                       {"bound_check", bound_json}};
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace sdb::render

// Command-line front end; every computation goes through the shared-library
// C interface in shadowbounds.h.

#include "shadowbounds.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdint>
#include <fstream>
#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

using nlohmann::json;

namespace {

struct CString {
  char* ptr = nullptr;
  ~CString() { sdb_string_free(ptr); }
  CString() = default;
  CString(const CString&) = delete;
  CString& operator=(const CString&) = delete;
};

int exit_code(sdb_status st) {
  switch (st) {
    case SDB_OK: return 0;
    case SDB_ERR_DOMAIN: return 1;
    case SDB_ERR_PARSE: return 2;
    case SDB_ERR_INTERNAL: return 3;
  }
  return 3;
}

int report_error(sdb_status st, const CString& err) {
  std::cerr << "error: " << (err.ptr ? err.ptr : "unspecified failure") << "\n";
  return exit_code(st);
}

std::string dn_column(std::int64_t n) {
  std::int64_t dn = 0;
  return sdb_known_dn(n, &dn) == SDB_OK ? std::to_string(dn) : "-";
}

// "<= 14 (iv)" for improved cases, "<= 16, != 15" for prior ones, "<= 42"
// for the 2 (mod 4) table.
std::string bound_cell(const json& st, bool with_case) {
  std::string out = "<= " + st["bound"].dump();
  for (const auto& e : st["excluded"]) out += ", != " + e.dump();
  const std::string tag = st["case"].get<std::string>();
  if (with_case && tag != "2mod4" && tag.rfind("prior-", 0) != 0) out += " (" + tag + ")";
  return out;
}

void print_bound_rows_header(bool compare) {
  std::cout << std::setw(4) << "n" << std::setw(6) << "d(n)" << std::setw(4) << "d" << std::setw(4)
            << "s" << "  ";
  if (compare)
    std::cout << std::left << std::setw(14) << "improved" << "prior" << std::right;
  else
    std::cout << "bound";
  std::cout << "\n";
}

void print_bound_row(const json& st, const json* prior) {
  std::cout << std::setw(4) << st["n"].get<std::int64_t>() << std::setw(6)
            << dn_column(st["n"].get<std::int64_t>()) << std::setw(4) << st["d"].get<std::int64_t>()
            << std::setw(4) << st["s"].get<std::int64_t>() << "  ";
  if (prior)
    std::cout << std::left << std::setw(14) << bound_cell(st, true) << bound_cell(*prior, false)
              << std::right;
  else
    std::cout << bound_cell(st, true);
  std::cout << "\n";
}

void print_qmatrix(const json& j) {
  std::cout << "second eigenmatrix of J(" << j["v"].get<std::int64_t>() << ","
            << j["d"].get<std::int64_t>() << "), rows = relation index:\n";
  for (const auto& row : j["entries"]) {
    for (std::size_t i = 0; i < row.size(); ++i)
      std::cout << (i ? " " : "") << row[i].get<std::string>();
    std::cout << "\n";
  }
}

void print_max_ab(const json& j) {
  std::cout << "s = " << j["s"].get<std::int64_t>() << ", n = " << j["n"].get<std::int64_t>() << "\n";
  if (j["closed"].is_null())
    std::cout << "closed form: not applicable (n >= s^2)\n";
  else
    std::cout << "closed form: " << j["closed"].get<std::int64_t>() << "\n";
  if (j.contains("oracle")) {
    const json& o = j["oracle"];
    std::cout << "oracle: " << o["value"].get<std::int64_t>() << ", pairs";
    for (const auto& p : o["pairs"])
      std::cout << " {" << p[0].get<std::int64_t>() << "," << p[1].get<std::int64_t>() << "}";
    std::cout << (o["unique"].get<bool>() ? " (unique)" : "");
    if (!o["agrees_with_closed"].is_null())
      std::cout << (o["agrees_with_closed"].get<bool>() ? " (agrees with closed form)"
                                                        : " (DISAGREES with closed form)");
    std::cout << "\n";
  }
}

std::string interval_text(const std::string& param, const json& iv) {
  std::string out;
  out += iv["min"].is_null() ? "-inf" : iv["min"].get<std::string>();
  out += " <= " + param + " <= ";
  out += iv["max"].is_null() ? "inf" : iv["max"].get<std::string>();
  for (const auto& e : iv["excluded"]) out += ", != " + e.dump();
  return out;
}

void print_restrict(const json& j) {
  std::cout << "family " << j["family"].get<std::string>() << ": [n,d,s] = ["
            << j["n"].get<std::int64_t>() << "," << j["d"].get<std::int64_t>() << ","
            << j["s"].get<std::int64_t>() << "]\n";
  std::cout << "prior:   " << j["prior_display"].get<std::string>() << "\n";
  const json& b = j["bound"];
  std::cout << "bound:   B_" << b["s"].get<std::int64_t>() << " " << bound_cell(b, true) << "\n";
  for (const auto& [param, iv] : j["refined"]["intervals"].items())
    std::cout << "refined: " << interval_text(param, iv) << "\n";
  for (const auto& c : j["refined"]["couplings"])
    std::cout << "coupled: " << c.get<std::string>() << "\n";
  if (!j["refined"]["feasible"].get<bool>()) std::cout << "refined range is empty\n";
}

void print_weights(const char* label, const json& weights) {
  std::vector<std::pair<std::int64_t, std::string>> entries;
  for (const auto& [w, count] : weights.items()) entries.emplace_back(std::stoll(w), count.dump());
  std::sort(entries.begin(), entries.end());
  std::cout << label << ":";
  for (const auto& [w, count] : entries) std::cout << " " << w << ":" << count;
  std::cout << "\n";
}

void print_verify(const json& j) {
  const json& cls = j["classification"];
  std::cout << "[n,k] = [" << j["n"].get<std::int64_t>() << "," << j["k"].get<std::int64_t>() << "]  "
            << cls["parity"].get<std::string>() << ", min weight " << cls["min_weight"].get<std::int64_t>()
            << (cls["extremal"].get<bool>() ? ", extremal" : "") << "\n";
  if (!j["known_dn"].is_null())
    std::cout << "published d(n) for this length: " << j["known_dn"].get<std::int64_t>() << "\n";
  for (const auto& w : j["warnings"]) std::cout << "warning: " << w.get<std::string>() << "\n";
  if (j["shadow"].is_null()) {
    std::cout << "shadow analysis requires a singly even self-dual code; skipped\n";
    return;
  }
  const json& sh = j["shadow"];
  print_weights("code weights A", sh["code_weights"]);
  print_weights("shadow weights B", sh["shadow_weights"]);
  std::cout << "shadow minimum weight s = " << sh["min_weight"].get<std::int64_t>() << "\n";

  const json& checks = sh["structure_checks"];
  std::cout << "structure checks (" << (checks["exhaustive"].get<bool>() ? "exhaustive" : "sampled")
            << "): " << (checks["all_pass"].get<bool>() ? "all pass" : "FAILURES") << "\n";
  for (const auto& c : checks["checks"])
    std::cout << "  " << c["name"].get<std::string>() << ": " << (c["pass"].get<bool>() ? "pass" : "FAIL")
              << " (" << c["checked"].get<std::uint64_t>() << " checked)\n";

  const json& bc = sh["bound_check"];
  if (!bc["applicable"].get<bool>()) {
    std::cout << "bound check: not applicable: " << bc["reason"].get<std::string>() << "\n";
    return;
  }
  const json& st = bc["statement"];
  std::cout << "bound check: B_" << st["s"].get<std::int64_t>() << " = " << bc["count_at_s"].dump()
            << " against " << bound_cell(st, true) << ": "
            << (bc["within_bound"].get<bool>() ? "satisfied" : "VIOLATED") << "\n";
  std::cout << "support pattern: " << (bc["pattern_ok"].get<bool>() ? "ok" : "FAIL") << " ("
            << bc["pattern_note"].get<std::string>() << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact bounds on minimum-weight shadow vectors of singly even self-dual binary codes"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json_mode = false;
  app.add_flag("--json", json_mode, "emit machine-readable JSON instead of text");

  std::int64_t v = 0, d = 0, n = 0, s = 0;
  std::int64_t guard = 36;
  bool compare_prior = false, with_oracle = false;
  std::string family, path;

  CLI::App* cmd_qmatrix = app.add_subcommand("qmatrix", "second eigenmatrix of the Johnson graph J(v,d)");
  cmd_qmatrix->add_option("--v", v, "ground-set size")->required();
  cmd_qmatrix->add_option("--d", d, "subset size")->required();

  CLI::App* cmd_boundm = app.add_subcommand("boundm", "Delsarte cap on pairwise one-point-intersecting families");
  cmd_boundm->add_option("--v", v, "ground-set size")->required();
  cmd_boundm->add_option("--d", d, "subset size")->required();

  CLI::App* cmd_bound = app.add_subcommand("bound", "bound on the number of weight-d/2+1 shadow vectors");
  cmd_bound->add_option("--n", n, "code length")->required();
  cmd_bound->add_option("--d", d, "code minimum weight")->required();
  cmd_bound->add_flag("--compare-prior", compare_prior, "also print the three-case baseline bound");

  CLI::App* cmd_maxab = app.add_subcommand("maxab", "max a+b subject to s(a+b) - ab <= n, 0 <= a,b <= s");
  cmd_maxab->add_option("--s", s, "per-coset cap")->required();
  cmd_maxab->add_option("--n", n, "coordinate budget")->required();
  cmd_maxab->add_flag("--oracle", with_oracle, "also run the exhaustive search and list achieving pairs");

  CLI::App* cmd_table1 = app.add_subcommand("table1", "bounds for the n == 2 (mod 4) parameter sets");
  CLI::App* cmd_table2 = app.add_subcommand("table2", "improved vs prior bounds for the n == 0 (mod 4) parameter sets");

  CLI::App* cmd_verify = app.add_subcommand("verify-code", "classify a code file and check its shadow against the bounds");
  cmd_verify->add_option("--file", path, "generator matrix file")->required();
  cmd_verify->add_option("--max-n", guard, "codeword enumeration guard (default 36)");

  CLI::App* cmd_restrict = app.add_subcommand("restrict", "refine the parameter range of a weight-enumerator family");
  cmd_restrict->add_option("--family", family, "one of W42, W62, W72, W82, W90, W100")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help("", CLI::AppFormatMode::Normal);
    return 1;
  }

  CString out, err;
  sdb_status st = SDB_OK;

  if (*cmd_qmatrix) {
    st = sdb_qmatrix_json(v, d, &out.ptr, &err.ptr);
    if (st != SDB_OK) return report_error(st, err);
    if (json_mode)
      std::cout << out.ptr;
    else
      print_qmatrix(json::parse(out.ptr));
  } else if (*cmd_boundm) {
    st = sdb_bound_m_json(v, d, &out.ptr, &err.ptr);
    if (st != SDB_OK) return report_error(st, err);
    if (json_mode)
      std::cout << out.ptr;
    else {
      const json j = json::parse(out.ptr);
      std::cout << "M(" << j["v"].get<std::int64_t>() << "," << j["d"].get<std::int64_t>()
                << ") = " << j["m"].get<std::string>() << "\n";
    }
  } else if (*cmd_bound) {
    st = sdb_bound_json(n, d, compare_prior ? 1 : 0, &out.ptr, &err.ptr);
    if (st != SDB_OK) return report_error(st, err);
    if (json_mode)
      std::cout << out.ptr;
    else {
      const json j = json::parse(out.ptr);
      print_bound_rows_header(compare_prior);
      if (j.is_array())
        print_bound_row(j[0], &j[1]);
      else
        print_bound_row(j, nullptr);
    }
  } else if (*cmd_maxab) {
    st = sdb_max_ab_json(s, n, with_oracle ? 1 : 0, &out.ptr, &err.ptr);
    if (st != SDB_OK) return report_error(st, err);
    if (json_mode)
      std::cout << out.ptr;
    else
      print_max_ab(json::parse(out.ptr));
  } else if (*cmd_table1) {
    st = sdb_table1_json(&out.ptr, &err.ptr);
    if (st != SDB_OK) return report_error(st, err);
    if (json_mode)
      std::cout << out.ptr;
    else {
      const json j = json::parse(out.ptr);
      print_bound_rows_header(false);
      for (const auto& row : j) print_bound_row(row, nullptr);
    }
  } else if (*cmd_table2) {
    st = sdb_table2_json(&out.ptr, &err.ptr);
    if (st != SDB_OK) return report_error(st, err);
    if (json_mode)
      std::cout << out.ptr;
    else {
      const json j = json::parse(out.ptr);
      print_bound_rows_header(true);
      for (std::size_t i = 0; i + 1 < j.size(); i += 2) print_bound_row(j[i], &j[i + 1]);
    }
  } else if (*cmd_verify) {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "error: cannot open " << path << "\n";
      return 2;
    }
    std::ostringstream text;
    text << in.rdbuf();
    sdb_code* code = nullptr;
    CString warnings;
    st = sdb_code_parse(text.str().c_str(), &code, &warnings.ptr, &err.ptr);
    if (st != SDB_OK) return report_error(st, err);
    st = sdb_code_verify_json(code, guard, &out.ptr, &err.ptr);
    sdb_code_free(code);
    if (st != SDB_OK) return report_error(st, err);
    if (json_mode)
      std::cout << out.ptr;
    else
      print_verify(json::parse(out.ptr));
  } else if (*cmd_restrict) {
    st = sdb_restrict_json(family.c_str(), &out.ptr, &err.ptr);
    if (st != SDB_OK) return report_error(st, err);
    if (json_mode)
      std::cout << out.ptr;
    else
      print_restrict(json::parse(out.ptr));
  }
  return 0;
}

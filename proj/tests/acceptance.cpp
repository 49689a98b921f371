// Acceptance suite. Each criterion prints exactly one PASS/FAIL line; the
// exit status is nonzero when any criterion fails. Criteria 1-3 drive the CLI
// binary (argv[1]); the rest exercise the library directly.

#include "shadowbounds/bounds.hpp"
#include "shadowbounds/families.hpp"
#include "shadowbounds/gf2.hpp"
#include "shadowbounds/johnson.hpp"

#include "json.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;
using sdb::BigInt;
using sdb::Rational;

namespace {

std::string g_cli;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  RunResult result;
  FILE* pipe = popen((g_cli + " " + args + " 2>/dev/null").c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

bool g_all_pass = true;

void criterion(int number, const std::string& label, double limit_seconds,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds > limit_seconds) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over the time limit");
  }
  std::printf("%s  criterion %d: %s (%.2fs, limit %.0fs)%s%s\n", ok ? "PASS" : "FAIL", number,
              label.c_str(), seconds, limit_seconds, detail.empty() ? "" : " -- ", detail.c_str());
  g_all_pass = g_all_pass && ok;
}

std::uint64_t random_subset(std::int64_t v, std::int64_t d, std::mt19937_64& rng) {
  std::vector<int> idx(static_cast<std::size_t>(v));
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng);
  std::uint64_t mask = 0;
  for (std::int64_t i = 0; i < d; ++i) mask |= 1ull << idx[static_cast<std::size_t>(i)];
  return mask;
}

bool criterion1(std::string& detail) {
  const RunResult r = run_cli("table1 --json");
  if (r.exit_code != 0) {
    detail = "CLI exited with " + std::to_string(r.exit_code);
    return false;
  }
  const json rows = json::parse(r.out);
  const std::vector<std::int64_t> expected = {42, 48, 52, 74, 76, 78};
  if (rows.size() != expected.size()) {
    detail = "row count " + std::to_string(rows.size());
    return false;
  }
  for (std::size_t i = 0; i < expected.size(); ++i)
    if (rows[i]["bound"].get<std::int64_t>() != expected[i]) {
      detail = "row " + std::to_string(i) + " bound " + rows[i]["bound"].dump();
      return false;
    }
  return true;
}

bool criterion2(std::string& detail) {
  const RunResult r = run_cli("table2 --json");
  if (r.exit_code != 0) {
    detail = "CLI exited with " + std::to_string(r.exit_code);
    return false;
  }
  const json rows = json::parse(r.out);
  if (rows.size() != 10) {
    detail = "row count " + std::to_string(rows.size());
    return false;
  }
  const std::int64_t improved[] = {14, 18, 18, 18, 16};
  const char* tags[] = {"iv", "iv", "iv", "iv", "v"};
  const std::int64_t prior[] = {16, 20, 20, 20, 21};
  const std::vector<std::vector<std::int64_t>> prior_excluded = {{15}, {19}, {19}, {19}, {}};
  for (std::size_t i = 0; i < 5; ++i) {
    const json& imp = rows[2 * i];
    const json& pri = rows[2 * i + 1];
    if (imp["bound"] != improved[i] || imp["case"] != tags[i] || !imp["excluded"].empty()) {
      detail = "improved row " + std::to_string(i) + ": " + imp.dump();
      return false;
    }
    if (pri["bound"] != prior[i] || pri["excluded"] != json(prior_excluded[i])) {
      detail = "prior row " + std::to_string(i) + ": " + pri.dump();
      return false;
    }
  }
  return true;
}

bool criterion3(std::string& detail) {
  const struct {
    const char* family;
    const char* param;
    const char* lo;
    const char* hi;
  } cases[] = {{"W42", "beta", "0", "42"}, {"W62", "beta", "0", "48"},  {"W82", "alpha", "0", "74"},
               {"W90", "alpha", "0", "76"}, {"W72", "alpha", "0", "14"}, {"W100", "alpha", "0", "18"}};
  for (const auto& c : cases) {
    const RunResult r = run_cli(std::string("restrict --family ") + c.family + " --json");
    if (r.exit_code != 0) {
      detail = std::string(c.family) + ": CLI exited with " + std::to_string(r.exit_code);
      return false;
    }
    const json iv = json::parse(r.out)["refined"]["intervals"][c.param];
    if (iv["min"] != c.lo || iv["max"] != c.hi) {
      detail = std::string(c.family) + ": got [" + iv["min"].dump() + ", " + iv["max"].dump() + "]";
      return false;
    }
  }
  return true;
}

bool criterion4(std::string& detail) {
  using namespace sdb::bounds;
  for (std::int64_t s = 2; s <= 25; ++s)
    for (std::int64_t n = 0; n < s * s; ++n)
      if (max_ab_closed(s, n) != max_ab_bruteforce(s, n).value) {
        detail = "mismatch at s=" + std::to_string(s) + ", n=" + std::to_string(n);
        return false;
      }
  const MaxAbResult at120 = max_ab_bruteforce(12, 120);
  const MaxAbResult at128 = max_ab_bruteforce(12, 128);
  if (at120.pairs != std::vector<std::pair<std::int64_t, std::int64_t>>{{6, 8}, {7, 7}}) {
    detail = "achieving pairs at (12,120)";
    return false;
  }
  if (at128.pairs != std::vector<std::pair<std::int64_t, std::int64_t>>{{8, 8}}) {
    detail = "achieving pairs at (12,128)";
    return false;
  }
  return true;
}

bool criterion5(std::string& detail) {
  using namespace sdb::johnson;
  for (std::int64_t d = 1; d <= 9; ++d)
    for (std::int64_t v = 2 * d; v <= 30; ++v) {
      const EigenmatrixQ q = q_matrix({v, d});
      for (std::int64_t i = 0; i <= d; ++i)
        if (q.entry(i, 0) != 1) {
          detail = "column 0 at (v,d)=(" + std::to_string(v) + "," + std::to_string(d) + ")";
          return false;
        }
      for (std::int64_t j = 0; j <= d; ++j)
        if (q.entry(0, j) != Rational(sdb::binom(v, j) - sdb::binom(v, j - 1))) {
          detail = "row 0 at (v,d)=(" + std::to_string(v) + "," + std::to_string(d) + ")";
          return false;
        }
      for (std::int64_t j = 0; j <= d; ++j)
        for (std::int64_t jp = j; jp <= d; ++jp) {
          Rational acc = 0;
          for (std::int64_t i = 0; i <= d; ++i)
            acc += Rational(sdb::binom(d, i) * sdb::binom(v - d, i)) * q.entry(i, j) * q.entry(i, jp);
          const Rational expected = (j == jp) ? Rational(sdb::binom(v, d)) * q.entry(0, j) : Rational(0);
          if (acc != expected) {
            detail = "orthogonality at (v,d)=(" + std::to_string(v) + "," + std::to_string(d) + ")";
            return false;
          }
        }
    }
  return true;
}

bool criterion6(std::string& detail) {
  std::mt19937_64 rng(271828);
  int tested = 0;
  for (const auto& [v, d] : std::vector<std::pair<std::int64_t, std::int64_t>>{{8, 3}, {10, 4}, {12, 5}}) {
    for (int trial = 0; trial < 100; ++trial) {
      std::uniform_int_distribution<int> size_dist(1, 40);
      std::set<std::uint64_t> chosen;
      const int want = size_dist(rng);
      while (static_cast<int>(chosen.size()) < want) chosen.insert(random_subset(v, d, rng));
      const auto [dist, product] = sdb::johnson::delsarte_vector({chosen.begin(), chosen.end()}, {v, d});
      for (const Rational& entry : product)
        if (entry < 0) {
          detail = "negative entry at (v,d)=(" + std::to_string(v) + "," + std::to_string(d) + ")";
          return false;
        }
      ++tested;
    }
  }
  if (tested != 300) {
    detail = "ran " + std::to_string(tested) + " subsets";
    return false;
  }
  return true;
}

bool criterion7(std::string& detail) {
  using namespace sdb::bounds;
  for (std::int64_t d = 6; d <= 38; d += 4) {
    for (std::int64_t n = 2 * d; n <= 2 * (d + 2) * (d + 2); n += 4) {
      if ((n - 2 - d) % 8 != 0) continue;
      const LBounds lb = l_bounds(n, d);
      const BoundStatement imp = bound_improved(n, d);
      const BoundStatement pri = bound_prior(n, d);
      int fired = 0;
      if (2 * n > d * d + 6 * d) ++fired;
      if ((d + 2) * (d + 2) < 2 * n && 2 * n <= d * d + 6 * d) ++fired;
      if (d * d + 8 * d - 4 < 4 * n && 4 * n <= 2 * (d + 2) * (d + 2)) ++fired;
      if ((d + 2) * (d + 2) <= 4 * n && 4 * n <= d * d + 8 * d - 4) ++fired;
      if (4 * n < (d + 2) * (d + 2)) ++fired;
      const bool ok = lb.l1p <= lb.l1 && lb.l2p <= lb.l2 && imp.bound <= pri.bound &&
                      BigInt(imp.bound) == sdb::floor_rat(std::max(lb.l1p, lb.l2p)) && fired == 1;
      if (!ok) {
        detail = "failure at (n,d)=(" + std::to_string(n) + "," + std::to_string(d) + ")";
        return false;
      }
    }
  }
  return true;
}

bool criterion8(std::string& detail) {
  for (int k = 1; k <= 12; ++k) {
    std::ostringstream text;
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) text << (i == j ? "11" : "00");
      text << "\n";
    }
    const sdb::gf2::BinaryCode code = sdb::gf2::parse_generator_matrix(text.str()).code;
    const sdb::gf2::ShadowDecomposition dec = sdb::gf2::shadow_decompose(code);
    std::uint64_t total = 0;
    for (std::uint64_t b : dec.shadow_weights) total += b;
    const bool sizes_ok = dec.shadow_min_weight == k &&
                          dec.shadow_weights[static_cast<std::size_t>(k)] == (1ull << k) &&
                          total == (1ull << k) &&
                          dec.min_shadow_c1.size() == (1ull << (k - 1)) &&
                          dec.min_shadow_c3.size() == (1ull << (k - 1));
    if (!sizes_ok) {
      detail = "shadow shape at k=" + std::to_string(k);
      return false;
    }
    const sdb::gf2::StructureReport report = sdb::gf2::check_shadow_structure(dec);
    if (!report.all_pass) {
      detail = "structure checks at k=" + std::to_string(k);
      return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-cli>\n";
    return 2;
  }
  g_cli = argv[1];

  criterion(1, "table1 bounds are exactly [42, 48, 52, 74, 76, 78]", 60.0, criterion1);
  criterion(2, "table2 improved [14, 18, 18, 18, 16] (iv,iv,iv,iv,v) vs prior [16, 20, 20, 20, 21]", 1.0,
            criterion2);
  criterion(3, "restrict reproduces the six published parameter ranges", 60.0, criterion3);
  criterion(4, "closed form equals the oracle for 2 <= s <= 25, 0 <= n < s^2, with pinned pairs", 5.0,
            criterion4);
  criterion(5, "eigenmatrix identities hold exactly for 1 <= d <= 9, 2d <= v <= 30", 30.0, criterion5);
  criterion(6, "aQ is nonnegative for 300 pseudo-random vertex sets", 60.0, criterion6);
  criterion(7, "refined caps dominate, improved <= prior, and exactly one region fires", 5.0, criterion7);
  criterion(8, "repetition towers i2^k (k <= 12): 2^k shadow vectors of weight k, all checks pass", 30.0,
            criterion8);
  std::printf(
      "SKIP  criterion 9: existence of codes attaining the bounds is out of scope; "
      "length-62+ verification runs only when an external generator matrix fixture is supplied\n");

  return g_all_pass ? 0 : 1;
}

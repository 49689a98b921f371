#include "shadowbounds/gf2.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>

namespace sdb::gf2 {

bool BitVec::get(std::int64_t i) const {
  return (words_[static_cast<std::size_t>(i / 64)] >> (i % 64)) & 1;
}

void BitVec::set(std::int64_t i, bool value) {
  const std::uint64_t mask = 1ull << (i % 64);
  if (value)
    words_[static_cast<std::size_t>(i / 64)] |= mask;
  else
    words_[static_cast<std::size_t>(i / 64)] &= ~mask;
}

BitVec& BitVec::operator^=(const BitVec& other) {
  if (n_ != other.n_) throw InternalError("BitVec: length mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

std::int64_t BitVec::weight() const {
  std::int64_t total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

std::int64_t BitVec::and_weight(const BitVec& other) const {
  if (n_ != other.n_) throw InternalError("BitVec: length mismatch");
  std::int64_t total = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) total += std::popcount(words_[w] & other.words_[w]);
  return total;
}

bool BitVec::any() const {
  for (std::uint64_t w : words_)
    if (w) return true;
  return false;
}

bool BitVec::lex_less(const BitVec& other) const {
  if (n_ != other.n_) throw InternalError("BitVec: length mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const std::uint64_t diff = words_[w] ^ other.words_[w];
    if (diff) {
      const int bit = std::countr_zero(diff);  // first differing position
      return ((words_[w] >> bit) & 1) == 0;
    }
  }
  return false;
}

std::string BitVec::str() const {
  std::string out(static_cast<std::size_t>(n_), '0');
  for (std::int64_t i = 0; i < n_; ++i)
    if (get(i)) out[static_cast<std::size_t>(i)] = '1';
  return out;
}

namespace {

// Row echelon basis with pivot bookkeeping; used for rank reduction and
// membership tests.
class Echelon {
 public:
  explicit Echelon(std::int64_t n) : n_(n) {}

  // Returns false (and leaves the basis unchanged) if v is already in the span.
  bool insert(BitVec v) {
    reduce(v);
    if (!v.any()) return false;
    const std::int64_t pivot = leading(v);
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    // keep rows sorted by pivot so reduce() stays a single sweep
    for (std::size_t i = rows_.size() - 1; i > 0 && pivots_[i] < pivots_[i - 1]; --i) {
      std::swap(rows_[i], rows_[i - 1]);
      std::swap(pivots_[i], pivots_[i - 1]);
    }
    return true;
  }

  bool contains(BitVec v) const {
    reduce(v);
    return !v.any();
  }

  std::int64_t rank() const { return static_cast<std::int64_t>(rows_.size()); }
  const std::vector<BitVec>& rows() const { return rows_; }

 private:
  static std::int64_t leading(const BitVec& v) {
    for (std::int64_t i = 0; i < v.size(); ++i)
      if (v.get(i)) return i;
    return v.size();
  }

  void reduce(BitVec& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (v.get(pivots_[i])) v ^= rows_[i];
  }

  std::int64_t n_;
  std::vector<BitVec> rows_;
  std::vector<std::int64_t> pivots_;
};

Echelon echelon_of(const std::vector<BitVec>& rows, std::int64_t n) {
  Echelon e(n);
  for (const BitVec& r : rows) e.insert(r);
  return e;
}

// Visit rep + every vector of span(basis), in Gray-code order.
template <class Fn>
void enumerate_coset(const BitVec& rep, const std::vector<BitVec>& basis, Fn&& fn) {
  BitVec current = rep;
  fn(current);
  const std::uint64_t total = 1ull << basis.size();
  for (std::uint64_t step = 1; step < total; ++step) {
    current ^= basis[static_cast<std::size_t>(std::countr_zero(step))];
    fn(current);
  }
}

}  // namespace

ParseResult parse_generator_matrix(const std::string& text) {
  std::vector<std::string> rows;
  std::string row;
  std::istringstream in(text);
  std::string line;
  std::int64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    row.clear();
    for (char c : line) {
      if (c == '0' || c == '1')
        row.push_back(c);
      else if (!std::isspace(static_cast<unsigned char>(c)))
        throw ParseError("generator matrix: unexpected character '" + std::string(1, c) + "' on line " +
                         std::to_string(lineno));
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError("generator matrix: row on line " + std::to_string(lineno) + " has length " +
                       std::to_string(row.size()) + ", expected " + std::to_string(rows.front().size()));
    rows.push_back(row);
  }
  if (rows.empty()) throw ParseError("generator matrix: empty input");

  const std::int64_t n = static_cast<std::int64_t>(rows.front().size());
  ParseResult result;
  result.code.length = n;
  Echelon ech(n);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    BitVec v(n);
    for (std::int64_t i = 0; i < n; ++i)
      if (rows[r][static_cast<std::size_t>(i)] == '1') v.set(i, true);
    if (ech.insert(v))
      result.code.generators.push_back(std::move(v));
    else
      result.warnings.push_back("row " + std::to_string(r + 1) + " depends on earlier rows; dropped");
  }
  return result;
}

BinaryCode dual(const BinaryCode& code) {
  const std::int64_t n = code.length;
  // Reduced row echelon form, then one null-space vector per free column.
  std::vector<BitVec> rows = code.generators;
  std::vector<std::int64_t> pivot_of_row;
  std::int64_t rank = 0;
  for (std::int64_t col = 0; col < n && rank < static_cast<std::int64_t>(rows.size()); ++col) {
    std::int64_t sel = -1;
    for (std::int64_t r = rank; r < static_cast<std::int64_t>(rows.size()); ++r)
      if (rows[static_cast<std::size_t>(r)].get(col)) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(rows[static_cast<std::size_t>(sel)], rows[static_cast<std::size_t>(rank)]);
    for (std::int64_t r = 0; r < static_cast<std::int64_t>(rows.size()); ++r)
      if (r != rank && rows[static_cast<std::size_t>(r)].get(col))
        rows[static_cast<std::size_t>(r)] ^= rows[static_cast<std::size_t>(rank)];
    pivot_of_row.push_back(col);
    ++rank;
  }

  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (std::int64_t c : pivot_of_row) is_pivot[static_cast<std::size_t>(c)] = true;

  BinaryCode result;
  result.length = n;
  for (std::int64_t free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    BitVec v(n);
    v.set(free, true);
    for (std::int64_t r = 0; r < rank; ++r)
      if (rows[static_cast<std::size_t>(r)].get(free)) v.set(pivot_of_row[static_cast<std::size_t>(r)], true);
    result.generators.push_back(std::move(v));
  }
  return result;
}

bool same_code(const BinaryCode& a, const BinaryCode& b) {
  if (a.length != b.length || a.dimension() != b.dimension()) return false;
  Echelon ea = echelon_of(a.generators, a.length);
  for (const BitVec& g : b.generators)
    if (!ea.contains(g)) return false;
  return true;
}

std::int64_t rains_bound(std::int64_t n, bool singly_even) {
  if (n % 24 == 22) return 4 * (n / 24) + 6;
  if (n % 24 == 0 && singly_even) return 4 * (n / 24) + 2;
  return 4 * (n / 24) + 4;
}

namespace {

void check_guard(const BinaryCode& code, std::int64_t max_n) {
  if (code.length > max_n)
    throw DomainError("codeword enumeration guard exceeded: n = " + std::to_string(code.length) +
                      " > " + std::to_string(max_n) + " (raise the guard to override)");
}

}  // namespace

Classification classify(const BinaryCode& code, std::int64_t max_n) {
  check_guard(code, max_n);
  const std::int64_t n = code.length;
  const std::int64_t k = code.dimension();

  bool orthogonal = true;
  for (std::int64_t i = 0; i < k && orthogonal; ++i)
    for (std::int64_t j = i; j < k && orthogonal; ++j)
      if (code.generators[static_cast<std::size_t>(i)].dot(code.generators[static_cast<std::size_t>(j)]))
        orthogonal = false;

  Classification cls;
  cls.self_dual = (2 * k == n) && orthogonal;

  std::int64_t min_weight = 0;
  bool all_mod4 = true;
  enumerate_coset(BitVec(n), code.generators, [&](const BitVec& c) {
    const std::int64_t w = c.weight();
    if (w == 0) return;
    if (min_weight == 0 || w < min_weight) min_weight = w;
    if (w % 4 != 0) all_mod4 = false;
  });
  cls.min_weight = min_weight;

  if (!cls.self_dual) {
    cls.parity = Parity::NotSelfDual;
    cls.extremal = false;
    return cls;
  }
  cls.parity = all_mod4 ? Parity::DoublyEven : Parity::SinglyEven;
  cls.extremal = min_weight == rains_bound(n, cls.parity == Parity::SinglyEven);
  return cls;
}

ShadowDecomposition shadow_decompose(const BinaryCode& code, std::int64_t max_n) {
  const Classification cls = classify(code, max_n);
  if (!cls.self_dual) throw DomainError("shadow_decompose: code is not self-dual");
  if (cls.parity != Parity::SinglyEven) throw DomainError("shadow_decompose: code is not singly even");

  const std::int64_t n = code.length;
  const std::int64_t k = code.dimension();

  // wt mod 4 is a homomorphism C -> {0, 2} on a self-orthogonal code; C0 is
  // its kernel. Pick one generator of parity 2 and absorb it from the rest.
  std::vector<BitVec> gens = code.generators;
  std::int64_t odd_index = -1;
  for (std::int64_t i = 0; i < k; ++i)
    if (gens[static_cast<std::size_t>(i)].weight() % 4 == 2) {
      odd_index = i;
      break;
    }
  if (odd_index < 0) throw InternalError("shadow_decompose: singly even code without a parity-2 generator");

  ShadowDecomposition dec;
  dec.n = n;
  dec.rep2 = gens[static_cast<std::size_t>(odd_index)];
  for (std::int64_t i = 0; i < k; ++i) {
    if (i == odd_index) continue;
    BitVec g = gens[static_cast<std::size_t>(i)];
    if (g.weight() % 4 == 2) g ^= dec.rep2;
    dec.c0_basis.push_back(std::move(g));
  }

  // C0^perp has dimension n/2 + 1; any basis vector outside C completes the
  // two shadow cosets.
  BinaryCode c0;
  c0.length = n;
  c0.generators = dec.c0_basis;
  const BinaryCode c0_dual = dual(c0);
  const Echelon code_span = echelon_of(code.generators, n);
  BitVec u;
  bool found = false;
  for (const BitVec& cand : c0_dual.generators)
    if (!code_span.contains(cand)) {
      u = cand;
      found = true;
      break;
    }
  if (!found) throw InternalError("shadow_decompose: dual of C0 does not exceed C");

  dec.code_weights.assign(static_cast<std::size_t>(n + 1), 0);
  dec.shadow_weights.assign(static_cast<std::size_t>(n + 1), 0);

  enumerate_coset(BitVec(n), dec.c0_basis, [&](const BitVec& c) { ++dec.code_weights[static_cast<std::size_t>(c.weight())]; });
  enumerate_coset(dec.rep2, dec.c0_basis, [&](const BitVec& c) { ++dec.code_weights[static_cast<std::size_t>(c.weight())]; });

  const BitVec rep_a = u;
  const BitVec rep_b = u ^ dec.rep2;
  bool have_min = false;
  BitVec lex_min;
  bool lex_min_in_a = true;
  const std::int64_t target = ((n / 2) % 4 + 4) % 4;
  bool congruent = true;
  for (int which = 0; which < 2; ++which) {
    enumerate_coset(which == 0 ? rep_a : rep_b, dec.c0_basis, [&](const BitVec& x) {
      const std::int64_t w = x.weight();
      ++dec.shadow_weights[static_cast<std::size_t>(w)];
      if (w % 4 != target) congruent = false;
      if (!have_min || x.lex_less(lex_min)) {
        lex_min = x;
        lex_min_in_a = which == 0;
        have_min = true;
      }
    });
  }
  dec.rep1 = lex_min_in_a ? rep_a : rep_b;
  dec.rep3 = lex_min_in_a ? rep_b : rep_a;

  std::int64_t s = 0;
  while (s <= n && dec.shadow_weights[static_cast<std::size_t>(s)] == 0) ++s;
  if (s > n) throw InternalError("shadow_decompose: empty shadow");
  dec.shadow_min_weight = s;
  dec.code_min_weight = cls.min_weight;

  enumerate_coset(dec.rep1, dec.c0_basis, [&](const BitVec& x) {
    if (x.weight() == s) dec.min_shadow_c1.push_back(x);
  });
  enumerate_coset(dec.rep3, dec.c0_basis, [&](const BitVec& x) {
    if (x.weight() == s) dec.min_shadow_c3.push_back(x);
  });

  // Invariants: |C0| = |C1| = |C2| = |C3| = 2^(n/2 - 1), both weight sums are
  // 2^(n/2), and every shadow weight is congruent to n/2 mod 4.
  const std::uint64_t half = 1ull << (k - 1);
  std::uint64_t code_total = 0, shadow_total = 0;
  for (std::uint64_t c : dec.code_weights) code_total += c;
  for (std::uint64_t c : dec.shadow_weights) shadow_total += c;
  if (code_total != 2 * half || shadow_total != 2 * half)
    throw InternalError("shadow_decompose: weight distribution sums are off");
  if (!congruent) throw InternalError("shadow_decompose: shadow weight not congruent to n/2 mod 4");
  if (dec.code_weights[0] != 1) throw InternalError("shadow_decompose: zero vector miscounted");
  if (dec.min_shadow_c1.size() + dec.min_shadow_c3.size() !=
      dec.shadow_weights[static_cast<std::size_t>(s)])
    throw InternalError("shadow_decompose: minimum-weight shadow vectors miscounted");
  return dec;
}

namespace {

struct PairStats {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
};

// Runs fn over pairs from two cosets, exhaustively when both are small enough
// and over a deterministic sample otherwise. Returns whether it was exhaustive.
template <class Fn>
bool for_pairs(const BitVec& rep_x, const BitVec& rep_y, const std::vector<BitVec>& basis, bool same_coset,
               PairStats& stats, Fn&& fn) {
  const std::size_t dim = basis.size();
  constexpr std::size_t kExhaustiveDim = 8;  // 256 x 256 pairs at most
  auto member = [&](std::uint64_t mask, const BitVec& rep) {
    BitVec v = rep;
    for (std::size_t b = 0; b < dim; ++b)
      if ((mask >> b) & 1) v ^= basis[b];
    return v;
  };
  if (dim <= kExhaustiveDim) {
    const std::uint64_t total = 1ull << dim;
    for (std::uint64_t i = 0; i < total; ++i) {
      const BitVec x = member(i, rep_x);
      for (std::uint64_t j = same_coset ? i + 1 : 0; j < total; ++j) {
        ++stats.checked;
        if (!fn(x, member(j, rep_y))) ++stats.failures;
      }
    }
    return true;
  }
  std::mt19937_64 rng(0x5d5ce11u);
  constexpr int kSamples = 4096;
  for (int t = 0; t < kSamples; ++t) {
    const std::uint64_t i = rng() & ((1ull << dim) - 1);
    std::uint64_t j = rng() & ((1ull << dim) - 1);
    if (same_coset && i == j) j ^= 1;
    ++stats.checked;
    if (!fn(member(i, rep_x), member(j, rep_y))) ++stats.failures;
  }
  return false;
}

}  // namespace

StructureReport check_shadow_structure(const ShadowDecomposition& dec) {
  StructureReport report;
  const Echelon c0 = echelon_of(dec.c0_basis, dec.n);
  const bool n_mod4_zero = dec.n % 4 == 0;
  const bool expect_within = !n_mod4_zero;   // x1 . y1
  const bool expect_across = n_mod4_zero;    // x1 . x3

  auto add = [&report](std::string name, const PairStats& stats, std::string note = "") {
    StructureCheck check;
    check.name = std::move(name);
    check.pass = stats.failures == 0;
    check.checked = stats.checked;
    check.note = std::move(note);
    report.all_pass = report.all_pass && check.pass;
    report.checks.push_back(std::move(check));
  };

  {
    PairStats st;
    report.exhaustive =
        for_pairs(dec.rep1, dec.rep1, dec.c0_basis, true, st,
                  [&](const BitVec& x, const BitVec& y) { return c0.contains(x ^ y); }) &&
        report.exhaustive;
    add("c1_plus_c1_in_c0", st);
  }
  {
    PairStats st;
    report.exhaustive =
        for_pairs(dec.rep3, dec.rep3, dec.c0_basis, true, st,
                  [&](const BitVec& x, const BitVec& y) { return c0.contains(x ^ y); }) &&
        report.exhaustive;
    add("c3_plus_c3_in_c0", st);
  }
  {
    PairStats st;
    report.exhaustive =
        for_pairs(dec.rep1, dec.rep3, dec.c0_basis, false, st,
                  [&](const BitVec& x, const BitVec& y) { return c0.contains(x ^ y ^ dec.rep2); }) &&
        report.exhaustive;
    add("c1_plus_c3_in_c2", st);
  }
  {
    // Weight congruence over the whole shadow; cheap enough to redo in full.
    PairStats st;
    const std::int64_t target = ((dec.n / 2) % 4 + 4) % 4;
    for (std::int64_t w = 0; w <= dec.n; ++w) {
      const std::uint64_t count = dec.shadow_weights[static_cast<std::size_t>(w)];
      if (count == 0) continue;
      st.checked += count;
      if (w % 4 != target) st.failures += count;
    }
    add("shadow_weight_mod4", st, "all shadow weights == n/2 (mod 4)");
  }
  {
    PairStats st;
    report.exhaustive =
        for_pairs(dec.rep1, dec.rep1, dec.c0_basis, true, st,
                  [&](const BitVec& x, const BitVec& y) { return x.dot(y) == expect_within; }) &&
        report.exhaustive;
    add("inner_product_within_shadow_coset", st,
        std::string("expected ") + (expect_within ? "1" : "0"));
  }
  {
    PairStats st;
    report.exhaustive =
        for_pairs(dec.rep1, dec.rep3, dec.c0_basis, false, st,
                  [&](const BitVec& x, const BitVec& y) { return x.dot(y) == expect_across; }) &&
        report.exhaustive;
    add("inner_product_across_shadow_cosets", st,
        std::string("expected ") + (expect_across ? "1" : "0"));
  }
  return report;
}

BoundCheck verify_bound(const ShadowDecomposition& dec) {
  BoundCheck out;
  const std::int64_t n = dec.n;
  const std::int64_t d = dec.code_min_weight;
  const std::int64_t s = dec.shadow_min_weight;
  out.count_at_s = dec.shadow_weights[static_cast<std::size_t>(s)];

  if (d % 2 != 0 || s != d / 2 + 1) {
    out.reason = "shadow minimum weight " + std::to_string(s) + " differs from d/2 + 1 = " +
                 std::to_string(d / 2 + 1) + "; no bound applies";
    return out;
  }
  out.applicable = true;
  const bounds::BoundStatement st =
      (n % 4 == 2) ? bounds::bound_n2mod4(n, s) : bounds::bound_improved(n, d);
  out.statement = st;
  const std::int64_t count = static_cast<std::int64_t>(out.count_at_s);
  out.within_bound = count <= st.bound &&
                     std::find(st.excluded.begin(), st.excluded.end(), count) == st.excluded.end();

  // Support pattern of the weight-s shadow vectors: for n == 2 (mod 4)
  // distinct vectors meet in one point inside a coset and are disjoint across;
  // for n == 0 (mod 4) it is the other way around.
  const std::int64_t want_within = (n % 4 == 2) ? 1 : 0;
  const std::int64_t want_across = (n % 4 == 2) ? 0 : 1;
  std::uint64_t checked = 0, failures = 0;
  auto check_within = [&](const std::vector<BitVec>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        ++checked;
        if (vs[i].and_weight(vs[j]) != want_within) ++failures;
      }
  };
  check_within(dec.min_shadow_c1);
  check_within(dec.min_shadow_c3);
  for (const BitVec& x : dec.min_shadow_c1)
    for (const BitVec& y : dec.min_shadow_c3) {
      ++checked;
      if (x.and_weight(y) != want_across) ++failures;
    }
  out.pattern_ok = failures == 0;
  out.pattern_note = "within |x∩y| = " + std::to_string(want_within) + ", across = " +
                     std::to_string(want_across) + "; " + std::to_string(checked) + " pairs, " +
                     std::to_string(failures) + " failures";
  return out;
}

std::optional<std::int64_t> known_dn(std::int64_t n) {
  switch (n) {
    case 42: return 8;
    case 62: return 12;
    case 70: return 14;
    case 72: return 14;
    case 82: return 16;
    case 90: return 16;
    case 98: return 18;
    case 100: return 18;
    default: return std::nullopt;
  }
}

}  // namespace sdb::gf2

#ifndef SHADOWBOUNDS_GF2_HPP
#define SHADOWBOUNDS_GF2_HPP

#include "shadowbounds/bounds.hpp"
#include "shadowbounds/refdata.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sdb::gf2 {

// Bit vector over GF(2), packed 64 bits per word.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::int64_t n) : n_(n), words_(static_cast<std::size_t>((n + 63) / 64), 0) {}

  std::int64_t size() const { return n_; }
  bool get(std::int64_t i) const;
  void set(std::int64_t i, bool value);
  BitVec& operator^=(const BitVec& other);
  friend BitVec operator^(BitVec a, const BitVec& b) {
    a ^= b;
    return a;
  }
  std::int64_t weight() const;
  // |supp(x) ∩ supp(y)|
  std::int64_t and_weight(const BitVec& other) const;
  // Standard inner product: parity of the support intersection.
  bool dot(const BitVec& other) const { return and_weight(other) % 2 != 0; }
  bool any() const;
  bool operator==(const BitVec& other) const = default;
  // Order as written left to right: '0...' sorts before '1...'.
  bool lex_less(const BitVec& other) const;
  std::string str() const;

 private:
  std::int64_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BinaryCode {
  std::int64_t length = 0;
  std::vector<BitVec> generators;  // linearly independent
  std::int64_t dimension() const { return static_cast<std::int64_t>(generators.size()); }
};

struct ParseResult {
  BinaryCode code;
  std::vector<std::string> warnings;
};

// Rows of '0'/'1' characters, one generator per line; whitespace inside a row
// is ignored and blank lines are skipped. Dependent rows are dropped with a
// warning. Ragged rows, foreign characters or empty input raise ParseError.
ParseResult parse_generator_matrix(const std::string& text);

// Basis of the null space of the generator matrix.
BinaryCode dual(const BinaryCode& code);

// Row-space equality.
bool same_code(const BinaryCode& a, const BinaryCode& b);

enum class Parity { DoublyEven, SinglyEven, NotSelfDual };

struct Classification {
  bool self_dual = false;
  Parity parity = Parity::NotSelfDual;
  std::int64_t min_weight = 0;  // 0 when the code has no nonzero codeword
  bool extremal = false;
};

// Codeword enumeration is O(2^(n/2)); lengths above the guard are refused.
inline constexpr std::int64_t kDefaultEnumGuard = 36;

// Largest minimum weight a self-dual code of length n can have; lower cap for
// singly even codes when 24 | n.
std::int64_t rains_bound(std::int64_t n, bool singly_even);

Classification classify(const BinaryCode& code, std::int64_t max_n = kDefaultEnumGuard);

// The four cosets of the doubly even subcode C0 inside its dual:
// C = C0 ∪ C2 and the shadow S = C1 ∪ C3. C1 is the shadow coset holding the
// lexicographically smallest shadow vector.
struct ShadowDecomposition {
  std::int64_t n = 0;
  std::vector<BitVec> c0_basis;
  BitVec rep1, rep2, rep3;                      // coset representatives over C0
  std::vector<std::uint64_t> code_weights;      // A_i, i = 0..n
  std::vector<std::uint64_t> shadow_weights;    // B_i
  std::int64_t code_min_weight = 0;             // d
  std::int64_t shadow_min_weight = 0;           // s = d(S)
  std::vector<BitVec> min_shadow_c1;            // the weight-s vectors in C1
  std::vector<BitVec> min_shadow_c3;            // ... and in C3
};

// Requires a singly even self-dual code. Every structural invariant (coset
// sizes, weight sums, the mod-4 congruence of shadow weights) is verified
// before returning; a violation raises InternalError.
ShadowDecomposition shadow_decompose(const BinaryCode& code, std::int64_t max_n = kDefaultEnumGuard);

struct StructureCheck {
  std::string name;
  bool pass = false;
  std::uint64_t checked = 0;
  std::string note;
};

struct StructureReport {
  std::vector<StructureCheck> checks;
  bool all_pass = true;
  bool exhaustive = true;  // false once pair checks fall back to sampling
};

// Coset-sum membership, the weight congruence and the inner-product dichotomy
// over exhaustive or sampled pairs. A failure indicates an engine bug, so it
// is reported rather than thrown.
StructureReport check_shadow_structure(const ShadowDecomposition& decomp);

struct BoundCheck {
  bool applicable = false;
  std::string reason;  // set when not applicable
  std::optional<bounds::BoundStatement> statement;
  std::uint64_t count_at_s = 0;  // B_s
  bool within_bound = false;
  bool pattern_ok = false;  // support-intersection pattern of the weight-s vectors
  std::string pattern_note;
};

// Applies the matching B_s bound when the shadow minimum weight equals
// d/2 + 1, and checks the support-intersection pattern of the minimum-weight
// shadow vectors; otherwise reports "not applicable".
BoundCheck verify_bound(const ShadowDecomposition& decomp);

}  // namespace sdb::gf2

#endif

#include "shadowbounds/arith.hpp"

#include <limits>
#include <mutex>
#include <vector>

namespace sdb {

namespace {

// Rows of Pascal's triangle, grown on demand. Each entry is filled exactly
// once; concurrent callers serialize on the mutex and copy values out.
class BinomialTable {
 public:
  BigInt get(std::int64_t n, std::int64_t k) {
    std::scoped_lock lock(mutex_);
    while (static_cast<std::int64_t>(rows_.size()) <= n) {
      const std::size_t m = rows_.size();
      std::vector<BigInt> row(m + 1, 1);
      for (std::size_t i = 1; i < m; ++i) row[i] = rows_[m - 1][i - 1] + rows_[m - 1][i];
      rows_.push_back(std::move(row));
    }
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

 private:
  std::mutex mutex_;
  std::vector<std::vector<BigInt>> rows_;
};

}  // namespace

BigInt binom(std::int64_t n, std::int64_t k) {
  if (n < 0) throw DomainError("binom: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  static BinomialTable table;
  return table.get(n, k);
}

BigInt ceil_sqrt(const BigInt& m) {
  if (m < 0) throw DomainError("ceil_sqrt: argument must be nonnegative");
  if (m == 0) return 0;
  // Newton iteration from above, then a final adjustment.
  BigInt x = BigInt(1) << (boost::multiprecision::msb(m) / 2 + 1);
  while (true) {
    BigInt y = (x + m / x) >> 1;
    if (y >= x) break;
    x = y;
  }
  while (x * x > m) --x;
  while (x * x < m) ++x;
  return x;
}

BigInt ceil_two_sqrt(const BigInt& m) {
  if (m < 0) throw DomainError("ceil_two_sqrt: argument must be nonnegative");
  return ceil_sqrt(4 * m);
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  if (b <= 0) throw DomainError("ceil_div: divisor must be positive");
  const std::int64_t q = a / b;
  return q + (a % b > 0 ? 1 : 0);
}

Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) throw DomainError("make_rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

BigInt floor_rat(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

std::string rat_str(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::int64_t to_int64(const BigInt& v) {
  if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max())
    throw DomainError("integer value out of 64-bit range: " + v.str());
  return v.convert_to<std::int64_t>();
}

}  // namespace sdb

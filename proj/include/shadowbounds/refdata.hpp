#ifndef SHADOWBOUNDS_REFDATA_HPP
#define SHADOWBOUNDS_REFDATA_HPP

#include <cstdint>
#include <optional>

namespace sdb::gf2 {

// Largest minimum weight d(n) a singly even self-dual code of length n can
// have, per the published classification tables. Only the lengths used by
// table1/table2 are shipped; anything else is unknown.
std::optional<std::int64_t> known_dn(std::int64_t n);

}  // namespace sdb::gf2

#endif

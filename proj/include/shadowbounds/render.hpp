#ifndef SHADOWBOUNDS_RENDER_HPP
#define SHADOWBOUNDS_RENDER_HPP

#include "shadowbounds/bounds.hpp"
#include "shadowbounds/families.hpp"
#include "shadowbounds/gf2.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>

namespace sdb::render {

// Bound statements serialize with exactly the fields
// {n, d, s, bound, case, excluded}; table outputs are arrays of them.
nlohmann::json bound_statement(const bounds::BoundStatement& st);
nlohmann::json table1();
nlohmann::json table2();

nlohmann::json qmatrix(std::int64_t v, std::int64_t d);
nlohmann::json bound_m(std::int64_t v, std::int64_t d);

// For n == 0 (mod 4): the improved statement, plus the prior one when
// compare_prior is set. For n == 2 (mod 4): the v-split statement.
nlohmann::json bound(std::int64_t n, std::int64_t d, bool compare_prior);

nlohmann::json max_ab(std::int64_t s, std::int64_t n, bool with_oracle);

nlohmann::json restrict_family(const std::string& name);

nlohmann::json verify_code(const gf2::BinaryCode& code, std::int64_t max_n,
                           const std::vector<std::string>& warnings);

// Canonical serialization used everywhere: two-space indent plus a trailing
// newline, so JSON outputs are byte-stable across runs.
std::string dump(const nlohmann::json& j);

}  // namespace sdb::render

#endif

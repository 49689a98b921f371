#include "shadowbounds.h"

#include "shadowbounds/render.hpp"

#include <cstring>
#include <new>
#include <string>

namespace {

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_error(char** out_error, const std::string& message) {
  if (out_error) *out_error = dup_string(message);
}

// Run fn, store its JSON result, and map exceptions onto status codes.
template <class Fn>
sdb_status guarded(char** out_json, char** out_error, Fn&& fn) {
  if (!out_json) {
    set_error(out_error, "output pointer is null");
    return SDB_ERR_DOMAIN;
  }
  try {
    *out_json = dup_string(sdb::render::dump(fn()));
    return SDB_OK;
  } catch (const sdb::DomainError& e) {
    set_error(out_error, e.what());
    return SDB_ERR_DOMAIN;
  } catch (const sdb::ParseError& e) {
    set_error(out_error, e.what());
    return SDB_ERR_PARSE;
  } catch (const std::exception& e) {
    set_error(out_error, std::string("internal error: ") + e.what());
    return SDB_ERR_INTERNAL;
  }
}

}  // namespace

struct sdb_code {
  sdb::gf2::BinaryCode code;
  std::vector<std::string> warnings;
};

extern "C" {

const char* sdb_version(void) { return "0.1.0"; }

void sdb_string_free(char* s) { delete[] s; }

sdb_status sdb_qmatrix_json(int64_t v, int64_t d, char** out_json, char** out_error) {
  return guarded(out_json, out_error, [&] { return sdb::render::qmatrix(v, d); });
}

sdb_status sdb_bound_m_json(int64_t v, int64_t d, char** out_json, char** out_error) {
  return guarded(out_json, out_error, [&] { return sdb::render::bound_m(v, d); });
}

sdb_status sdb_bound_json(int64_t n, int64_t d, int compare_prior, char** out_json, char** out_error) {
  return guarded(out_json, out_error, [&] { return sdb::render::bound(n, d, compare_prior != 0); });
}

sdb_status sdb_max_ab_json(int64_t s, int64_t n, int with_oracle, char** out_json, char** out_error) {
  return guarded(out_json, out_error, [&] { return sdb::render::max_ab(s, n, with_oracle != 0); });
}

sdb_status sdb_table1_json(char** out_json, char** out_error) {
  return guarded(out_json, out_error, [] { return sdb::render::table1(); });
}

sdb_status sdb_table2_json(char** out_json, char** out_error) {
  return guarded(out_json, out_error, [] { return sdb::render::table2(); });
}

sdb_status sdb_restrict_json(const char* family, char** out_json, char** out_error) {
  if (!family) {
    set_error(out_error, "family name is null");
    return SDB_ERR_DOMAIN;
  }
  return guarded(out_json, out_error, [&] { return sdb::render::restrict_family(family); });
}

sdb_status sdb_known_dn(int64_t n, int64_t* out_dn) {
  const auto dn = sdb::gf2::known_dn(n);
  if (!dn || !out_dn) return SDB_ERR_DOMAIN;
  *out_dn = *dn;
  return SDB_OK;
}

sdb_status sdb_code_parse(const char* text, sdb_code** out_code, char** out_warnings, char** out_error) {
  if (!text || !out_code) {
    set_error(out_error, "null argument");
    return SDB_ERR_DOMAIN;
  }
  try {
    sdb::gf2::ParseResult parsed = sdb::gf2::parse_generator_matrix(text);
    auto* handle = new sdb_code{std::move(parsed.code), std::move(parsed.warnings)};
    if (out_warnings && !handle->warnings.empty()) {
      std::string joined;
      for (const std::string& w : handle->warnings) {
        if (!joined.empty()) joined += '\n';
        joined += w;
      }
      *out_warnings = dup_string(joined);
    }
    *out_code = handle;
    return SDB_OK;
  } catch (const sdb::ParseError& e) {
    set_error(out_error, e.what());
    return SDB_ERR_PARSE;
  } catch (const std::exception& e) {
    set_error(out_error, std::string("internal error: ") + e.what());
    return SDB_ERR_INTERNAL;
  }
}

void sdb_code_free(sdb_code* code) { delete code; }

int64_t sdb_code_length(const sdb_code* code) { return code ? code->code.length : 0; }

int64_t sdb_code_dimension(const sdb_code* code) { return code ? code->code.dimension() : 0; }

sdb_status sdb_code_verify_json(const sdb_code* code, int64_t max_n, char** out_json, char** out_error) {
  if (!code) {
    set_error(out_error, "code handle is null");
    return SDB_ERR_DOMAIN;
  }
  return guarded(out_json, out_error,
                 [&] { return sdb::render::verify_code(code->code, max_n, code->warnings); });
}

}  // extern "C"

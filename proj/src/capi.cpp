#include "freeleray.h"

#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <stdexcept>
#include <string>
#include <variant>

#include "freeleray/json_io.hpp"
#include "freeleray/projections.hpp"
#include "freeleray/scalar.hpp"
#include "freeleray/verify.hpp"
#include "freeleray/words.hpp"

struct fl_field {
  using Value =
      std::variant<fleray::VectorField<fleray::Rational>, fleray::VectorField<fleray::Complex>>;
  Value value;
  explicit fl_field(Value v) : value(std::move(v)) {}
};

namespace {

thread_local std::string g_last_error;

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs fn, routing exceptions into fl_last_error and a status code.
template <class Fn>
fl_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const fleray::ParseError& e) {
    g_last_error = e.what();
    return FL_ERR_PARSE;
  } catch (const fleray::UnsupportedModeError& e) {
    g_last_error = e.what();
    return FL_ERR_MODE;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return FL_ERR_ARGUMENT;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return FL_ERR_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FL_ERR_INTERNAL;
  }
}

fl_status require(bool ok, const char* message) {
  if (ok) return FL_OK;
  g_last_error = message;
  return FL_ERR_ARGUMENT;
}

}  // namespace

extern "C" {

const char* fl_version(void) { return "0.1.0"; }

const char* fl_last_error(void) { return g_last_error.c_str(); }

void fl_string_free(char* s) { delete[] s; }

fl_status fl_necklace_count(int32_t n, int64_t k, char** out) {
  if (fl_status st = require(out && n >= 1 && k >= 1, "need out, n >= 1 and k >= 1"); st != FL_OK)
    return st;
  return guarded([&] {
    *out = copy_string(fleray::necklace_count(n, k).str());
    return FL_OK;
  });
}

fl_status fl_dims_table(int32_t n, int64_t max_degree, fl_format format, char** out) {
  if (fl_status st = require(out && n >= 1 && max_degree >= 0, "need out, n >= 1 and max_degree >= 0");
      st != FL_OK)
    return st;
  return guarded([&] {
    if (format == FL_FORMAT_CSV) {
      *out = copy_string(fleray::dims_csv(n, max_degree));
    } else {
      *out = copy_string(fleray::dims_json(n, max_degree).dump(2) + "\n");
    }
    return FL_OK;
  });
}

fl_status fl_necklace_table(int32_t n, int64_t max_length, fl_format format, char** out) {
  if (fl_status st = require(out && n >= 1 && max_length >= 1, "need out, n >= 1 and max_length >= 1");
      st != FL_OK)
    return st;
  return guarded([&] {
    if (format == FL_FORMAT_CSV) {
      *out = copy_string(fleray::necklaces_csv(n, max_length));
    } else {
      *out = copy_string(fleray::necklaces_json(n, max_length).dump(2) + "\n");
    }
    return FL_OK;
  });
}

fl_status fl_basis_fixture(fl_basis_kind kind, int32_t n, int64_t degree, fl_mode mode,
                           char** out) {
  if (fl_status st = require(out && n >= 1 && degree >= 0, "need out, n >= 1 and degree >= 0");
      st != FL_OK)
    return st;
  fleray::BasisKind bk;
  switch (kind) {
    case FL_BASIS_GRADIENT: bk = fleray::BasisKind::Gradient; break;
    case FL_BASIS_DIVFREE: bk = fleray::BasisKind::Divfree; break;
    case FL_BASIS_ZETA: bk = fleray::BasisKind::Zeta; break;
    case FL_BASIS_OMEGA: bk = fleray::BasisKind::Omega; break;
    default: return require(false, "unknown basis kind");
  }
  return guarded([&] {
    *out = copy_string(fleray::basis_fixture(bk, n, degree, mode == FL_MODE_FLOAT).dump(2) + "\n");
    return FL_OK;
  });
}

fl_status fl_field_parse(const char* json_utf8, fl_mode mode, fl_field** out) {
  if (fl_status st = require(json_utf8 && out, "need input text and out"); st != FL_OK) return st;
  return guarded([&] {
    nlohmann::ordered_json j;
    try {
      j = nlohmann::ordered_json::parse(json_utf8);
    } catch (const nlohmann::json::parse_error& e) {
      throw fleray::ParseError(e.what());
    }
    fl_field::Value value = mode == FL_MODE_EXACT ? fl_field::Value(fleray::parse_field_exact(j))
                                                  : fl_field::Value(fleray::parse_field_float(j));
    *out = std::make_unique<fl_field>(std::move(value)).release();
    return FL_OK;
  });
}

fl_status fl_field_project(const fl_field* in, fl_projection_kind kind, fl_field** out) {
  if (fl_status st = require(in && out, "need input field and out"); st != FL_OK) return st;
  if (fl_status st = require(kind == FL_PROJECT_CYCLIC || kind == FL_PROJECT_LERAY,
                             "unknown projection kind");
      st != FL_OK)
    return st;
  return guarded([&] {
    fl_field::Value value = std::visit(
        [&](const auto& v) -> fl_field::Value {
          return kind == FL_PROJECT_CYCLIC ? fleray::project_cyclic(v) : fleray::leray(v);
        },
        in->value);
    *out = std::make_unique<fl_field>(std::move(value)).release();
    return FL_OK;
  });
}

fl_status fl_field_to_json(const fl_field* field, char** out) {
  if (fl_status st = require(field && out, "need field and out"); st != FL_OK) return st;
  return guarded([&] {
    std::visit([&](const auto& v) { *out = copy_string(fleray::to_json(v).dump(2) + "\n"); },
               field->value);
    return FL_OK;
  });
}

fl_status fl_field_alphabet(const fl_field* field, int32_t* out) {
  if (fl_status st = require(field && out, "need field and out"); st != FL_OK) return st;
  std::visit([&](const auto& v) { *out = v.alphabet(); }, field->value);
  return FL_OK;
}

void fl_field_free(fl_field* field) { delete field; }

fl_status fl_check_names(char** out) {
  if (fl_status st = require(out != nullptr, "need out"); st != FL_OK) return st;
  return guarded([&] {
    nlohmann::ordered_json names = nlohmann::ordered_json::array();
    for (const auto& name : fleray::check_names()) names.push_back(name);
    *out = copy_string(names.dump() + "\n");
    return FL_OK;
  });
}

fl_status fl_verify(int32_t n, int64_t max_degree, uint64_t seed, const char* check_name,
                    char** out, int* all_passed) {
  if (fl_status st = require(out && all_passed && n >= 1 && max_degree >= 0,
                             "need out, all_passed, n >= 1 and max_degree >= 0");
      st != FL_OK)
    return st;
  return guarded([&] {
    const std::vector<fleray::CheckReport> reports =
        check_name ? fleray::run_named(check_name, n, max_degree, seed)
                   : fleray::run_all(n, max_degree, seed);
    bool ok = true;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
      ok = ok && r.passed;
      arr.push_back(fleray::to_json(r));
    }
    *all_passed = ok ? 1 : 0;
    *out = copy_string(arr.dump(2) + "\n");
    return FL_OK;
  });
}

}  // extern "C"

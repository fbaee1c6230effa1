#ifndef FREELERAY_JSON_IO_HPP
#define FREELERAY_JSON_IO_HPP

#include <cstdint>
#include <string>

#include "json.hpp"

#include "freeleray/fock.hpp"
#include "freeleray/ncpoly.hpp"
#include "freeleray/scalar.hpp"
#include "freeleray/verify.hpp"

namespace fleray {

// Term order in every serialization is (degree, word, direction); exact
// integers travel as decimal strings.
nlohmann::ordered_json to_json(const FockVector<Rational>& v);
nlohmann::ordered_json to_json(const VectorField<Rational>& v);
nlohmann::ordered_json to_json(const FockVector<Complex>& v);
nlohmann::ordered_json to_json(const VectorField<Complex>& v);
nlohmann::ordered_json to_json(const NcPolynomial& p);
nlohmann::ordered_json to_json(const CheckReport& r);

// Parsers throw ParseError with the index of the offending term.
VectorField<Rational> parse_field_exact(const nlohmann::ordered_json& j);
VectorField<Complex> parse_field_float(const nlohmann::ordered_json& j);
NcPolynomial parse_polynomial(const nlohmann::ordered_json& j);

// Dimension and necklace tables. CSV starts with a header row; JSON rows
// carry the counts as decimal strings.
std::string dims_csv(std::int32_t n, std::int64_t max_degree);
nlohmann::ordered_json dims_json(std::int32_t n, std::int64_t max_degree);
std::string necklaces_csv(std::int32_t n, std::int64_t max_length);
nlohmann::ordered_json necklaces_json(std::int32_t n, std::int64_t max_length);

enum class BasisKind { Gradient, Divfree, Zeta, Omega };

// One degree's basis fixture. float_mode additionally normalizes gradient
// vectors to unit norm; the zeta kind exists only in float mode and throws
// UnsupportedModeError otherwise.
nlohmann::ordered_json basis_fixture(BasisKind kind, std::int32_t n, std::int64_t k,
                                     bool float_mode);

}  // namespace fleray

#endif  // FREELERAY_JSON_IO_HPP

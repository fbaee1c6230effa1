#include "freeleray/json_io.hpp"

#include <cmath>
#include <sstream>
#include <utility>
#include <vector>

#include "freeleray/bases.hpp"
#include "freeleray/projections.hpp"
#include "freeleray/words.hpp"

namespace fleray {

namespace {

using nlohmann::ordered_json;

ordered_json word_json(const Word& w) {
  ordered_json a = ordered_json::array();
  for (std::int32_t c : w.letters) a.push_back(c);
  return a;
}

std::string term_label(std::size_t idx) { return "term " + std::to_string(idx); }

ordered_json rational_term(const Word& w, const Rational& c) {
  return {{"word", word_json(w)},
          {"num", numerator(c).str()},
          {"den", denominator(c).str()}};
}

ordered_json complex_term(const Word& w, const Complex& c) {
  return {{"word", word_json(w)}, {"re", c.real()}, {"im", c.imag()}};
}

std::int32_t parse_alphabet(const ordered_json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("expected an object with an integer field \"n\"");
  const std::int64_t n = j["n"].get<std::int64_t>();
  if (n < 1) throw ParseError("alphabet size must be at least 1");
  return static_cast<std::int32_t>(n);
}

const ordered_json& parse_terms(const ordered_json& j) {
  if (!j.contains("terms") || !j["terms"].is_array())
    throw ParseError("expected an array field \"terms\"");
  return j["terms"];
}

Word parse_word(const ordered_json& t, std::int32_t n, std::size_t idx) {
  if (!t.is_object() || !t.contains("word") || !t["word"].is_array())
    throw ParseError(term_label(idx) + ": expected an array field \"word\"");
  std::vector<std::int32_t> letters;
  for (const auto& el : t["word"]) {
    if (!el.is_number_integer())
      throw ParseError(term_label(idx) + ": word letters must be integers");
    const std::int64_t v = el.get<std::int64_t>();
    if (v < 1 || v > n)
      throw ParseError(term_label(idx) + ": letter " + std::to_string(v) +
                       " outside [1, " + std::to_string(n) + "]");
    letters.push_back(static_cast<std::int32_t>(v));
  }
  return Word(n, std::move(letters));
}

std::int32_t parse_dir(const ordered_json& t, std::int32_t n, std::size_t idx) {
  if (!t.contains("dir") || !t["dir"].is_number_integer())
    throw ParseError(term_label(idx) + ": expected an integer field \"dir\"");
  const std::int64_t d = t["dir"].get<std::int64_t>();
  if (d < 1 || d > n)
    throw ParseError(term_label(idx) + ": direction " + std::to_string(d) + " outside [1, " +
                     std::to_string(n) + "]");
  return static_cast<std::int32_t>(d);
}

Rational parse_rational(const ordered_json& t, std::size_t idx) {
  if (!t.contains("num") || !t.contains("den") || !t["num"].is_string() || !t["den"].is_string())
    throw ParseError(term_label(idx) + ": expected string fields \"num\" and \"den\"");
  BigInt num;
  BigInt den;
  try {
    num = BigInt(t["num"].get<std::string>());
    den = BigInt(t["den"].get<std::string>());
  } catch (const std::exception&) {
    throw ParseError(term_label(idx) + ": malformed decimal integer string");
  }
  if (den == 0) throw ParseError(term_label(idx) + ": zero denominator");
  return Rational(num, den);
}

Complex parse_complex(const ordered_json& t, std::size_t idx) {
  if (t.contains("num") || t.contains("den")) return to_complex(parse_rational(t, idx));
  if (!t.contains("re") || !t.contains("im") || !t["re"].is_number() || !t["im"].is_number())
    throw ParseError(term_label(idx) +
                     ": expected \"num\"/\"den\" strings or numeric \"re\"/\"im\"");
  return Complex(t["re"].get<double>(), t["im"].get<double>());
}

}  // namespace

ordered_json to_json(const FockVector<Rational>& v) {
  ordered_json terms = ordered_json::array();
  for (const auto& [w, c] : v.terms()) terms.push_back(rational_term(w, c));
  return {{"n", v.alphabet()}, {"terms", std::move(terms)}};
}

ordered_json to_json(const VectorField<Rational>& v) {
  ordered_json terms = ordered_json::array();
  for (const auto& [key, c] : v.terms()) {
    ordered_json t = {{"word", word_json(key.word)},
                      {"dir", key.dir},
                      {"num", numerator(c).str()},
                      {"den", denominator(c).str()}};
    terms.push_back(std::move(t));
  }
  return {{"n", v.alphabet()}, {"terms", std::move(terms)}};
}

ordered_json to_json(const FockVector<Complex>& v) {
  ordered_json terms = ordered_json::array();
  for (const auto& [w, c] : v.terms()) terms.push_back(complex_term(w, c));
  return {{"n", v.alphabet()}, {"terms", std::move(terms)}};
}

ordered_json to_json(const VectorField<Complex>& v) {
  ordered_json terms = ordered_json::array();
  for (const auto& [key, c] : v.terms()) {
    ordered_json t = {{"word", word_json(key.word)},
                      {"dir", key.dir},
                      {"re", c.real()},
                      {"im", c.imag()}};
    terms.push_back(std::move(t));
  }
  return {{"n", v.alphabet()}, {"terms", std::move(terms)}};
}

ordered_json to_json(const NcPolynomial& p) {
  ordered_json terms = ordered_json::array();
  for (const auto& [w, c] : p.terms()) terms.push_back(rational_term(w, c));
  return {{"n", p.alphabet()},
          {"flavor", p.flavor() == Flavor::Semicircular ? "s" : "l"},
          {"terms", std::move(terms)}};
}

ordered_json to_json(const CheckReport& r) {
  return {{"name", r.name},     {"params", r.params},   {"passed", r.passed},
          {"mode", r.mode},     {"details", r.details}, {"seed", r.seed}};
}

VectorField<Rational> parse_field_exact(const ordered_json& j) {
  const std::int32_t n = parse_alphabet(j);
  VectorField<Rational> out(n);
  std::size_t idx = 0;
  for (const auto& t : parse_terms(j)) {
    out.add_term(parse_word(t, n, idx), parse_dir(t, n, idx), parse_rational(t, idx));
    ++idx;
  }
  return out;
}

VectorField<Complex> parse_field_float(const ordered_json& j) {
  const std::int32_t n = parse_alphabet(j);
  VectorField<Complex> out(n);
  std::size_t idx = 0;
  for (const auto& t : parse_terms(j)) {
    out.add_term(parse_word(t, n, idx), parse_dir(t, n, idx), parse_complex(t, idx));
    ++idx;
  }
  return out;
}

NcPolynomial parse_polynomial(const ordered_json& j) {
  const std::int32_t n = parse_alphabet(j);
  if (!j.contains("flavor") || !j["flavor"].is_string())
    throw ParseError("expected a string field \"flavor\"");
  const std::string fl = j["flavor"].get<std::string>();
  if (fl != "s" && fl != "l") throw ParseError("flavor must be \"s\" or \"l\"");
  NcPolynomial out(n, fl == "s" ? Flavor::Semicircular : Flavor::LeftCreation);
  std::size_t idx = 0;
  for (const auto& t : parse_terms(j)) {
    out.add_term(parse_word(t, n, idx), parse_rational(t, idx));
    ++idx;
  }
  return out;
}

std::string dims_csv(std::int32_t n, std::int64_t max_degree) {
  std::ostringstream out;
  out << "n,k,ambient,necklaces,dim_cyclic,dim_divfree,dim_vect_leq\n";
  for (std::int64_t k = 0; k <= max_degree; ++k) {
    const DimensionReport d = dim_report(n, k);
    out << d.n << ',' << d.k << ',' << d.ambient.str() << ',' << d.necklaces.str() << ','
        << d.dim_cyclic.str() << ',' << d.dim_divfree.str() << ',' << d.dim_vect_leq.str()
        << '\n';
  }
  return out.str();
}

ordered_json dims_json(std::int32_t n, std::int64_t max_degree) {
  ordered_json rows = ordered_json::array();
  for (std::int64_t k = 0; k <= max_degree; ++k) {
    const DimensionReport d = dim_report(n, k);
    rows.push_back({{"n", d.n},
                    {"k", d.k},
                    {"ambient", d.ambient.str()},
                    {"necklaces", d.necklaces.str()},
                    {"dim_cyclic", d.dim_cyclic.str()},
                    {"dim_divfree", d.dim_divfree.str()},
                    {"dim_vect_leq", d.dim_vect_leq.str()}});
  }
  return rows;
}

std::string necklaces_csv(std::int32_t n, std::int64_t max_length) {
  std::ostringstream out;
  out << "n,k,count\n";
  for (std::int64_t k = 1; k <= max_length; ++k) {
    out << n << ',' << k << ',' << necklace_count(n, k).str() << '\n';
  }
  return out.str();
}

ordered_json necklaces_json(std::int32_t n, std::int64_t max_length) {
  ordered_json rows = ordered_json::array();
  for (std::int64_t k = 1; k <= max_length; ++k) {
    rows.push_back({{"n", n}, {"k", k}, {"count", necklace_count(n, k).str()}});
  }
  return rows;
}

ordered_json basis_fixture(BasisKind kind, std::int32_t n, std::int64_t k, bool float_mode) {
  ordered_json elements = ordered_json::array();
  const char* kind_name = "";

  switch (kind) {
    case BasisKind::Gradient: {
      kind_name = "gradient";
      for (const GradientBasisElement& el : cyclic_gradient_basis(n, k)) {
        ordered_json e = {{"orbit_representative", word_json(el.orbit.representative)},
                          {"period", el.orbit.size},
                          {"stabilizer", el.orbit.stabilizer_order},
                          {"squared_norm", el.squared_norm.str()}};
        if (float_mode) {
          // Unit normalization is only expressible in floats.
          const double scale = 1.0 / std::sqrt(static_cast<double>(el.squared_norm));
          VectorField<Complex> v = to_complex(el.vector);
          v *= Complex(scale, 0.0);
          e["vector"] = to_json(v);
        } else {
          e["vector"] = to_json(el.vector);
        }
        elements.push_back(std::move(e));
      }
      break;
    }
    case BasisKind::Divfree: {
      kind_name = "divfree";
      for_each_orbit_rep(n, k + 1, [&](const Word& rep) {
        Word v = rep;
        const std::int64_t p = orbit_of(rep).size;
        for (std::int64_t j = 1; j < p; ++j) {
          v = rotate(v, 1);
          FockVector<Rational> x = FockVector<Rational>::unit(v);
          x -= FockVector<Rational>::unit(rotate(v, 1));
          const VectorField<Rational> field = theta_l_star(x);
          ordered_json e = {{"preimage_word", word_json(v)}};
          e["vector"] = float_mode ? to_json(to_complex(field)) : to_json(field);
          elements.push_back(std::move(e));
        }
      });
      break;
    }
    case BasisKind::Omega: {
      kind_name = "omega";
      for (const Word& w : omega_set(n, k)) {
        FockVector<Rational> x = FockVector<Rational>::unit(w);
        x -= FockVector<Rational>::unit(rotate(w, 1));
        const VectorField<Rational> field = theta_l_star(x);
        ordered_json e = {{"word", word_json(w)}};
        e["vector"] = float_mode ? to_json(to_complex(field)) : to_json(field);
        elements.push_back(std::move(e));
      }
      break;
    }
    case BasisKind::Zeta: {
      kind_name = "zeta";
      if (!float_mode)
        throw UnsupportedModeError("zeta basis has complex coefficients; use float mode");
      // Metadata mirrors the enumeration order of zeta_basis.
      const auto basis = zeta_basis(n, k);
      std::size_t next = 0;
      for_each_orbit_rep(n, k + 1, [&](const Word& rep) {
        const std::int64_t p = orbit_of(rep).size;
        if (p < 2) return;
        for (std::int64_t t = 1; t < p; ++t) {
          ordered_json e = {{"orbit_representative", word_json(rep)},
                            {"period", p},
                            {"root_index", t},
                            {"vector", to_json(basis[next])}};
          elements.push_back(std::move(e));
          ++next;
        }
      });
      break;
    }
  }

  return {{"kind", kind_name},
          {"n", n},
          {"degree", k},
          {"mode", float_mode ? "float" : "exact"},
          {"elements", std::move(elements)}};
}

}  // namespace fleray

#ifndef FREELERAY_NCPOLY_HPP
#define FREELERAY_NCPOLY_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "freeleray/fock.hpp"
#include "freeleray/scalar.hpp"
#include "freeleray/words.hpp"

namespace fleray {

// Which operators the generators stand for. Algebra is flavor-independent;
// the flavor only decides how evaluate_vacuum acts.
enum class Flavor { Semicircular, LeftCreation };

// Element of the free algebra C<x_1, ..., x_n> with exact coefficients.
class NcPolynomial {
 public:
  using TermMap = std::map<Word, Rational, WordLess>;

  NcPolynomial(std::int32_t n, Flavor flavor);

  static NcPolynomial constant(std::int32_t n, Flavor flavor, const Rational& c);
  static NcPolynomial monomial(std::int32_t n, Flavor flavor, const Word& w,
                               const Rational& c = Rational(1));
  static NcPolynomial generator(std::int32_t n, Flavor flavor, std::int32_t i);

  std::int32_t alphabet() const { return n_; }
  Flavor flavor() const { return flavor_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.length(); }

  void add_term(const Word& w, const Rational& c);
  Rational coefficient(const Word& w) const;

  NcPolynomial& operator+=(const NcPolynomial& o);
  NcPolynomial& operator-=(const NcPolynomial& o);
  NcPolynomial& operator*=(const Rational& c);

  friend NcPolynomial operator+(NcPolynomial a, const NcPolynomial& b) { return a += b; }
  friend NcPolynomial operator-(NcPolynomial a, const NcPolynomial& b) { return a -= b; }
  friend NcPolynomial operator*(const Rational& c, NcPolynomial p) { return p *= c; }

  friend bool operator==(const NcPolynomial& a, const NcPolynomial& b) {
    return a.n_ == b.n_ && a.flavor_ == b.flavor_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const NcPolynomial& a, const NcPolynomial& b) { return !(a == b); }

 private:
  std::int32_t n_;
  Flavor flavor_;
  TermMap terms_;
};

// Element of C<x> (x) C<x>, used by the free difference quotient.
class BiPolynomial {
 public:
  struct KeyLess {
    bool operator()(const std::pair<Word, Word>& a, const std::pair<Word, Word>& b) const {
      WordLess wl;
      if (wl(a.first, b.first)) return true;
      if (wl(b.first, a.first)) return false;
      return wl(a.second, b.second);
    }
  };
  using TermMap = std::map<std::pair<Word, Word>, Rational, KeyLess>;

  explicit BiPolynomial(std::int32_t n);

  static BiPolynomial tensor(const NcPolynomial& a, const NcPolynomial& b);

  std::int32_t alphabet() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Word& a, const Word& b, const Rational& c);

  BiPolynomial& operator+=(const BiPolynomial& o);
  BiPolynomial& operator-=(const BiPolynomial& o);

  friend BiPolynomial operator+(BiPolynomial a, const BiPolynomial& b) { return a += b; }
  friend BiPolynomial operator-(BiPolynomial a, const BiPolynomial& b) { return a -= b; }

  friend bool operator==(const BiPolynomial& a, const BiPolynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const BiPolynomial& a, const BiPolynomial& b) { return !(a == b); }

 private:
  std::int32_t n_;
  TermMap terms_;
};

// Bilinear extension of word concatenation.
NcPolynomial multiply(const NcPolynomial& p, const NcPolynomial& q);

// (A (x) B) * (C (x) D) = AC (x) BD, extended bilinearly.
BiPolynomial multiply(const BiPolynomial& p, const BiPolynomial& q);

// The cyclic gradient: monomial x_{i_1}...x_{i_p} contributes, for each j,
// the rotated remainder x_{i_{j+1}}...x_{i_p}x_{i_1}...x_{i_{j-1}} to
// component i_j. Invariant under word rotation.
std::vector<NcPolynomial> cyclic_gradient(const NcPolynomial& p);

// Free difference quotient: split each monomial at every occurrence of x_i.
BiPolynomial difference_quotient(std::int32_t i, const NcPolynomial& p);

// Apply the generators, right to left, to the vacuum: left creations give
// e_w directly, semicircular generators act by l + l^*.
FockVector<Rational> evaluate_vacuum(const NcPolynomial& p);

// Vacuum state tau = < . 1, 1 >.
Rational trace(const NcPolynomial& p);

// tau (x) tau against a tensor, with semicircular evaluation.
Rational trace_tensor(const BiPolynomial& b);

// Monic Chebyshev recurrence U_0 = 1, U_1 = t, U_{k+1} = t U_k - U_{k-1};
// coefficients of t^0 .. t^k.
std::vector<BigInt> chebyshev(std::int64_t k);

// U_k(x_i) as a polynomial in n generators.
NcPolynomial chebyshev_at(std::int64_t k, std::int32_t i, std::int32_t n, Flavor flavor);

// The n components of cyclic_gradient(p), each evaluated at the vacuum and
// assembled as a vector field: delta(p)[1 + ... + 1].
VectorField<Rational> gradient_field_on_vacuum(const NcPolynomial& p);

}  // namespace fleray

#endif  // FREELERAY_NCPOLY_HPP

#ifndef FREELERAY_PROJECTIONS_HPP
#define FREELERAY_PROJECTIONS_HPP

#include <cstdint>
#include <vector>

#include "freeleray/fock.hpp"
#include "freeleray/scalar.hpp"
#include "freeleray/words.hpp"

namespace fleray {

// One orbit's worth of the orthogonal (unnormalized) basis of the space of
// cyclic gradients: the field delta(u)[1 + ... + 1] for the representative
// word u, together with its exact squared norm m^2 p.
struct GradientBasisElement {
  Orbit orbit;
  VectorField<Rational> vector;
  BigInt squared_norm;
};

// delta(u)[1 + ... + 1] for a single monomial word: position j of u
// contributes the cyclically read remainder to component u_j. Independent of
// the rotation class representative.
template <class S>
VectorField<S> cyclic_gradient_field(const Word& u) {
  VectorField<S> out(u.n);
  const std::int64_t k = u.length();
  for (std::int64_t j = 0; j < k; ++j) {
    std::vector<std::int32_t> rest;
    rest.reserve(static_cast<std::size_t>(k - 1));
    for (std::int64_t s = 1; s < k; ++s)
      rest.push_back(u.letters[static_cast<std::size_t>((j + s) % k)]);
    out.add_term(Word(u.n, std::move(rest)), u.letters[static_cast<std::size_t>(j)],
                 ScalarOps<S>::from_int(1));
  }
  return out;
}

// One element per orbit of [n]^(k+1); fields are homogeneous of degree k,
// pairwise orthogonal, and count necklace_count(n, k+1).
std::vector<GradientBasisElement> cyclic_gradient_basis(std::int32_t n, std::int64_t k);

// Orthogonal projection onto the span of cyclic gradients, term by term:
// e_u (x) f_j contributes delta(ju)[1 + ... + 1] / (|u| + 1). Mixed degrees
// are handled by linearity.
template <class S>
VectorField<S> project_cyclic(const VectorField<S>& v) {
  VectorField<S> out(v.alphabet());
  for (const auto& [key, c] : v.terms()) {
    const S weight = c / ScalarOps<S>::from_int(key.word.length() + 1);
    VectorField<S> grad = cyclic_gradient_field<S>(prepend(key.dir, key.word));
    for (const auto& [gkey, gc] : grad.terms())
      out.add_term(gkey.word, gkey.dir, weight * gc);
  }
  return out;
}

// Free Leray projection: the complement of project_cyclic. Annihilates
// cyclic gradients and fixes divergence-free fields.
template <class S>
VectorField<S> leray(const VectorField<S>& v) {
  VectorField<S> out = v;
  out -= project_cyclic(v);
  return out;
}

}  // namespace fleray

#endif  // FREELERAY_PROJECTIONS_HPP

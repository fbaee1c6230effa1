#include "freeleray/bases.hpp"

#include <numbers>
#include <utility>

namespace fleray {

namespace {

BigInt int_pow(std::int64_t base, std::int64_t exp) {
  BigInt acc(1);
  for (std::int64_t i = 0; i < exp; ++i) acc *= base;
  return acc;
}

}  // namespace

DimensionReport dim_report(std::int32_t n, std::int64_t k) {
  DimensionReport rep;
  rep.n = n;
  rep.k = k;
  rep.ambient = int_pow(n, k + 1);
  rep.necklaces = necklace_count(n, k + 1);
  rep.dim_cyclic = rep.necklaces;
  rep.dim_divfree = rep.ambient - rep.necklaces;

  // Count of all coordinates in degrees 0..k: n + n^2 + ... + n^(k+1),
  // minus one necklace count per degree.
  BigInt geometric(0);
  if (n == 1) {
    geometric = k + 1;
  } else {
    geometric = BigInt(n) * (int_pow(n, k + 1) - 1) / (n - 1);
  }
  BigInt cyclic_sum(0);
  for (std::int64_t j = 0; j <= k; ++j) cyclic_sum += necklace_count(n, j + 1);
  rep.dim_vect_leq = geometric - cyclic_sum;
  return rep;
}

std::vector<FockVector<Rational>> divfree_preimage_basis(std::int32_t n, std::int64_t k) {
  std::vector<FockVector<Rational>> out;
  for_each_orbit_rep(n, k + 1, [&](const Word& rep) {
    Word v = rep;
    const std::int64_t p = orbit_of(rep).size;
    // Skip the representative itself; its p - 1 fellow members each give
    // one vector e_v - e_Rv.
    for (std::int64_t j = 1; j < p; ++j) {
      v = rotate(v, 1);
      FockVector<Rational> x = FockVector<Rational>::unit(v);
      x -= FockVector<Rational>::unit(rotate(v, 1));
      out.push_back(std::move(x));
    }
  });
  return out;
}

std::vector<VectorField<Rational>> divfree_basis(std::int32_t n, std::int64_t k) {
  std::vector<VectorField<Rational>> out;
  for (const FockVector<Rational>& x : divfree_preimage_basis(n, k))
    out.push_back(theta_l_star(x));
  return out;
}

std::vector<Word> omega_set(std::int32_t n, std::int64_t k) {
  std::vector<Word> out;
  for_each_word(n, k + 1, [&](const Word& w) {
    if (lex_less(w, rotate(w, 1))) out.push_back(w);
  });
  return out;
}

std::vector<VectorField<Complex>> zeta_basis(std::int32_t n, std::int64_t k) {
  std::vector<VectorField<Complex>> out;
  if (k < 1) return out;
  for_each_orbit_rep(n, k + 1, [&](const Word& rep) {
    const std::int64_t p = orbit_of(rep).size;
    if (p < 2) return;
    // F applied to the j-fold left rotations of the representative, with an
    // exact skeleton converted to floats once.
    std::vector<VectorField<Complex>> f;
    f.reserve(static_cast<std::size_t>(p));
    for (std::int64_t j = 0; j < p; ++j) {
      Word w = rotate(rep, -j);
      FockVector<Rational> x = FockVector<Rational>::unit(w);
      x -= FockVector<Rational>::unit(rotate(w, 1));
      f.push_back(to_complex(theta_l_star(x)));
    }
    // One vector per non-unital p-th root of unity.
    for (std::int64_t t = 1; t < p; ++t) {
      VectorField<Complex> acc(n);
      for (std::int64_t j = 0; j < p; ++j) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(t) *
                             static_cast<double>(j) / static_cast<double>(p);
        const Complex zj = std::polar(1.0, angle);
        for (const auto& [key, c] : f[static_cast<std::size_t>(j)].terms())
          acc.add_term(key.word, key.dir, zj * c);
      }
      out.push_back(std::move(acc));
    }
  });
  return out;
}

}  // namespace fleray

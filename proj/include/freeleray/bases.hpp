#ifndef FREELERAY_BASES_HPP
#define FREELERAY_BASES_HPP

#include <cstdint>
#include <vector>

#include "freeleray/fock.hpp"
#include "freeleray/scalar.hpp"
#include "freeleray/words.hpp"

namespace fleray {

// Dimensions attached to degree k over n generators. ambient counts the
// coordinates of [(C^n)^(k+1-fold tensor)]^n; dim_vect_leq accumulates the
// divergence-free dimensions up to degree k.
struct DimensionReport {
  std::int32_t n = 1;
  std::int64_t k = 0;
  BigInt ambient;
  BigInt necklaces;
  BigInt dim_cyclic;
  BigInt dim_divfree;
  BigInt dim_vect_leq;
};

DimensionReport dim_report(std::int32_t n, std::int64_t k);

// For each orbit of [n]^(k+1), one vector e_v - e_Rv per non-representative
// member v. Spans the range of I - R in degree k+1; count is
// n^(k+1) - necklace_count(n, k+1).
std::vector<FockVector<Rational>> divfree_preimage_basis(std::int32_t n, std::int64_t k);

// theta_l_star of each preimage vector: a basis of the degree-k
// divergence-free space. Empty for k = 0.
std::vector<VectorField<Rational>> divfree_basis(std::int32_t n, std::int64_t k);

// Words of length k+1 strictly lex-smaller than their rotation. Cardinality
// (n^(k+1) - n)/2; the fields they induce span strictly less than the
// divergence-free space once repeated letters appear.
std::vector<Word> omega_set(std::int32_t n, std::int64_t k);

// For each orbit representative I of period p >= 2 and each non-unital p-th
// root of unity zeta, sum zeta^j theta_l_star((I-R)e_w) over the j-fold left
// rotations w of I. Complex floats only.
std::vector<VectorField<Complex>> zeta_basis(std::int32_t n, std::int64_t k);

}  // namespace fleray

#endif  // FREELERAY_BASES_HPP

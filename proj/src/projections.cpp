#include "freeleray/projections.hpp"

namespace fleray {

std::vector<GradientBasisElement> cyclic_gradient_basis(std::int32_t n, std::int64_t k) {
  std::vector<GradientBasisElement> out;
  for_each_orbit_rep(n, k + 1, [&](const Word& rep) {
    Orbit orb = orbit_of(rep);
    BigInt norm = BigInt(orb.stabilizer_order) * orb.stabilizer_order * orb.size;
    out.push_back(
        GradientBasisElement{std::move(orb), cyclic_gradient_field<Rational>(rep), std::move(norm)});
  });
  return out;
}

}  // namespace fleray

#ifndef FREELERAY_VERIFY_HPP
#define FREELERAY_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "freeleray/scalar.hpp"

namespace fleray {

// Outcome of one executable check. In exact mode, passed means bit-exact
// identity, never a tolerance.
struct CheckReport {
  std::string name;
  nlohmann::ordered_json params;
  bool passed = false;
  std::string mode;  // "exact" or "float"
  nlohmann::ordered_json details;
  std::uint64_t seed = 0;
};

// Nullspaces of theta_l_star and of I - cyclic_shift agree on the degree-k
// component; both dimensions equal necklace_count(n, k).
CheckReport check_kernel_lemma(std::int32_t n, std::int64_t k);

// The spans of gradient fields of all monomials of degree <= d coincide for
// the two vacuum-evaluation flavors (mutual containment by rank).
CheckReport check_range_equality(std::int32_t n, std::int64_t d);

// Cyclic-gradient basis and divergence-free basis of degree k are
// orthogonal and their ranks sum to n^(k+1).
CheckReport check_direct_sum(std::int32_t n, std::int64_t k);

// The rotation field of f = (x_1^2 + x_2^2)^m, evaluated on the vacuum, has
// exactly zero cyclic-gradient projection (n = 2).
CheckReport check_radial(std::int64_t m);

// trace(x_i P) = trace (x) trace of the difference quotient of P, for
// seeded random polynomials in two semicircular generators.
CheckReport check_stein(std::int64_t trials, std::int64_t degree_cap, std::uint64_t seed);

// necklace_count against brute-force orbit counting for 1 <= k <= kmax.
CheckReport check_burnside(std::int32_t n, std::int64_t kmax);

// Dimension table consistency at degree k, including the exact rank of the
// full family theta_l_star((I-R)e_w) over all words of length k+1.
CheckReport check_dimension(std::int32_t n, std::int64_t k);

// Gram matrix of cyclic_gradient_basis(n, k) is exactly diagonal with
// entries m^2 p, and the count is necklace_count(n, k+1).
CheckReport check_orthogonal_basis(std::int32_t n, std::int64_t k);

// Idempotence, self-adjointness and mutual annihilation of project_cyclic
// and leray on seeded random fields of degree <= k.
CheckReport check_projection(std::int32_t n, std::int64_t k, std::int64_t trials,
                             std::uint64_t seed);

// divfree_basis(n, k): cardinality and exact rank equal dim_divfree, every
// element is annihilated by project_cyclic and fixed by leray.
CheckReport check_divfree_basis(std::int32_t n, std::int64_t k);

// omega_set cardinality (n^(k+1) - n)/2 and the rank of its induced fields,
// recording how far they fall short of dim_divfree.
CheckReport check_omega(std::int32_t n, std::int64_t k);

// zeta_basis(n, k): cardinality dim_divfree, numerical rank dim_divfree at
// 1e-9, every element fixed by leray up to 1e-9 relative error.
CheckReport check_zeta(std::int32_t n, std::int64_t k);

// evaluate_vacuum turns Chebyshev products U_{k_1}(x_{i_1})...U_{k_p}(x_{i_p})
// into the basis vector of the run-length word, for every word of length
// <= degree_cap.
CheckReport check_chebyshev(std::int32_t n, std::int64_t degree_cap);

// The registered check names, in suite order.
std::vector<std::string> check_names();

// The full suite at alphabet size n up to max_degree. Runs checks on a
// worker pool sized by FOCK_LERAY_THREADS (0 or unset = hardware).
std::vector<CheckReport> run_all(std::int32_t n, std::int64_t max_degree, std::uint64_t seed);

// Same suite restricted to one named check; unknown names throw
// std::invalid_argument.
std::vector<CheckReport> run_named(const std::string& name, std::int32_t n,
                                   std::int64_t max_degree, std::uint64_t seed);

// Worker count from FOCK_LERAY_THREADS (0 or unset = hardware concurrency).
int thread_budget();

}  // namespace fleray

#endif  // FREELERAY_VERIFY_HPP

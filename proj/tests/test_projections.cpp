#include "doctest.h"

#include <cstdint>
#include <random>
#include <vector>

#include "freeleray/linalg.hpp"
#include "freeleray/projections.hpp"
#include "oracles.hpp"

using namespace fleray;

namespace {

Word w2(std::vector<std::int32_t> ls) { return Word(2, std::move(ls)); }

VectorField<Rational> random_field(std::mt19937_64& rng, std::int32_t n, std::int64_t max_len) {
  VectorField<Rational> v(n);
  const std::int64_t terms = 1 + static_cast<std::int64_t>(rng() % 5);
  for (std::int64_t t = 0; t < terms; ++t) {
    const std::int64_t len = static_cast<std::int64_t>(rng() % (max_len + 1));
    std::vector<std::int32_t> ls;
    for (std::int64_t i = 0; i < len; ++i)
      ls.push_back(1 + static_cast<std::int32_t>(rng() % static_cast<std::uint64_t>(n)));
    const std::int32_t dir = 1 + static_cast<std::int32_t>(rng() % static_cast<std::uint64_t>(n));
    v.add_term(Word(n, std::move(ls)), dir, Rational(static_cast<std::int64_t>(rng() % 13) - 6));
  }
  return v;
}

}  // namespace

TEST_SUITE("projections") {

TEST_CASE("gradient field of a single word") {
  const auto f = cyclic_gradient_field<Rational>(w2({1, 2}));
  CHECK(f.coefficient(w2({2}), 1) == 1);
  CHECK(f.coefficient(w2({1}), 2) == 1);
  CHECK(f.term_count() == 2);
  CHECK(oracle::to_map(f) == oracle::delta_field({1, 2}));

  // Repeated letters accumulate: u = 11 gives 2 e_1 (x) f_1.
  const auto rep = cyclic_gradient_field<Rational>(w2({1, 1}));
  CHECK(rep.coefficient(w2({1}), 1) == 2);
  CHECK(rep.term_count() == 1);
}

TEST_CASE("gradient fields depend only on the rotation class") {
  for_each_word(3, 5, [](const Word& u) {
    if (u.is_empty()) return;
    CHECK(cyclic_gradient_field<Rational>(u) ==
          cyclic_gradient_field<Rational>(rotate(u, 1)));
  });
}

TEST_CASE("degree one gradient basis over two letters") {
  const auto basis = cyclic_gradient_basis(2, 1);
  REQUIRE(basis.size() == 3);  // orbits of [2]^2: 11, 12, 22

  CHECK(basis[0].orbit.representative == w2({1, 1}));
  CHECK(basis[0].vector.coefficient(w2({1}), 1) == 2);
  CHECK(basis[0].squared_norm == 4);

  CHECK(basis[1].orbit.representative == w2({1, 2}));
  CHECK(basis[1].vector.coefficient(w2({2}), 1) == 1);
  CHECK(basis[1].vector.coefficient(w2({1}), 2) == 1);
  CHECK(basis[1].squared_norm == 2);

  CHECK(basis[2].orbit.representative == w2({2, 2}));
  CHECK(basis[2].vector.coefficient(w2({2}), 2) == 2);
  CHECK(basis[2].squared_norm == 4);
}

TEST_CASE("gradient basis is orthogonal with squared norms m^2 p") {
  for (std::int32_t n = 2; n <= 3; ++n) {
    for (std::int64_t k = 0; k <= 4; ++k) {
      const auto basis = cyclic_gradient_basis(n, k);
      CHECK(static_cast<std::int64_t>(basis.size()) == necklace_count(n, k + 1));
      for (std::size_t i = 0; i < basis.size(); ++i) {
        const std::int64_t p = basis[i].orbit.size;
        const std::int64_t m = basis[i].orbit.stabilizer_order;
        CHECK(basis[i].squared_norm == BigInt(m) * m * p);
        CHECK(inner(basis[i].vector, basis[i].vector) == Rational(basis[i].squared_norm));
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
          CHECK(inner(basis[i].vector, basis[j].vector) == 0);
        }
      }
    }
  }
}

TEST_CASE("projection of a gradient field is itself") {
  for_each_orbit_rep(2, 4, [](const Word& u) {
    const auto g = cyclic_gradient_field<Rational>(u);
    CHECK(project_cyclic(g) == g);
    CHECK(leray(g).is_zero());
    // Gradient fields exhaust the kernel of theta_l in each degree.
    CHECK(theta_l(g).is_zero());
  });
}

TEST_CASE("projection of a single term matches the stated example") {
  // e_1 (x) f_2 projects to (e_2 (x) f_1 + e_1 (x) f_2) / 2.
  const auto v = VectorField<Rational>::unit(w2({1}), 2);
  const auto p = project_cyclic(v);
  CHECK(p.coefficient(w2({2}), 1) == Rational(1, 2));
  CHECK(p.coefficient(w2({1}), 2) == Rational(1, 2));
  CHECK(p.term_count() == 2);

  const auto l = leray(v);
  CHECK(l.coefficient(w2({1}), 2) == Rational(1, 2));
  CHECK(l.coefficient(w2({2}), 1) == Rational(-1, 2));
  CHECK(l.term_count() == 2);
}

TEST_CASE("degree zero fields are pure gradients") {
  const auto v = VectorField<Rational>::unit(Word::empty(2), 1);
  CHECK(project_cyclic(v) == v);
  CHECK(leray(v).is_zero());
}

TEST_CASE("projection agrees with the orthogonal expansion oracle") {
  std::mt19937_64 rng(31);
  for (std::int32_t n = 2; n <= 3; ++n) {
    for (std::int64_t k = 0; k <= 4; ++k) {
      for (int trial = 0; trial < 8; ++trial) {
        // Build a homogeneous degree-k field so the oracle expansion applies.
        VectorField<Rational> v(n);
        for (int t = 0; t < 4; ++t) {
          std::vector<std::int32_t> ls;
          for (std::int64_t i = 0; i < k; ++i)
            ls.push_back(1 + static_cast<std::int32_t>(rng() % static_cast<std::uint64_t>(n)));
          const std::int32_t dir =
              1 + static_cast<std::int32_t>(rng() % static_cast<std::uint64_t>(n));
          v.add_term(Word(n, std::move(ls)), dir,
                     Rational(static_cast<std::int64_t>(rng() % 13) - 6));
        }
        const auto expected = oracle::onb_project(oracle::to_map(v), n, k);
        CHECK(oracle::to_map(project_cyclic(v)) == expected);
      }
    }
  }
}

TEST_CASE("projection identities on random mixed-degree fields") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    const auto v = random_field(rng, 3, 4);
    const auto w = random_field(rng, 3, 4);
    const auto pv = project_cyclic(v);
    const auto lv = leray(v);
    CHECK(pv + lv == v);
    CHECK(project_cyclic(pv) == pv);
    CHECK(leray(lv) == lv);
    CHECK(project_cyclic(lv).is_zero());
    CHECK(leray(pv).is_zero());
    // Self-adjointness of both projections.
    CHECK(inner(pv, w) == inner(v, project_cyclic(w)));
    CHECK(inner(lv, w) == inner(v, leray(w)));
  }
}

TEST_CASE("projection works on float fields") {
  VectorField<Complex> v(2);
  v.add_term(w2({1}), 2, Complex(1.0, 0.0));
  const auto l = leray(v);
  CHECK(l.coefficient(w2({1}), 2).real() == doctest::Approx(0.5));
  CHECK(l.coefficient(w2({2}), 1).real() == doctest::Approx(-0.5));
}

}  // TEST_SUITE

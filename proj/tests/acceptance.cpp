// Acceptance gate: runs the full battery of mathematical criteria against
// the built library and CLI, printing one PASS/FAIL line per criterion.
// argv[1] is the CLI binary, argv[2] the golden dimension-table CSV.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "freeleray/bases.hpp"
#include "freeleray/json_io.hpp"
#include "freeleray/linalg.hpp"
#include "freeleray/ncpoly.hpp"
#include "freeleray/projections.hpp"
#include "freeleray/verify.hpp"
#include "oracles.hpp"

using namespace fleray;

namespace {

std::string g_cli_path;
std::string g_golden_dims;

struct Criterion {
  int number;
  std::string label;
  double time_limit_s;  // 0 = unbounded
  std::function<bool(std::string&)> run;
};

bool fail(std::string& msg, const std::string& text) {
  msg = text;
  return false;
}

std::int64_t brute_dim_divfree(std::int32_t n, std::int64_t k) {
  std::int64_t total = 1;
  for (std::int64_t i = 0; i <= k; ++i) total *= n;
  return total - oracle::brute_necklaces(n, k + 1);
}

VectorField<Rational> random_homogeneous_field(std::mt19937_64& rng, std::int32_t n,
                                               std::int64_t k) {
  VectorField<Rational> v(n);
  const std::int64_t terms = 1 + static_cast<std::int64_t>(rng() % 5);
  for (std::int64_t t = 0; t < terms; ++t) {
    std::vector<std::int32_t> ls;
    for (std::int64_t i = 0; i < k; ++i)
      ls.push_back(1 + static_cast<std::int32_t>(rng() % static_cast<std::uint64_t>(n)));
    const std::int32_t dir = 1 + static_cast<std::int32_t>(rng() % static_cast<std::uint64_t>(n));
    v.add_term(Word(n, std::move(ls)), dir, Rational(static_cast<std::int64_t>(rng() % 19) - 9));
  }
  return v;
}

int run_cli(const std::string& args) {
  const std::string cmd = "\"" + g_cli_path + "\" " + args;
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  if (WIFEXITED(status)) return WEXITSTATUS(status);
  return -1;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// 1. Exact rank of the rotation-difference span matches the counting
//    formula, with the published spot values.
bool criterion_dimensions(std::string& msg) {
  struct Spot {
    std::int32_t n;
    std::int64_t k;
    std::int64_t dim;
  };
  const Spot spots[] = {{2, 1, 1}, {2, 2, 4}, {2, 3, 10}, {3, 2, 16}};

  for (std::int32_t n = 2; n <= 3; ++n) {
    for (std::int64_t k = 0; k <= 6; ++k) {
      // Build every theta_l_star((I - R) e_w) from the independent closed
      // form, then take the exact rank of the family.
      std::vector<VectorField<Rational>> fields;
      for (const auto& letters : oracle::all_words(n, k + 1)) {
        fields.push_back(oracle::to_field(oracle::closed_form_divfree(letters), n));
      }
      const std::int64_t r = rank(coordinate_matrix(fields));
      const std::int64_t expected = brute_dim_divfree(n, k);
      if (r != expected) {
        return fail(msg, "rank mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k) +
                             ": " + std::to_string(r) + " != " + std::to_string(expected));
      }
      // Small cases double-checked against dense elimination.
      if (k <= 2) {
        std::map<std::pair<std::vector<std::int32_t>, std::int32_t>, std::int64_t> cols;
        for (const auto& f : fields) {
          for (const auto& [key, c] : f.terms())
            cols.emplace(std::make_pair(key.word.letters, key.dir), 0);
        }
        std::int64_t next = 0;
        for (auto& [key, id] : cols) id = next++;
        std::vector<std::vector<Rational>> dense(
            fields.size(), std::vector<Rational>(static_cast<std::size_t>(next), Rational(0)));
        for (std::size_t row = 0; row < fields.size(); ++row) {
          for (const auto& [key, c] : fields[row].terms()) {
            dense[row][static_cast<std::size_t>(
                cols.at(std::make_pair(key.word.letters, key.dir)))] = c;
          }
        }
        if (oracle::gauss_rank(dense) != r)
          return fail(msg, "dense elimination disagrees at k=" + std::to_string(k));
      }
    }
  }
  for (const Spot& s : spots) {
    std::vector<VectorField<Rational>> fields;
    for (const auto& letters : oracle::all_words(s.n, s.k + 1)) {
      fields.push_back(oracle::to_field(oracle::closed_form_divfree(letters), s.n));
    }
    if (rank(coordinate_matrix(fields)) != s.dim) {
      return fail(msg, "spot value failed at n=" + std::to_string(s.n) +
                           " k=" + std::to_string(s.k));
    }
  }
  return true;
}

// 2. Closed-form necklace counts against brute-force orbit counting.
bool criterion_burnside(std::string& msg) {
  for (std::int32_t n = 1; n <= 4; ++n) {
    for (std::int64_t k = 1; k <= 10; ++k) {
      const BigInt closed = necklace_count(n, k);
      const std::int64_t brute = oracle::brute_necklaces(n, k);
      if (closed != brute) {
        return fail(msg, "necklace count mismatch at n=" + std::to_string(n) +
                             " k=" + std::to_string(k));
      }
    }
  }
  return true;
}

// 3. The gradient basis is exactly orthogonal with squared norms m^2 p.
bool criterion_orthogonal_basis(std::string& msg) {
  for (std::int32_t n = 2; n <= 3; ++n) {
    for (std::int64_t k = 0; k <= 5; ++k) {
      const auto basis = cyclic_gradient_basis(n, k);
      if (static_cast<std::int64_t>(basis.size()) != oracle::brute_necklaces(n, k + 1))
        return fail(msg, "element count is not the necklace count at n=" + std::to_string(n) +
                             " k=" + std::to_string(k));

      std::vector<VectorField<Rational>> vecs;
      for (const auto& el : basis) {
        // The vector must match the independent reconstruction...
        if (oracle::to_map(el.vector) != oracle::delta_field(el.orbit.representative.letters))
          return fail(msg, "basis vector differs from the reference gradient");
        // ...and the declared norm must match the orbit data recomputed
        // from scratch.
        const std::int64_t p = oracle::period(el.orbit.representative.letters);
        const std::int64_t m = el.orbit.representative.length() / p;
        if (el.squared_norm != BigInt(m) * m * p)
          return fail(msg, "declared squared norm is not m^2 p");
        vecs.push_back(el.vector);
      }

      const auto g = gram(vecs);
      for (std::int64_t i = 0; i < g.rows; ++i) {
        for (std::int64_t j = 0; j < g.cols; ++j) {
          const Rational expected =
              i == j ? Rational(basis[static_cast<std::size_t>(i)].squared_norm) : Rational(0);
          if (g.at(i, j) != expected)
            return fail(msg, "gram matrix is not the expected diagonal at n=" +
                                 std::to_string(n) + " k=" + std::to_string(k));
        }
      }
    }
  }
  return true;
}

// 4. Closed-form projection equals the orthogonal-expansion oracle on 100
//    seeded random fields per (n, k), plus the projection identities.
bool criterion_projection(std::string& msg) {
  for (std::int32_t n = 2; n <= 3; ++n) {
    for (std::int64_t k = 0; k <= 5; ++k) {
      std::mt19937_64 rng(0xACCE57ull * static_cast<std::uint64_t>(n) +
                          static_cast<std::uint64_t>(k));
      VectorField<Rational> previous(n);
      for (int trial = 0; trial < 100; ++trial) {
        const VectorField<Rational> v = random_homogeneous_field(rng, n, k);
        const VectorField<Rational> p = project_cyclic(v);
        const VectorField<Rational> l = leray(v);

        if (oracle::to_map(p) != oracle::onb_project(oracle::to_map(v), n, k))
          return fail(msg, "projection differs from the expansion oracle at n=" +
                               std::to_string(n) + " k=" + std::to_string(k));
        if (p + l != v) return fail(msg, "projections do not sum to the identity");
        if (project_cyclic(p) != p || leray(l) != l)
          return fail(msg, "projections are not idempotent");
        if (!project_cyclic(l).is_zero() || !leray(p).is_zero())
          return fail(msg, "projections do not annihilate each other");
        if (inner(p, previous) != inner(v, project_cyclic(previous)) ||
            inner(l, previous) != inner(v, leray(previous)))
          return fail(msg, "projections are not self-adjoint");
        previous = v;
      }
    }
  }
  return true;
}

// 5. Kernels of theta_l_star and I - R coincide degree by degree with
//    dimension equal to the necklace count.
bool criterion_kernel(std::string& msg) {
  for (std::int32_t n = 1; n <= 3; ++n) {
    for (std::int64_t k = 1; k <= 5; ++k) {
      const CheckReport rep = check_kernel_lemma(n, k);
      if (!rep.passed)
        return fail(msg, "kernel check failed at n=" + std::to_string(n) +
                             " k=" + std::to_string(k));
      const std::int64_t dim = rep.details.at("kernel_dim_star").get<std::int64_t>();
      if (dim != oracle::brute_necklaces(n, k))
        return fail(msg, "kernel dimension is not the necklace count");
    }
  }
  if (check_kernel_lemma(2, 2).details.at("kernel_dim_star").get<std::int64_t>() != 3)
    return fail(msg, "kernel dimension spot value (2,2) != 3");
  if (check_kernel_lemma(2, 4).details.at("kernel_dim_star").get<std::int64_t>() != 6)
    return fail(msg, "kernel dimension spot value (2,4) != 6");
  return true;
}

// 6. Gradients and divergence-free fields are orthogonal complements.
bool criterion_direct_sum(std::string& msg) {
  for (std::int32_t n = 2; n <= 3; ++n) {
    for (std::int64_t k = 0; k <= 6; ++k) {
      const CheckReport rep = check_direct_sum(n, k);
      if (!rep.passed)
        return fail(msg, "direct sum failed at n=" + std::to_string(n) +
                             " k=" + std::to_string(k));
    }
  }
  const CheckReport spot = check_direct_sum(3, 2);
  const auto grad = spot.details.at("gradient_count").get<std::int64_t>();
  const auto div = spot.details.at("divfree_count").get<std::int64_t>();
  if (grad != 11 || div != 16 || grad + div != 27)
    return fail(msg, "expected 11 + 16 = 27 at (n, k) = (3, 2)");
  return true;
}

// 7. The rotation-difference basis is independent, has the dimension of the
//    divergence-free space, and matches the three-term closed form.
bool criterion_divfree_basis(std::string& msg) {
  for (std::int32_t n = 2; n <= 3; ++n) {
    for (std::int64_t k = 0; k <= 5; ++k) {
      std::vector<Word> sources;
      for_each_orbit_rep(n, k + 1, [&](const Word& rep) {
        Word v = rep;
        const std::int64_t p = orbit_of(rep).size;
        for (std::int64_t j = 1; j < p; ++j) {
          v = rotate(v, 1);
          sources.push_back(v);
        }
      });

      const auto basis = divfree_basis(n, k);
      if (basis.size() != sources.size())
        return fail(msg, "cardinality mismatch at n=" + std::to_string(n) +
                             " k=" + std::to_string(k));
      if (static_cast<std::int64_t>(basis.size()) != brute_dim_divfree(n, k))
        return fail(msg, "cardinality is not the divergence-free dimension");
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (oracle::to_map(basis[i]) != oracle::closed_form_divfree(sources[i].letters))
          return fail(msg, "element differs from the three-term closed form");
      }
      if (!basis.empty() &&
          rank(coordinate_matrix(basis)) != static_cast<std::int64_t>(basis.size()))
        return fail(msg, "family is linearly dependent at n=" + std::to_string(n) +
                             " k=" + std::to_string(k));
    }
  }
  return true;
}

// 8. The lex-minimal word family is too small in degree 2 over 2 letters.
bool criterion_omega(std::string& msg) {
  const auto words = omega_set(2, 2);
  std::set<std::vector<std::int32_t>> got;
  for (const Word& w : words) got.insert(w.letters);
  const std::set<std::vector<std::int32_t>> expected = {{1, 1, 2}, {1, 2, 2}, {2, 1, 2}};
  if (got != expected) return fail(msg, "omega_set(2, 2) is not {112, 122, 212}");

  // Rank of the induced fields, by dense elimination over the rationals.
  std::map<std::pair<std::vector<std::int32_t>, std::int32_t>, std::size_t> cols;
  std::vector<oracle::FieldMap> fields;
  for (const Word& w : words) {
    fields.push_back(oracle::closed_form_divfree(w.letters));
    for (const auto& [key, c] : fields.back()) cols.emplace(key, 0);
  }
  std::size_t next = 0;
  for (auto& [key, id] : cols) id = next++;
  std::vector<std::vector<Rational>> dense(fields.size(),
                                           std::vector<Rational>(next, Rational(0)));
  for (std::size_t r = 0; r < fields.size(); ++r) {
    for (const auto& [key, c] : fields[r]) dense[r][cols.at(key)] = c;
  }
  const std::int64_t r = oracle::gauss_rank(dense);
  const std::int64_t dim = brute_dim_divfree(2, 2);
  if (dim != 4) return fail(msg, "divergence-free dimension at (2, 2) is not 4");
  if (r > 3) return fail(msg, "omega family rank exceeds 3");
  if (r >= dim) return fail(msg, "omega family is unexpectedly complete");
  return true;
}

// 9. The root-of-unity family is a numerical basis fixed by the projection.
bool criterion_zeta(std::string& msg) {
  for (std::int32_t n = 2; n <= 3; ++n) {
    for (std::int64_t k = 1; k <= 4; ++k) {
      const auto basis = zeta_basis(n, k);
      if (static_cast<std::int64_t>(basis.size()) != brute_dim_divfree(n, k))
        return fail(msg, "cardinality mismatch at n=" + std::to_string(n) +
                             " k=" + std::to_string(k));
      if (rank(coordinate_matrix(basis)) != static_cast<std::int64_t>(basis.size()))
        return fail(msg, "numerical rank deficiency at n=" + std::to_string(n) +
                             " k=" + std::to_string(k));
      for (const auto& v : basis) {
        VectorField<Complex> d = leray(v);
        d -= v;
        if (norm(d) > 1e-9 * norm(v)) return fail(msg, "element moved by the projection");
      }
    }
  }

  // Literal value in degree one over two letters.
  const auto small = zeta_basis(2, 1);
  if (small.size() != 1) return fail(msg, "expected a single element at (2, 1)");
  const Complex a = small[0].coefficient(Word(2, {2}), 1);
  const Complex b = small[0].coefficient(Word(2, {1}), 2);
  if (std::abs(a - Complex(4.0, 0.0)) > 1e-12 || std::abs(b - Complex(-4.0, 0.0)) > 1e-12)
    return fail(msg, "zeta element at (2, 1) is not 4 e_2 (x) f_1 - 4 e_1 (x) f_2");
  return true;
}

// 10. Rotation fields of radial polynomials have no gradient component.
bool criterion_radial(std::string& msg) {
  for (std::int64_t m = 1; m <= 3; ++m) {
    if (!check_radial(m).passed) return fail(msg, "radial check failed at m=" + std::to_string(m));
  }

  // Rebuild the m = 1 field from scratch and push it through the expansion
  // oracle as well.
  NcPolynomial f(2, Flavor::Semicircular);
  f.add_term(Word(2, {1, 1}), Rational(1));
  f.add_term(Word(2, {2, 2}), Rational(1));
  const auto grad = cyclic_gradient(f);
  const FockVector<Rational> g1 = evaluate_vacuum(grad[0]);
  const FockVector<Rational> g2 = evaluate_vacuum(grad[1]);
  VectorField<Rational> v(2);
  for (const auto& [w, c] : g2.terms()) v.add_term(w, 1, c);
  for (const auto& [w, c] : g1.terms()) v.add_term(w, 2, -c);

  VectorField<Rational> expected(2);
  expected.add_term(Word(2, {2}), 1, Rational(2));
  expected.add_term(Word(2, {1}), 2, Rational(-2));
  if (v != expected) return fail(msg, "m = 1 field is not 2 e_2 (x) f_1 - 2 e_1 (x) f_2");
  if (!oracle::onb_project(oracle::to_map(v), 2, 1).empty())
    return fail(msg, "expansion oracle found a gradient component");
  if (!project_cyclic(v).is_zero()) return fail(msg, "projection of the m = 1 field is nonzero");
  return true;
}

// 11. Integration by parts over 200 seeded random polynomials.
bool criterion_stein(std::string& msg) {
  const CheckReport rep = check_stein(200, 6, 0);
  if (!rep.passed) return fail(msg, "random-polynomial run failed");
  if (rep.details.at("trials_run").get<std::int64_t>() != 200)
    return fail(msg, "expected 200 trials");

  // Named examples, computed on the spot.
  const auto p1 = NcPolynomial::monomial(2, Flavor::Semicircular, Word(2, {2, 1, 1}));
  if (trace(multiply(NcPolynomial::generator(2, Flavor::Semicircular, 2), p1)) != 1 ||
      trace_tensor(difference_quotient(2, p1)) != 1)
    return fail(msg, "example x_2 x_1 x_1 does not integrate to 1");
  const auto p2 = NcPolynomial::monomial(2, Flavor::Semicircular, Word(2, {1, 2}));
  if (trace(multiply(NcPolynomial::generator(2, Flavor::Semicircular, 1), p2)) != 0 ||
      trace_tensor(difference_quotient(1, p2)) != 0)
    return fail(msg, "example x_1 x_2 does not vanish");
  return true;
}

// 12. Chebyshev products of semicircular generators hit single basis words.
bool criterion_chebyshev(std::string& msg) {
  for (std::int32_t n = 1; n <= 3; ++n) {
    for (std::int64_t len = 0; len <= 8; ++len) {
      bool ok = true;
      for_each_word(n, len, [&](const Word& w) {
        if (!ok) return;
        NcPolynomial p = NcPolynomial::constant(n, Flavor::Semicircular, Rational(1));
        std::size_t pos = 0;
        while (pos < w.letters.size()) {
          std::size_t end = pos;
          while (end < w.letters.size() && w.letters[end] == w.letters[pos]) ++end;
          p = multiply(p, chebyshev_at(static_cast<std::int64_t>(end - pos), w.letters[pos], n,
                                       Flavor::Semicircular));
          pos = end;
        }
        if (evaluate_vacuum(p) != FockVector<Rational>::unit(w)) ok = false;
      });
      if (!ok)
        return fail(msg, "mismatch at n=" + std::to_string(n) + " length=" + std::to_string(len));
    }
  }
  return true;
}

// 13. Gradient spans agree between the two evaluation flavors.
bool criterion_range_equality(std::string& msg) {
  for (std::int64_t d = 1; d <= 4; ++d) {
    const CheckReport rep = check_range_equality(2, d);
    if (!rep.passed) return fail(msg, "range equality failed at d=" + std::to_string(d));
    if (rep.details.at("rank_semicircular") != rep.details.at("rank_union"))
      return fail(msg, "span ranks diverge at d=" + std::to_string(d));
  }
  return true;
}

// 14. The installed CLI behaves end to end.
bool criterion_cli(std::string& msg) {
  if (run_cli("verify --all --n 2 --max-degree 4 --seed 0 --out /tmp/fl_accept_verify.json") != 0)
    return fail(msg, "verify subcommand did not exit 0");

  const std::string out_path = "/tmp/fl_accept_dims.csv";
  std::remove(out_path.c_str());
  if (run_cli("dims --n 2 --max-degree 3 --format csv --out " + out_path) != 0)
    return fail(msg, "dims subcommand did not exit 0");
  const std::string produced = read_file(out_path);
  const std::string golden = read_file(g_golden_dims);
  if (golden.empty()) return fail(msg, "golden fixture missing at " + g_golden_dims);
  if (produced != golden) return fail(msg, "dims CSV differs from the golden fixture");

  // Usage errors must exit 2.
  if (run_cli("verify --n 2 2>/dev/null") != 2)
    return fail(msg, "verify without --all or --check should exit 2");

  // Projecting a projection changes nothing, end to end.
  const std::string field_path = "/tmp/fl_accept_field.json";
  {
    std::ofstream f(field_path, std::ios::binary);
    f << R"({"n": 2, "terms": [{"word": [1, 2], "dir": 1, "num": "2", "den": "3"},)"
      << R"( {"word": [2], "dir": 2, "num": "-1", "den": "1"}]})";
  }
  const std::string once = "/tmp/fl_accept_proj1.json";
  const std::string twice = "/tmp/fl_accept_proj2.json";
  if (run_cli("project --in " + field_path + " --kind leray --out " + once) != 0)
    return fail(msg, "first projection did not exit 0");
  if (run_cli("project --in " + once + " --kind leray --out " + twice) != 0)
    return fail(msg, "second projection did not exit 0");
  if (read_file(once) != read_file(twice))
    return fail(msg, "re-projected output differs from the projection");

  // Identical arguments and seed must give byte-identical output.
  const std::string rep1 = "/tmp/fl_accept_rep1.json";
  const std::string rep2 = "/tmp/fl_accept_rep2.json";
  if (run_cli("verify --all --n 2 --max-degree 3 --seed 5 --out " + rep1) != 0 ||
      run_cli("verify --all --n 2 --max-degree 3 --seed 5 --out " + rep2) != 0)
    return fail(msg, "repeat verify runs did not exit 0");
  if (read_file(rep1) != read_file(rep2) || read_file(rep1).empty())
    return fail(msg, "verify output is not deterministic across runs");
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <cli-binary> <golden-dims-csv>\n";
    return 2;
  }
  g_cli_path = argv[1];
  g_golden_dims = argv[2];

  const std::vector<Criterion> criteria = {
      {1, "dimension formula and rotation-difference span ranks", 60.0, criterion_dimensions},
      {2, "necklace counts against brute-force orbit counting", 30.0, criterion_burnside},
      {3, "orthogonal gradient basis with squared norms m^2 p", 60.0, criterion_orthogonal_basis},
      {4, "closed-form projection equals the expansion oracle", 0.0, criterion_projection},
      {5, "kernel equality of theta_l_star and I - R", 0.0, criterion_kernel},
      {6, "orthogonal direct sum of gradients and divergence-free fields", 0.0,
       criterion_direct_sum},
      {7, "three-term closed form and independence of the basis", 0.0, criterion_divfree_basis},
      {8, "deficiency of the lex-minimal word family at (2, 2)", 0.0, criterion_omega},
      {9, "root-of-unity basis rank and projection invariance", 0.0, criterion_zeta},
      {10, "radial rotation fields project to zero", 10.0, criterion_radial},
      {11, "integration by parts on 200 random polynomials", 30.0, criterion_stein},
      {12, "Chebyshev products reproduce basis words to degree 8", 0.0, criterion_chebyshev},
      {13, "gradient spans agree across evaluation flavors", 0.0, criterion_range_equality},
      {14, "command line end to end against golden output", 0.0, criterion_cli},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string msg;
    bool ok = false;
    try {
      ok = c.run(msg);
    } catch (const std::exception& e) {
      msg = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.time_limit_s > 0.0 && elapsed > c.time_limit_s) {
      ok = false;
      msg = "exceeded time limit of " + std::to_string(c.time_limit_s) + " s";
    }
    std::printf("criterion %02d: %s (%.2f s) %s%s\n", c.number, ok ? "PASS" : "FAIL", elapsed,
                c.label.c_str(), msg.empty() ? "" : (" -- " + msg).c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }

  if (failures > 0) {
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}

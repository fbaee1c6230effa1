#include "freeleray/verify.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <thread>
#include <utility>

#include "freeleray/bases.hpp"
#include "freeleray/fock.hpp"
#include "freeleray/linalg.hpp"
#include "freeleray/ncpoly.hpp"
#include "freeleray/projections.hpp"
#include "freeleray/words.hpp"

namespace fleray {

namespace {

// Explicit modulo reduction keeps sequences identical across standard
// library implementations.
std::int64_t rand_below(std::mt19937_64& rng, std::int64_t m) {
  return static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(m));
}

Word random_word(std::mt19937_64& rng, std::int32_t n, std::int64_t length) {
  std::vector<std::int32_t> letters(static_cast<std::size_t>(length));
  for (auto& c : letters) c = static_cast<std::int32_t>(1 + rand_below(rng, n));
  return Word(n, std::move(letters));
}

VectorField<Rational> random_field(std::mt19937_64& rng, std::int32_t n, std::int64_t max_deg) {
  VectorField<Rational> out(n);
  const std::int64_t terms = 1 + rand_below(rng, 6);
  for (std::int64_t t = 0; t < terms; ++t) {
    const std::int64_t len = rand_below(rng, max_deg + 1);
    const std::int32_t dir = static_cast<std::int32_t>(1 + rand_below(rng, n));
    const Rational c(rand_below(rng, 19) - 9);
    out.add_term(random_word(rng, n, len), dir, c);
  }
  return out;
}

std::int64_t to_i64(const BigInt& v) { return v.convert_to<std::int64_t>(); }

// The fields theta_l_star((I - R)e_w) for every word w of length k+1.
std::vector<VectorField<Rational>> rotation_difference_fields(std::int32_t n, std::int64_t k) {
  std::vector<VectorField<Rational>> out;
  for_each_word(n, k + 1, [&](const Word& w) {
    FockVector<Rational> x = FockVector<Rational>::unit(w);
    x -= FockVector<Rational>::unit(rotate(w, 1));
    out.push_back(theta_l_star(x));
  });
  return out;
}

}  // namespace

CheckReport check_kernel_lemma(std::int32_t n, std::int64_t k) {
  CheckReport rep;
  rep.name = "kernel_lemma";
  rep.params = {{"n", n}, {"k", k}};
  rep.mode = "exact";

  std::vector<Word> words;
  for_each_word(n, k, [&](const Word& w) { words.push_back(w); });
  const std::int64_t dim = static_cast<std::int64_t>(words.size());

  std::vector<VectorField<Rational>> star_images;
  star_images.reserve(words.size());
  for (const Word& w : words) star_images.push_back(theta_l_star(FockVector<Rational>::unit(w)));

  // Columns are input words; rows are output coordinates.
  FieldIndexer<Rational> indexer(star_images);
  Matrix<Rational> a(indexer.size(), dim);
  for (std::int64_t j = 0; j < dim; ++j) {
    for (const auto& [key, c] : star_images[static_cast<std::size_t>(j)].terms())
      a.add(indexer.id(key), j, c);
  }

  std::map<Word, std::int64_t, WordLess> word_id;
  for (std::int64_t j = 0; j < dim; ++j) word_id.emplace(words[static_cast<std::size_t>(j)], j);
  Matrix<Rational> b(dim, dim);
  for (std::int64_t j = 0; j < dim; ++j) {
    const Word& w = words[static_cast<std::size_t>(j)];
    b.add(word_id.at(w), j, Rational(1));
    b.add(word_id.at(rotate(w, 1)), j, Rational(-1));
  }

  const auto null_star = nullspace(a);
  const auto null_rot = nullspace(b);

  auto assemble = [&](const std::vector<Rational>& coords) {
    FockVector<Rational> xi(n);
    for (std::int64_t j = 0; j < dim; ++j) {
      xi.add_term(words[static_cast<std::size_t>(j)], coords[static_cast<std::size_t>(j)]);
    }
    return xi;
  };

  bool contained = true;
  for (const auto& coords : null_star) {
    FockVector<Rational> xi = assemble(coords);
    FockVector<Rational> d = xi;
    d -= cyclic_shift(xi);
    if (!d.is_zero()) contained = false;
  }
  for (const auto& coords : null_rot) {
    if (!theta_l_star(assemble(coords)).is_zero()) contained = false;
  }

  const BigInt expected = necklace_count(n, k);
  const bool dims_ok = BigInt(null_star.size()) == expected && BigInt(null_rot.size()) == expected;
  rep.passed = contained && dims_ok;
  rep.details = {{"kernel_dim_star", null_star.size()},
                 {"kernel_dim_rotation", null_rot.size()},
                 {"expected", to_i64(expected)},
                 {"mutual_containment", contained}};
  return rep;
}

CheckReport check_range_equality(std::int32_t n, std::int64_t d) {
  CheckReport rep;
  rep.name = "range_equality";
  rep.params = {{"n", n}, {"d", d}};
  rep.mode = "exact";

  std::vector<VectorField<Rational>> both;
  std::vector<VectorField<Rational>> semi;
  std::vector<VectorField<Rational>> left;
  for (std::int64_t len = 1; len <= d; ++len) {
    for_each_word(n, len, [&](const Word& w) {
      semi.push_back(gradient_field_on_vacuum(NcPolynomial::monomial(n, Flavor::Semicircular, w)));
      left.push_back(gradient_field_on_vacuum(NcPolynomial::monomial(n, Flavor::LeftCreation, w)));
      both.push_back(semi.back());
      both.push_back(left.back());
    });
  }

  FieldIndexer<Rational> indexer(both);
  const std::int64_t rank_semi = rank(indexer.matrix_of(semi));
  const std::int64_t rank_left = rank(indexer.matrix_of(left));
  const std::int64_t rank_both = rank(indexer.matrix_of(both));
  rep.passed = rank_semi == rank_left && rank_left == rank_both;
  rep.details = {{"rank_semicircular", rank_semi},
                 {"rank_left_creation", rank_left},
                 {"rank_union", rank_both}};
  return rep;
}

CheckReport check_direct_sum(std::int32_t n, std::int64_t k) {
  CheckReport rep;
  rep.name = "direct_sum";
  rep.params = {{"n", n}, {"k", k}};
  rep.mode = "exact";

  const auto grad = cyclic_gradient_basis(n, k);
  const auto div = divfree_basis(n, k);

  bool orthogonal = true;
  for (const auto& g : grad) {
    for (const auto& x : div) {
      if (inner(g.vector, x) != 0) orthogonal = false;
    }
  }

  std::vector<VectorField<Rational>> combined;
  combined.reserve(grad.size() + div.size());
  for (const auto& g : grad) combined.push_back(g.vector);
  for (const auto& x : div) combined.push_back(x);
  const std::int64_t r = rank(coordinate_matrix(combined));

  const BigInt ambient = dim_report(n, k).ambient;
  rep.passed = orthogonal && BigInt(r) == ambient &&
               BigInt(grad.size()) + BigInt(div.size()) == ambient;
  rep.details = {{"gradient_count", grad.size()},
                 {"divfree_count", div.size()},
                 {"combined_rank", r},
                 {"ambient", to_i64(ambient)},
                 {"orthogonal", orthogonal}};
  return rep;
}

CheckReport check_radial(std::int64_t m) {
  CheckReport rep;
  rep.name = "radial";
  rep.params = {{"m", m}};
  rep.mode = "exact";

  const std::int32_t n = 2;
  NcPolynomial g(n, Flavor::Semicircular);
  g.add_term(Word(n, {1, 1}), Rational(1));
  g.add_term(Word(n, {2, 2}), Rational(1));
  NcPolynomial f = NcPolynomial::constant(n, Flavor::Semicircular, Rational(1));
  for (std::int64_t i = 0; i < m; ++i) f = multiply(f, g);

  const auto grad = cyclic_gradient(f);
  VectorField<Rational> v(n);
  const FockVector<Rational> second = evaluate_vacuum(grad[1]);
  const FockVector<Rational> first = evaluate_vacuum(grad[0]);
  for (const auto& [w, c] : second.terms()) v.add_term(w, 1, c);
  for (const auto& [w, c] : first.terms()) v.add_term(w, 2, -c);

  const VectorField<Rational> p = project_cyclic(v);
  rep.passed = p.is_zero();
  rep.details = {{"field_terms", v.term_count()}, {"projection_terms", p.term_count()}};
  return rep;
}

CheckReport check_stein(std::int64_t trials, std::int64_t degree_cap, std::uint64_t seed) {
  CheckReport rep;
  rep.name = "stein";
  rep.params = {{"trials", trials}, {"degree_cap", degree_cap}};
  rep.mode = "exact";
  rep.seed = seed;

  const std::int32_t n = 2;
  std::mt19937_64 rng(seed);
  bool ok = true;
  nlohmann::ordered_json witness;
  for (std::int64_t t = 0; t < trials && ok; ++t) {
    NcPolynomial p(n, Flavor::Semicircular);
    const std::int64_t terms = 1 + rand_below(rng, 4);
    for (std::int64_t s = 0; s < terms; ++s) {
      const std::int64_t len = rand_below(rng, degree_cap + 1);
      p.add_term(random_word(rng, n, len), Rational(rand_below(rng, 7) - 3));
    }
    for (std::int32_t i = 1; i <= n; ++i) {
      const Rational lhs = trace(multiply(NcPolynomial::generator(n, Flavor::Semicircular, i), p));
      const Rational rhs = trace_tensor(difference_quotient(i, p));
      if (lhs != rhs) {
        ok = false;
        witness = {{"trial", t}, {"generator", i}};
        break;
      }
    }
  }
  rep.passed = ok;
  rep.details = {{"trials_run", trials}};
  if (!ok) rep.details["witness"] = witness;
  return rep;
}

CheckReport check_burnside(std::int32_t n, std::int64_t kmax) {
  CheckReport rep;
  rep.name = "burnside";
  rep.params = {{"n", n}, {"kmax", kmax}};
  rep.mode = "exact";

  bool ok = true;
  nlohmann::ordered_json counts = nlohmann::ordered_json::array();
  for (std::int64_t k = 1; k <= kmax && ok; ++k) {
    std::int64_t brute = 0;
    for_each_word(n, k, [&](const Word& w) {
      // w counts iff no rotation is strictly smaller: the orbit minimum.
      const auto& L = w.letters;
      for (std::int64_t g = 1; g < k; ++g) {
        for (std::int64_t i = 0; i < k; ++i) {
          const std::int32_t a = L[static_cast<std::size_t>((i + k - g) % k)];
          const std::int32_t b = L[static_cast<std::size_t>(i)];
          if (a != b) {
            if (a < b) return;
            break;
          }
        }
      }
      ++brute;
    });
    if (BigInt(brute) != necklace_count(n, k)) ok = false;
    counts.push_back(brute);
  }
  rep.passed = ok;
  rep.details = {{"orbit_counts", counts}};
  return rep;
}

CheckReport check_dimension(std::int32_t n, std::int64_t k) {
  CheckReport rep;
  rep.name = "dimension";
  rep.params = {{"n", n}, {"k", k}};
  rep.mode = "exact";

  const DimensionReport d = dim_report(n, k);
  bool ok = d.dim_cyclic + d.dim_divfree == d.ambient;

  BigInt acc(0);
  for (std::int64_t j = 0; j <= k; ++j) acc += dim_report(n, j).dim_divfree;
  ok = ok && acc == d.dim_vect_leq;

  const std::int64_t r = rank(coordinate_matrix(rotation_difference_fields(n, k)));
  ok = ok && BigInt(r) == d.dim_divfree;

  rep.passed = ok;
  rep.details = {{"ambient", to_i64(d.ambient)},
                 {"necklaces", to_i64(d.necklaces)},
                 {"dim_divfree", to_i64(d.dim_divfree)},
                 {"dim_vect_leq", to_i64(d.dim_vect_leq)},
                 {"span_rank", r}};
  return rep;
}

CheckReport check_orthogonal_basis(std::int32_t n, std::int64_t k) {
  CheckReport rep;
  rep.name = "orthogonal_basis";
  rep.params = {{"n", n}, {"k", k}};
  rep.mode = "exact";

  const auto basis = cyclic_gradient_basis(n, k);
  bool ok = BigInt(basis.size()) == necklace_count(n, k + 1);

  std::vector<VectorField<Rational>> fields;
  fields.reserve(basis.size());
  for (const auto& b : basis) fields.push_back(b.vector);
  const Matrix<Rational> g = gram(fields);
  for (std::size_t i = 0; i < basis.size() && ok; ++i) {
    const auto& row = g.entries[i];
    if (row.size() != 1) ok = false;
    if (g.at(static_cast<std::int64_t>(i), static_cast<std::int64_t>(i)) !=
        Rational(basis[i].squared_norm))
      ok = false;
  }

  rep.passed = ok;
  rep.details = {{"count", basis.size()},
                 {"expected_count", to_i64(necklace_count(n, k + 1))}};
  return rep;
}

CheckReport check_projection(std::int32_t n, std::int64_t k, std::int64_t trials,
                             std::uint64_t seed) {
  CheckReport rep;
  rep.name = "projection";
  rep.params = {{"n", n}, {"k", k}, {"trials", trials}};
  rep.mode = "exact";
  rep.seed = seed;

  std::mt19937_64 rng(seed);
  bool ok = true;
  for (std::int64_t t = 0; t < trials && ok; ++t) {
    const VectorField<Rational> v = random_field(rng, n, k);
    const VectorField<Rational> w = random_field(rng, n, k);
    const VectorField<Rational> p = project_cyclic(v);
    const VectorField<Rational> l = leray(v);
    ok = ok && (p + l == v);
    ok = ok && (project_cyclic(p) == p);
    ok = ok && (leray(l) == l);
    ok = ok && project_cyclic(l).is_zero();
    ok = ok && leray(p).is_zero();
    ok = ok && (inner(p, w) == inner(v, project_cyclic(w)));
  }
  rep.passed = ok;
  rep.details = {{"trials_run", trials}};
  return rep;
}

CheckReport check_divfree_basis(std::int32_t n, std::int64_t k) {
  CheckReport rep;
  rep.name = "divfree_basis";
  rep.params = {{"n", n}, {"k", k}};
  rep.mode = "exact";

  const auto basis = divfree_basis(n, k);
  const BigInt expected = dim_report(n, k).dim_divfree;
  bool ok = BigInt(basis.size()) == expected;
  const std::int64_t r = basis.empty() ? 0 : rank(coordinate_matrix(basis));
  ok = ok && BigInt(r) == expected;
  for (const auto& b : basis) {
    if (!project_cyclic(b).is_zero() || !(leray(b) == b)) {
      ok = false;
      break;
    }
  }
  rep.passed = ok;
  rep.details = {{"count", basis.size()}, {"rank", r}, {"expected", to_i64(expected)}};
  return rep;
}

CheckReport check_omega(std::int32_t n, std::int64_t k) {
  CheckReport rep;
  rep.name = "omega";
  rep.params = {{"n", n}, {"k", k}};
  rep.mode = "exact";

  const auto om = omega_set(n, k);
  BigInt ambient(1);
  for (std::int64_t i = 0; i <= k; ++i) ambient *= n;
  const BigInt expected_card = (ambient - n) / 2;
  bool ok = BigInt(om.size()) == expected_card;

  std::vector<VectorField<Rational>> fields;
  fields.reserve(om.size());
  for (const Word& w : om) {
    FockVector<Rational> x = FockVector<Rational>::unit(w);
    x -= FockVector<Rational>::unit(rotate(w, 1));
    fields.push_back(theta_l_star(x));
  }
  const std::int64_t r = fields.empty() ? 0 : rank(coordinate_matrix(fields));
  const BigInt dim = dim_report(n, k).dim_divfree;
  ok = ok && BigInt(r) <= dim;

  rep.passed = ok;
  rep.details = {{"cardinality", om.size()},
                 {"rank", r},
                 {"dim_divfree", to_i64(dim)},
                 {"deficient", BigInt(r) < dim}};
  return rep;
}

CheckReport check_zeta(std::int32_t n, std::int64_t k) {
  CheckReport rep;
  rep.name = "zeta";
  rep.params = {{"n", n}, {"k", k}};
  rep.mode = "float";

  constexpr double kTol = 1e-9;
  const auto basis = zeta_basis(n, k);
  const std::int64_t dim = to_i64(dim_report(n, k).dim_divfree);
  bool ok = static_cast<std::int64_t>(basis.size()) == dim;

  const std::int64_t r = basis.empty() ? 0 : rank(coordinate_matrix(basis));
  ok = ok && r == dim;

  double worst = 0.0;
  for (const auto& v : basis) {
    VectorField<Complex> d = leray(v);
    d -= v;
    const double rel = norm(d) / norm(v);
    if (rel > worst) worst = rel;
    if (rel > kTol) ok = false;
  }
  rep.passed = ok;
  rep.details = {{"count", basis.size()},
                 {"rank", r},
                 {"dim_divfree", dim},
                 {"max_leray_residual", worst}};
  return rep;
}

CheckReport check_chebyshev(std::int32_t n, std::int64_t degree_cap) {
  CheckReport rep;
  rep.name = "chebyshev";
  rep.params = {{"n", n}, {"degree_cap", degree_cap}};
  rep.mode = "exact";

  bool ok = true;
  std::int64_t verified = 0;
  for (std::int64_t len = 0; len <= degree_cap && ok; ++len) {
    for_each_word(n, len, [&](const Word& w) {
      if (!ok) return;
      // Run-length split: w = i_1^{k_1} ... i_p^{k_p} with i_j != i_{j+1}.
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
      ++verified;
    });
  }
  rep.passed = ok;
  rep.details = {{"words_verified", verified}};
  return rep;
}

std::vector<std::string> check_names() {
  return {"burnside",    "dimension", "orthogonal_basis", "projection",
          "kernel_lemma", "direct_sum", "divfree_basis",   "omega",
          "zeta",        "radial",    "stein",            "range_equality",
          "chebyshev"};
}

int thread_budget() {
  long v = 0;
  if (const char* env = std::getenv("FOCK_LERAY_THREADS"); env && *env) {
    v = std::strtol(env, nullptr, 10);
  }
  if (v <= 0) v = static_cast<long>(std::thread::hardware_concurrency());
  if (v < 1) v = 1;
  return static_cast<int>(v);
}

namespace {

using Job = std::function<CheckReport()>;

std::vector<CheckReport> run_jobs(const std::vector<Job>& jobs) {
  std::vector<CheckReport> out(jobs.size());
  auto run_one = [&](std::size_t i) {
    try {
      out[i] = jobs[i]();
    } catch (const std::exception& e) {
      out[i].name = "internal";
      out[i].passed = false;
      out[i].mode = "exact";
      out[i].details = {{"error", e.what()}};
    }
  };

  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(thread_budget()), jobs.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) run_one(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1)) run_one(i);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

std::vector<Job> plan(std::int32_t n, std::int64_t max_degree, std::uint64_t seed,
                      const std::optional<std::string>& only) {
  std::vector<Job> jobs;
  auto want = [&](const char* name) { return !only || *only == name; };

  if (want("burnside")) {
    jobs.push_back([=] { return check_burnside(n, max_degree + 1); });
  }
  if (want("dimension")) {
    for (std::int64_t k = 0; k <= max_degree; ++k)
      jobs.push_back([=] { return check_dimension(n, k); });
  }
  if (want("orthogonal_basis")) {
    for (std::int64_t k = 0; k <= max_degree; ++k)
      jobs.push_back([=] { return check_orthogonal_basis(n, k); });
  }
  if (want("projection")) {
    for (std::int64_t k = 0; k <= max_degree; ++k)
      jobs.push_back([=] { return check_projection(n, k, 20, seed + static_cast<std::uint64_t>(k)); });
  }
  if (want("kernel_lemma")) {
    for (std::int64_t k = 1; k <= std::max<std::int64_t>(1, max_degree); ++k)
      jobs.push_back([=] { return check_kernel_lemma(n, k); });
  }
  if (want("direct_sum")) {
    for (std::int64_t k = 0; k <= max_degree; ++k)
      jobs.push_back([=] { return check_direct_sum(n, k); });
  }
  if (want("divfree_basis")) {
    for (std::int64_t k = 0; k <= max_degree; ++k)
      jobs.push_back([=] { return check_divfree_basis(n, k); });
  }
  if (want("omega")) {
    for (std::int64_t k = 0; k <= max_degree; ++k)
      jobs.push_back([=] { return check_omega(n, k); });
  }
  if (want("zeta")) {
    for (std::int64_t k = 1; k <= max_degree; ++k)
      jobs.push_back([=] { return check_zeta(n, k); });
  }
  if (want("radial") && n == 2) {
    for (std::int64_t m = 1; m <= 3; ++m) jobs.push_back([=] { return check_radial(m); });
  }
  if (want("stein") && n == 2) {
    const std::int64_t cap = std::min<std::int64_t>(6, max_degree + 2);
    jobs.push_back([=] { return check_stein(60, cap, seed); });
  }
  if (want("range_equality")) {
    for (std::int64_t d = 1; d <= std::min<std::int64_t>(max_degree, 4); ++d)
      jobs.push_back([=] { return check_range_equality(n, d); });
  }
  if (want("chebyshev")) {
    const std::int64_t cap = std::min<std::int64_t>(6, max_degree + 2);
    jobs.push_back([=] { return check_chebyshev(n, cap); });
  }
  return jobs;
}

}  // namespace

std::vector<CheckReport> run_all(std::int32_t n, std::int64_t max_degree, std::uint64_t seed) {
  return run_jobs(plan(n, max_degree, seed, std::nullopt));
}

std::vector<CheckReport> run_named(const std::string& name, std::int32_t n,
                                   std::int64_t max_degree, std::uint64_t seed) {
  const auto names = check_names();
  bool known = false;
  for (const auto& candidate : names) known = known || candidate == name;
  if (!known) throw std::invalid_argument("unknown check: " + name);
  auto jobs = plan(n, max_degree, seed, name);
  if (jobs.empty())
    throw std::invalid_argument("check " + name + " is not applicable at these parameters");
  return run_jobs(jobs);
}

}  // namespace fleray

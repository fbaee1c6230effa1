#include "freeleray/ncpoly.hpp"

#include <stdexcept>

namespace fleray {

NcPolynomial::NcPolynomial(std::int32_t n, Flavor flavor) : n_(n), flavor_(flavor) {
  if (n < 1) throw std::invalid_argument("alphabet size must be positive");
}

NcPolynomial NcPolynomial::constant(std::int32_t n, Flavor flavor, const Rational& c) {
  NcPolynomial p(n, flavor);
  p.add_term(Word::empty(n), c);
  return p;
}

NcPolynomial NcPolynomial::monomial(std::int32_t n, Flavor flavor, const Word& w,
                                    const Rational& c) {
  if (w.n != n) throw std::invalid_argument("word alphabet mismatch");
  NcPolynomial p(n, flavor);
  p.add_term(w, c);
  return p;
}

NcPolynomial NcPolynomial::generator(std::int32_t n, Flavor flavor, std::int32_t i) {
  return monomial(n, flavor, Word(n, {i}), Rational(1));
}

void NcPolynomial::add_term(const Word& w, const Rational& c) {
  if (w.n != n_) throw std::invalid_argument("word alphabet mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational NcPolynomial::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

NcPolynomial& NcPolynomial::operator+=(const NcPolynomial& o) {
  if (n_ != o.n_ || flavor_ != o.flavor_) throw std::invalid_argument("polynomial mismatch");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NcPolynomial& NcPolynomial::operator-=(const NcPolynomial& o) {
  if (n_ != o.n_ || flavor_ != o.flavor_) throw std::invalid_argument("polynomial mismatch");
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NcPolynomial& NcPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

BiPolynomial::BiPolynomial(std::int32_t n) : n_(n) {
  if (n < 1) throw std::invalid_argument("alphabet size must be positive");
}

BiPolynomial BiPolynomial::tensor(const NcPolynomial& a, const NcPolynomial& b) {
  if (a.alphabet() != b.alphabet()) throw std::invalid_argument("polynomial mismatch");
  BiPolynomial out(a.alphabet());
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms()) out.add_term(u, v, cu * cv);
  return out;
}

void BiPolynomial::add_term(const Word& a, const Word& b, const Rational& c) {
  if (a.n != n_ || b.n != n_) throw std::invalid_argument("word alphabet mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::make_pair(a, b), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BiPolynomial& BiPolynomial::operator+=(const BiPolynomial& o) {
  if (n_ != o.n_) throw std::invalid_argument("polynomial mismatch");
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
  return *this;
}

BiPolynomial& BiPolynomial::operator-=(const BiPolynomial& o) {
  if (n_ != o.n_) throw std::invalid_argument("polynomial mismatch");
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
  return *this;
}

NcPolynomial multiply(const NcPolynomial& p, const NcPolynomial& q) {
  if (p.alphabet() != q.alphabet() || p.flavor() != q.flavor())
    throw std::invalid_argument("polynomial mismatch");
  NcPolynomial out(p.alphabet(), p.flavor());
  for (const auto& [u, cu] : p.terms())
    for (const auto& [v, cv] : q.terms()) out.add_term(concat(u, v), cu * cv);
  return out;
}

BiPolynomial multiply(const BiPolynomial& p, const BiPolynomial& q) {
  if (p.alphabet() != q.alphabet()) throw std::invalid_argument("polynomial mismatch");
  BiPolynomial out(p.alphabet());
  for (const auto& [uk, cu] : p.terms())
    for (const auto& [vk, cv] : q.terms())
      out.add_term(concat(uk.first, vk.first), concat(uk.second, vk.second), cu * cv);
  return out;
}

std::vector<NcPolynomial> cyclic_gradient(const NcPolynomial& p) {
  const std::int32_t n = p.alphabet();
  std::vector<NcPolynomial> grad(static_cast<std::size_t>(n), NcPolynomial(n, p.flavor()));
  for (const auto& [w, c] : p.terms()) {
    const std::int64_t k = w.length();
    for (std::int64_t j = 0; j < k; ++j) {
      // Remainder after removing position j, read cyclically from j + 1.
      std::vector<std::int32_t> rest;
      rest.reserve(static_cast<std::size_t>(k - 1));
      for (std::int64_t s = 1; s < k; ++s)
        rest.push_back(w.letters[static_cast<std::size_t>((j + s) % k)]);
      grad[static_cast<std::size_t>(w.letters[static_cast<std::size_t>(j)] - 1)].add_term(
          Word(n, std::move(rest)), c);
    }
  }
  return grad;
}

BiPolynomial difference_quotient(std::int32_t i, const NcPolynomial& p) {
  if (i < 1 || i > p.alphabet()) throw std::invalid_argument("direction out of range");
  BiPolynomial out(p.alphabet());
  for (const auto& [w, c] : p.terms()) {
    for (std::size_t j = 0; j < w.letters.size(); ++j) {
      if (w.letters[j] != i) continue;
      const auto at = w.letters.begin() + static_cast<std::ptrdiff_t>(j);
      Word left(w.n, std::vector<std::int32_t>(w.letters.begin(), at));
      Word right(w.n, std::vector<std::int32_t>(at + 1, w.letters.end()));
      out.add_term(left, right, c);
    }
  }
  return out;
}

FockVector<Rational> evaluate_vacuum(const NcPolynomial& p) {
  const std::int32_t n = p.alphabet();
  FockVector<Rational> out(n);
  if (p.flavor() == Flavor::LeftCreation) {
    // A product of left creations sends the vacuum to the basis vector of
    // the same word.
    for (const auto& [w, c] : p.terms()) out.add_term(w, c);
    return out;
  }
  for (const auto& [w, c] : p.terms()) {
    FockVector<Rational> v = FockVector<Rational>::vacuum(n);
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
      v = apply_generator(Generator::Semicircular, *it, v);
    v *= c;
    out += v;
  }
  return out;
}

Rational trace(const NcPolynomial& p) {
  return evaluate_vacuum(p).coefficient(Word::empty(p.alphabet()));
}

Rational trace_tensor(const BiPolynomial& b) {
  const std::int32_t n = b.alphabet();
  Rational acc(0);
  for (const auto& [key, c] : b.terms()) {
    Rational ta = trace(NcPolynomial::monomial(n, Flavor::Semicircular, key.first));
    if (ta == 0) continue;
    Rational tb = trace(NcPolynomial::monomial(n, Flavor::Semicircular, key.second));
    acc += c * ta * tb;
  }
  return acc;
}

std::vector<BigInt> chebyshev(std::int64_t k) {
  if (k < 0) throw std::invalid_argument("degree must be nonnegative");
  std::vector<BigInt> prev{BigInt(1)};
  if (k == 0) return prev;
  std::vector<BigInt> cur{BigInt(0), BigInt(1)};
  for (std::int64_t d = 1; d < k; ++d) {
    std::vector<BigInt> next(static_cast<std::size_t>(d) + 2, BigInt(0));
    for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] = cur[j];
    for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

NcPolynomial chebyshev_at(std::int64_t k, std::int32_t i, std::int32_t n, Flavor flavor) {
  if (i < 1 || i > n) throw std::invalid_argument("direction out of range");
  const std::vector<BigInt> coeffs = chebyshev(k);
  NcPolynomial out(n, flavor);
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    if (coeffs[d] == 0) continue;
    out.add_term(Word(n, std::vector<std::int32_t>(d, i)), Rational(coeffs[d]));
  }
  return out;
}

VectorField<Rational> gradient_field_on_vacuum(const NcPolynomial& p) {
  const std::int32_t n = p.alphabet();
  VectorField<Rational> out(n);
  std::vector<NcPolynomial> grad = cyclic_gradient(p);
  for (std::int32_t dir = 1; dir <= n; ++dir) {
    FockVector<Rational> component = evaluate_vacuum(grad[static_cast<std::size_t>(dir - 1)]);
    for (const auto& [w, c] : component.terms()) out.add_term(w, dir, c);
  }
  return out;
}

}  // namespace fleray

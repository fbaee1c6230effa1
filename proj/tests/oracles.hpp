#ifndef FREELERAY_TESTS_ORACLES_HPP
#define FREELERAY_TESTS_ORACLES_HPP

// Independent reference implementations used to cross-check the library.
// Everything here works on plain std containers and recomputes results from
// first principles, deliberately avoiding the library's code paths.

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "freeleray/fock.hpp"
#include "freeleray/scalar.hpp"

namespace oracle {

using fleray::Rational;
using Letters = std::vector<std::int32_t>;
// (word, direction) -> coefficient
using FieldMap = std::map<std::pair<Letters, std::int32_t>, Rational>;

// Rotation moving the last letter to the front, applied g times.
inline Letters rot(const Letters& w, std::int64_t g) {
  const std::int64_t k = static_cast<std::int64_t>(w.size());
  Letters out(w.size());
  for (std::int64_t i = 0; i < k; ++i)
    out[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(((i - g) % k + k) % k)];
  return out;
}

inline Letters min_rotation(const Letters& w) {
  Letters best = w;
  for (std::int64_t g = 1; g < static_cast<std::int64_t>(w.size()); ++g) {
    Letters cand = rot(w, g);
    if (cand < best) best = cand;
  }
  return best;
}

inline std::int64_t period(const Letters& w) {
  std::int64_t p = 1;
  while (rot(w, p) != w) ++p;
  return p;
}

inline void all_words(std::int32_t n, std::int64_t k, std::vector<Letters>& out, Letters& cur) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (std::int32_t c = 1; c <= n; ++c) {
    cur.push_back(c);
    all_words(n, k - 1, out, cur);
    cur.pop_back();
  }
}

inline std::vector<Letters> all_words(std::int32_t n, std::int64_t k) {
  std::vector<Letters> out;
  Letters cur;
  all_words(n, k, out, cur);
  return out;
}

inline std::int64_t brute_necklaces(std::int32_t n, std::int64_t k) {
  std::set<Letters> classes;
  for (const Letters& w : all_words(n, k)) classes.insert(min_rotation(w));
  return static_cast<std::int64_t>(classes.size());
}

// The gradient field of a monomial: position j contributes the word read
// cyclically after j to direction u[j].
inline FieldMap delta_field(const Letters& u) {
  FieldMap out;
  const std::int64_t k = static_cast<std::int64_t>(u.size());
  for (std::int64_t j = 0; j < k; ++j) {
    Letters rest;
    for (std::int64_t s = 1; s < k; ++s)
      rest.push_back(u[static_cast<std::size_t>((j + s) % k)]);
    auto key = std::make_pair(std::move(rest), u[static_cast<std::size_t>(j)]);
    auto [it, inserted] = out.emplace(std::move(key), Rational(1));
    if (!inserted) it->second += 1;
  }
  return out;
}

inline Rational dot(const FieldMap& a, const FieldMap& b) {
  Rational acc(0);
  for (const auto& [key, c] : a) {
    auto it = b.find(key);
    if (it != b.end()) acc += c * it->second;
  }
  return acc;
}

// Orthogonal expansion of a homogeneous degree-k field over the per-orbit
// gradient vectors, using their squared norms m^2 p.
inline FieldMap onb_project(const FieldMap& v, std::int32_t n, std::int64_t k) {
  FieldMap out;
  std::set<Letters> seen;
  for (const Letters& u : all_words(n, k + 1)) {
    const Letters rep = min_rotation(u);
    if (!seen.insert(rep).second) continue;
    const std::int64_t p = period(rep);
    const std::int64_t m = static_cast<std::int64_t>(rep.size()) / p;
    const FieldMap basis_vec = delta_field(rep);
    const Rational coeff = dot(v, basis_vec) / Rational(m * m * p);
    if (coeff == 0) continue;
    for (const auto& [key, c] : basis_vec) {
      auto [it, inserted] = out.emplace(key, coeff * c);
      if (!inserted) it->second += coeff * c;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

// Textbook dense Gauss-Jordan rank over the rationals.
inline std::int64_t gauss_rank(std::vector<std::vector<Rational>> a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  std::int64_t rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[row]);
    const Rational inv = a[row][col];
    for (std::size_t c = col; c < cols; ++c) a[row][c] /= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = col; c < cols; ++c) a[r][c] -= f * a[row][c];
    }
    ++row;
    ++rank;
  }
  return rank;
}

// The three-term field attached to a non-representative orbit member
// v = i_1...i_{k+1}: direction i_1 gains the tail, direction i_{k+1} loses
// the head twice, direction i_k gains the head rotated once.
inline FieldMap closed_form_divfree(const Letters& v) {
  const std::size_t len = v.size();
  FieldMap out;
  if (len < 2) return out;  // R fixes single letters, the difference is zero
  auto add = [&](Letters w, std::int32_t dir, int c) {
    auto [it, inserted] = out.emplace(std::make_pair(std::move(w), dir), Rational(c));
    if (!inserted) it->second += c;
    if (it->second == 0) out.erase(it);
  };
  add(Letters(v.begin() + 1, v.end()), v.front(), 1);
  add(Letters(v.begin(), v.end() - 1), v.back(), -2);
  {
    Letters w;
    w.push_back(v.back());
    w.insert(w.end(), v.begin(), v.end() - 2);
    add(std::move(w), v[len - 2], 1);
  }
  return out;
}

// Bridges to the library's field type, for comparisons only.
inline FieldMap to_map(const fleray::VectorField<Rational>& f) {
  FieldMap out;
  for (const auto& [key, c] : f.terms()) out.emplace(std::make_pair(key.word.letters, key.dir), c);
  return out;
}

inline fleray::VectorField<Rational> to_field(const FieldMap& m, std::int32_t n) {
  fleray::VectorField<Rational> out(n);
  for (const auto& [key, c] : m) out.add_term(fleray::Word(n, key.first), key.second, c);
  return out;
}

}  // namespace oracle

#endif  // FREELERAY_TESTS_ORACLES_HPP

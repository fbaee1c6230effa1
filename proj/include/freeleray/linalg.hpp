#ifndef FREELERAY_LINALG_HPP
#define FREELERAY_LINALG_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "freeleray/fock.hpp"
#include "freeleray/scalar.hpp"

namespace fleray {

// Sparse row-major matrix over one scalar realization. Rows are maps so
// accumulation during assembly stays canonical (no stored zeros).
template <class S>
struct Matrix {
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  std::vector<std::map<std::int64_t, S>> entries;

  Matrix() = default;
  Matrix(std::int64_t r, std::int64_t c)
      : rows(r), cols(c), entries(static_cast<std::size_t>(r)) {}

  void add(std::int64_t r, std::int64_t c, const S& v) {
    if (ScalarOps<S>::is_zero(v)) return;
    auto& row = entries[static_cast<std::size_t>(r)];
    auto [it, inserted] = row.emplace(c, v);
    if (!inserted) {
      it->second += v;
      if (ScalarOps<S>::is_zero(it->second)) row.erase(it);
    }
  }

  S at(std::int64_t r, std::int64_t c) const {
    const auto& row = entries[static_cast<std::size_t>(r)];
    auto it = row.find(c);
    return it == row.end() ? S{} : it->second;
  }

  static Matrix from_rows(std::initializer_list<std::initializer_list<std::int64_t>> data) {
    Matrix m(static_cast<std::int64_t>(data.size()),
             data.size() ? static_cast<std::int64_t>(data.begin()->size()) : 0);
    std::int64_t r = 0;
    for (const auto& row : data) {
      std::int64_t c = 0;
      for (std::int64_t v : row) m.add(r, c++, ScalarOps<S>::from_int(v));
      ++r;
    }
    return m;
  }
};

// Stable dense column numbering for a family of vectors: keys are indexed
// in their natural (degree, word, dir) order.
template <class S>
class FieldIndexer {
 public:
  explicit FieldIndexer(const std::vector<VectorField<S>>& vs) {
    std::map<FieldKey, std::int64_t, FieldKeyLess> ids;
    for (const auto& v : vs) {
      for (const auto& [key, c] : v.terms()) ids.emplace(key, 0);
    }
    std::int64_t next = 0;
    for (auto& [key, id] : ids) id = next++;
    ids_ = std::move(ids);
  }

  std::int64_t size() const { return static_cast<std::int64_t>(ids_.size()); }
  std::int64_t id(const FieldKey& key) const { return ids_.at(key); }

  template <class T>
  Matrix<T> matrix_of(const std::vector<VectorField<T>>& vs) const {
    Matrix<T> m(static_cast<std::int64_t>(vs.size()), size());
    for (std::size_t r = 0; r < vs.size(); ++r) {
      for (const auto& [key, c] : vs[r].terms()) {
        m.add(static_cast<std::int64_t>(r), ids_.at(key), c);
      }
    }
    return m;
  }

 private:
  std::map<FieldKey, std::int64_t, FieldKeyLess> ids_;
};

// Coordinate matrix of a family of vector fields (rows = vectors).
template <class S>
Matrix<S> coordinate_matrix(const std::vector<VectorField<S>>& vs) {
  return FieldIndexer<S>(vs).template matrix_of<S>(vs);
}

template <class S>
Matrix<S> coordinate_matrix(const std::vector<FockVector<S>>& vs) {
  std::map<Word, std::int64_t, WordLess> ids;
  for (const auto& v : vs) {
    for (const auto& [w, c] : v.terms()) ids.emplace(w, 0);
  }
  std::int64_t next = 0;
  for (auto& [w, id] : ids) id = next++;
  Matrix<S> m(static_cast<std::int64_t>(vs.size()), next);
  for (std::size_t r = 0; r < vs.size(); ++r) {
    for (const auto& [w, c] : vs[r].terms()) {
      m.add(static_cast<std::int64_t>(r), ids.at(w), c);
    }
  }
  return m;
}

// Gram matrix <v_i, v_j>; Hermitian by construction.
template <class V>
auto gram(const std::vector<V>& vs) {
  using S = std::decay_t<decltype(inner(vs[0], vs[0]))>;
  const std::int64_t m = static_cast<std::int64_t>(vs.size());
  Matrix<S> g(m, m);
  for (std::int64_t i = 0; i < m; ++i) {
    for (std::int64_t j = i; j < m; ++j) {
      S v = inner(vs[static_cast<std::size_t>(i)], vs[static_cast<std::size_t>(j)]);
      g.add(i, j, v);
      if (j != i) g.add(j, i, ScalarOps<S>::conj(v));
    }
  }
  return g;
}

namespace detail {

struct UnionFind {
  std::vector<std::int64_t> parent;
  explicit UnionFind(std::int64_t m) : parent(static_cast<std::size_t>(m)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::int64_t find(std::int64_t x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(std::int64_t a, std::int64_t b) {
    parent[static_cast<std::size_t>(find(a))] = find(b);
  }
};

// Fraction-free (Bareiss) elimination with full pivoting on a dense
// integer block; returns the rank. Every division is exact.
std::int64_t bareiss_rank(std::vector<std::vector<BigInt>>& a);

}  // namespace detail

std::int64_t rank(const Matrix<Rational>& m);
std::int64_t rank(const Matrix<Complex>& m);

// Basis of the exact right nullspace, one dense vector per free column.
std::vector<std::vector<Rational>> nullspace(const Matrix<Rational>& m);
std::vector<std::vector<Complex>> nullspace(const Matrix<Complex>& m);

}  // namespace fleray

#endif  // FREELERAY_LINALG_HPP

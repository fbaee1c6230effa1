#ifndef FREELERAY_FOCK_HPP
#define FREELERAY_FOCK_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

#include "freeleray/scalar.hpp"
#include "freeleray/words.hpp"

namespace fleray {

enum class Generator { LeftCreate, LeftAnnihilate, RightCreate, RightAnnihilate, Semicircular };

// A finitely supported element of the full Fock space F(C^n), stored as a
// word -> coefficient map. Zero coefficients are never stored, so equality
// of vectors is equality of the maps.
template <class S>
class FockVector {
 public:
  using TermMap = std::map<Word, S, WordLess>;

  explicit FockVector(std::int32_t n) : n_(n) {
    if (n < 1) throw std::domain_error("fock vector: alphabet size must be >= 1");
  }

  static FockVector unit(const Word& w) {
    FockVector v(w.n);
    v.terms_.emplace(w, ScalarOps<S>::from_int(1));
    return v;
  }

  static FockVector vacuum(std::int32_t n) { return unit(Word::empty(n)); }

  std::int32_t alphabet() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t term_count() const { return static_cast<std::int64_t>(terms_.size()); }

  S coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? S{} : it->second;
  }

  std::int64_t max_degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.length();
  }

  void add_term(const Word& w, const S& c) {
    if (w.n != n_) throw std::domain_error("fock vector: term over a different alphabet");
    if (ScalarOps<S>::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (ScalarOps<S>::is_zero(it->second)) terms_.erase(it);
    }
  }

  FockVector& operator+=(const FockVector& o) {
    check_same(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }

  FockVector& operator-=(const FockVector& o) {
    check_same(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }

  FockVector& operator*=(const S& c) {
    if (ScalarOps<S>::is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
  }

  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const S& c, FockVector v) { return v *= c; }

  friend bool operator==(const FockVector& a, const FockVector& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const FockVector& a, const FockVector& b) { return !(a == b); }

  FockVector homogeneous_part(std::int64_t degree) const {
    FockVector out(n_);
    for (const auto& [w, c] : terms_) {
      if (w.length() == degree) out.terms_.emplace(w, c);
    }
    return out;
  }

 private:
  void check_same(const FockVector& o) const {
    if (n_ != o.n_) throw std::domain_error("fock vector: mismatched alphabet sizes");
  }

  std::int32_t n_;
  TermMap terms_;
};

// Key of a vector-field term: basis vector e_w tensor direction f_dir.
struct FieldKey {
  Word word;
  std::int32_t dir = 1;

  friend bool operator==(const FieldKey& a, const FieldKey& b) {
    return a.dir == b.dir && a.word == b.word;
  }
};

struct FieldKeyLess {
  bool operator()(const FieldKey& a, const FieldKey& b) const {
    WordLess wl;
    if (wl(a.word, b.word)) return true;
    if (wl(b.word, a.word)) return false;
    return a.dir < b.dir;
  }
};

// An element of F(C^n)^n = F(C^n) (x) C^n: finitely many (word, direction)
// terms. Component j is the restriction to direction j.
template <class S>
class VectorField {
 public:
  using TermMap = std::map<FieldKey, S, FieldKeyLess>;

  explicit VectorField(std::int32_t n) : n_(n) {
    if (n < 1) throw std::domain_error("vector field: alphabet size must be >= 1");
  }

  static VectorField unit(const Word& w, std::int32_t dir) {
    VectorField v(w.n);
    v.add_term(w, dir, ScalarOps<S>::from_int(1));
    return v;
  }

  std::int32_t alphabet() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t term_count() const { return static_cast<std::int64_t>(terms_.size()); }

  S coefficient(const Word& w, std::int32_t dir) const {
    auto it = terms_.find(FieldKey{w, dir});
    return it == terms_.end() ? S{} : it->second;
  }

  void add_term(const Word& w, std::int32_t dir, const S& c) {
    if (w.n != n_) throw std::domain_error("vector field: term over a different alphabet");
    if (dir < 1 || dir > n_) throw std::domain_error("vector field: direction out of range");
    if (ScalarOps<S>::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(FieldKey{w, dir}, c);
    if (!inserted) {
      it->second += c;
      if (ScalarOps<S>::is_zero(it->second)) terms_.erase(it);
    }
  }

  FockVector<S> component(std::int32_t dir) const {
    FockVector<S> out(n_);
    for (const auto& [key, c] : terms_) {
      if (key.dir == dir) out.add_term(key.word, c);
    }
    return out;
  }

  void set_component(std::int32_t dir, const FockVector<S>& v) {
    for (const auto& [w, c] : v.terms()) add_term(w, dir, c);
  }

  VectorField& operator+=(const VectorField& o) {
    check_same(o);
    for (const auto& [key, c] : o.terms_) add_term(key.word, key.dir, c);
    return *this;
  }

  VectorField& operator-=(const VectorField& o) {
    check_same(o);
    for (const auto& [key, c] : o.terms_) add_term(key.word, key.dir, -c);
    return *this;
  }

  VectorField& operator*=(const S& c) {
    if (ScalarOps<S>::is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& [key, v] : terms_) v *= c;
    return *this;
  }

  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(const S& c, VectorField v) { return v *= c; }

  friend bool operator==(const VectorField& a, const VectorField& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const VectorField& a, const VectorField& b) { return !(a == b); }

  std::int64_t max_degree() const {
    std::int64_t d = 0;
    for (const auto& [key, c] : terms_) d = std::max(d, key.word.length());
    return d;
  }

  VectorField homogeneous_part(std::int64_t degree) const {
    VectorField out(n_);
    for (const auto& [key, c] : terms_) {
      if (key.word.length() == degree) out.terms_.emplace(key, c);
    }
    return out;
  }

 private:
  void check_same(const VectorField& o) const {
    if (n_ != o.n_) throw std::domain_error("vector field: mismatched alphabet sizes");
  }

  std::int32_t n_;
  TermMap terms_;
};

// Linear extension of l_j, l_j^*, r_j, r_j^* and s_j = l_j + l_j^*.
template <class S>
FockVector<S> apply_generator(Generator kind, std::int32_t j, const FockVector<S>& xi) {
  const std::int32_t n = xi.alphabet();
  if (j < 1 || j > n) throw std::domain_error("apply_generator: direction out of range");
  FockVector<S> out(n);
  for (const auto& [w, c] : xi.terms()) {
    switch (kind) {
      case Generator::LeftCreate:
        out.add_term(prepend(j, w), c);
        break;
      case Generator::LeftAnnihilate:
        if (!w.is_empty() && w.letters.front() == j) {
          out.add_term(Word(n, {w.letters.begin() + 1, w.letters.end()}), c);
        }
        break;
      case Generator::RightCreate:
        out.add_term(append(w, j), c);
        break;
      case Generator::RightAnnihilate:
        if (!w.is_empty() && w.letters.back() == j) {
          out.add_term(Word(n, {w.letters.begin(), w.letters.end() - 1}), c);
        }
        break;
      case Generator::Semicircular:
        out.add_term(prepend(j, w), c);
        if (!w.is_empty() && w.letters.front() == j) {
          out.add_term(Word(n, {w.letters.begin() + 1, w.letters.end()}), c);
        }
        break;
    }
  }
  return out;
}

// <xi, eta> with the words as an orthonormal family; conjugate-linear in
// the second slot.
template <class S>
S inner(const FockVector<S>& xi, const FockVector<S>& eta) {
  if (xi.alphabet() != eta.alphabet()) throw std::domain_error("inner: mismatched alphabet sizes");
  S acc{};
  auto a = xi.terms().begin();
  auto b = eta.terms().begin();
  WordLess less;
  while (a != xi.terms().end() && b != eta.terms().end()) {
    if (less(a->first, b->first)) {
      ++a;
    } else if (less(b->first, a->first)) {
      ++b;
    } else {
      acc += a->second * ScalarOps<S>::conj(b->second);
      ++a;
      ++b;
    }
  }
  return acc;
}

template <class S>
S inner(const VectorField<S>& v, const VectorField<S>& w) {
  if (v.alphabet() != w.alphabet()) throw std::domain_error("inner: mismatched alphabet sizes");
  S acc{};
  auto a = v.terms().begin();
  auto b = w.terms().begin();
  FieldKeyLess less;
  while (a != v.terms().end() && b != w.terms().end()) {
    if (less(a->first, b->first)) {
      ++a;
    } else if (less(b->first, a->first)) {
      ++b;
    } else {
      acc += a->second * ScalarOps<S>::conj(b->second);
      ++a;
      ++b;
    }
  }
  return acc;
}

// R on tensors: linear extension of word rotation, identity on the vacuum.
template <class S>
FockVector<S> cyclic_shift(const FockVector<S>& xi) {
  FockVector<S> out(xi.alphabet());
  for (const auto& [w, c] : xi.terms()) {
    out.add_term(w.is_empty() ? w : rotate(w, 1), c);
  }
  return out;
}

// theta^l[(xi_1, ..., xi_n)] = sum_j (l_j - r_j) xi_j.
template <class S>
FockVector<S> theta_l(const VectorField<S>& v) {
  FockVector<S> out(v.alphabet());
  for (const auto& [key, c] : v.terms()) {
    out.add_term(prepend(key.dir, key.word), c);
    out.add_term(append(key.word, key.dir), -c);
  }
  return out;
}

// (theta^l)^* xi = ((l_j^* - r_j^*) xi)_j; kills the vacuum.
template <class S>
VectorField<S> theta_l_star(const FockVector<S>& xi) {
  const std::int32_t n = xi.alphabet();
  VectorField<S> out(n);
  for (const auto& [w, c] : xi.terms()) {
    if (w.is_empty()) continue;
    out.add_term(Word(n, {w.letters.begin() + 1, w.letters.end()}), w.letters.front(), c);
    out.add_term(Word(n, {w.letters.begin(), w.letters.end() - 1}), w.letters.back(), -c);
  }
  return out;
}

inline FockVector<Complex> to_complex(const FockVector<Rational>& v) {
  FockVector<Complex> out(v.alphabet());
  for (const auto& [w, c] : v.terms()) out.add_term(w, to_complex(c));
  return out;
}

inline VectorField<Complex> to_complex(const VectorField<Rational>& v) {
  VectorField<Complex> out(v.alphabet());
  for (const auto& [key, c] : v.terms()) out.add_term(key.word, key.dir, to_complex(c));
  return out;
}

inline double norm(const VectorField<Complex>& v) {
  double acc = 0.0;
  for (const auto& [key, c] : v.terms()) acc += std::norm(c);
  return std::sqrt(acc);
}

}  // namespace fleray

#endif  // FREELERAY_FOCK_HPP

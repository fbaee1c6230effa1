#ifndef FREELERAY_WORDS_HPP
#define FREELERAY_WORDS_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "freeleray/scalar.hpp"

namespace fleray {

// A word over the alphabet [1, n]. The empty word is the monoid identity.
struct Word {
  std::int32_t n = 1;
  std::vector<std::int32_t> letters;

  Word() = default;
  Word(std::int32_t alphabet, std::vector<std::int32_t> ls);

  static Word empty(std::int32_t alphabet) { return Word(alphabet, {}); }

  std::int64_t length() const { return static_cast<std::int64_t>(letters.size()); }
  bool is_empty() const { return letters.empty(); }

  friend bool operator==(const Word& a, const Word& b) {
    return a.n == b.n && a.letters == b.letters;
  }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
};

// Serialization order everywhere: alphabet, then degree, then lexicographic.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.n != b.n) return a.n < b.n;
    if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
    return a.letters < b.letters;
  }
};

// Plain lexicographic order, used to compare rotations of one word.
bool lex_less(const Word& a, const Word& b);

// The cyclic permutation R^g; R moves the last letter to the front.
Word rotate(const Word& w, std::int64_t g);

// Concatenation, prepend, append helpers on the free monoid.
Word concat(const Word& a, const Word& b);
Word prepend(std::int32_t letter, const Word& w);
Word append(const Word& w, std::int32_t letter);

struct Orbit {
  Word representative;             // lexicographically minimal rotation
  std::vector<Word> members;       // rep, R(rep), ..., R^(p-1)(rep)
  std::int64_t size = 0;           // p = |[u]|
  std::int64_t stabilizer_order = 0;  // m, with m * p = |u|
};

Orbit orbit_of(const Word& w);

// |[n]^k / Z_k| via Burnside: (1/k) * sum_{g=1..k} n^gcd(g,k).
BigInt necklace_count(std::int32_t n, std::int64_t k);

// Streams the lexicographically minimal representative of every orbit of
// [n]^k in lexicographic order (FKM necklace generation, O(k) state).
void for_each_orbit_rep(std::int32_t n, std::int64_t k,
                        const std::function<void(const Word&)>& fn);

std::vector<Word> enumerate_orbit_reps(std::int32_t n, std::int64_t k);

// Enumerates all of [n]^k in lexicographic order (odometer, O(k) state).
void for_each_word(std::int32_t n, std::int64_t k,
                   const std::function<void(const Word&)>& fn);

}  // namespace fleray

#endif  // FREELERAY_WORDS_HPP

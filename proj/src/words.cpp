#include "freeleray/words.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fleray {

Word::Word(std::int32_t alphabet, std::vector<std::int32_t> ls)
    : n(alphabet), letters(std::move(ls)) {
  if (n < 1) throw std::domain_error("word: alphabet size must be >= 1");
  for (std::int32_t c : letters) {
    if (c < 1 || c > n) throw std::domain_error("word: letter out of range [1, n]");
  }
}

bool lex_less(const Word& a, const Word& b) { return a.letters < b.letters; }

Word rotate(const Word& w, std::int64_t g) {
  if (w.is_empty()) throw std::domain_error("rotate: R is not defined on the empty word");
  const std::int64_t k = w.length();
  std::int64_t r = ((g % k) + k) % k;
  if (r == 0) return w;
  Word out;
  out.n = w.n;
  out.letters.reserve(w.letters.size());
  // R^r moves the last r letters to the front.
  out.letters.insert(out.letters.end(), w.letters.end() - r, w.letters.end());
  out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end() - r);
  return out;
}

Word concat(const Word& a, const Word& b) {
  if (a.n != b.n) throw std::domain_error("concat: mismatched alphabet sizes");
  Word out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

Word prepend(std::int32_t letter, const Word& w) {
  if (letter < 1 || letter > w.n) throw std::domain_error("prepend: letter out of range");
  Word out;
  out.n = w.n;
  out.letters.reserve(w.letters.size() + 1);
  out.letters.push_back(letter);
  out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
  return out;
}

Word append(const Word& w, std::int32_t letter) {
  if (letter < 1 || letter > w.n) throw std::domain_error("append: letter out of range");
  Word out = w;
  out.letters.push_back(letter);
  return out;
}

Orbit orbit_of(const Word& w) {
  if (w.is_empty()) throw std::domain_error("orbit_of: the empty word has no Z_k action");
  const std::int64_t k = w.length();
  // Minimal period p under R: the first power with R^p(w) = w.
  std::int64_t p = 0;
  Word cur = w;
  std::vector<Word> rots;
  do {
    rots.push_back(cur);
    cur = rotate(cur, 1);
    ++p;
  } while (cur != w);

  const Word* rep = &rots.front();
  for (const Word& r : rots) {
    if (lex_less(r, *rep)) rep = &r;
  }

  Orbit orb;
  orb.representative = *rep;
  orb.size = p;
  orb.stabilizer_order = k / p;
  orb.members.reserve(static_cast<std::size_t>(p));
  Word m = *rep;
  for (std::int64_t t = 0; t < p; ++t) {
    orb.members.push_back(m);
    m = rotate(m, 1);
  }
  return orb;
}

BigInt necklace_count(std::int32_t n, std::int64_t k) {
  if (n < 1 || k < 1) throw std::domain_error("necklace_count: need n >= 1 and k >= 1");
  BigInt total = 0;
  for (std::int64_t g = 1; g <= k; ++g) {
    const std::int64_t d = std::gcd(g, k);
    total += boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(d));
  }
  return total / k;
}

namespace {

// FKM generation of necklaces of length k over [1, n] in lexicographic
// order. a is 1-indexed with a[0] a sentinel.
void fkm_rec(std::int32_t n, std::int64_t k, std::int64_t t, std::int64_t p,
             std::vector<std::int32_t>& a, const std::function<void(const Word&)>& fn) {
  if (t > k) {
    if (k % p == 0) {
      fn(Word(n, std::vector<std::int32_t>(a.begin() + 1, a.end())));
    }
    return;
  }
  a[static_cast<std::size_t>(t)] = a[static_cast<std::size_t>(t - p)];
  fkm_rec(n, k, t + 1, p, a, fn);
  for (std::int32_t j = a[static_cast<std::size_t>(t - p)] + 1; j <= n; ++j) {
    a[static_cast<std::size_t>(t)] = j;
    fkm_rec(n, k, t + 1, t, a, fn);
  }
}

}  // namespace

void for_each_orbit_rep(std::int32_t n, std::int64_t k,
                        const std::function<void(const Word&)>& fn) {
  if (n < 1 || k < 1) throw std::domain_error("for_each_orbit_rep: need n >= 1 and k >= 1");
  std::vector<std::int32_t> a(static_cast<std::size_t>(k) + 1, 1);
  fkm_rec(n, k, 1, 1, a, fn);
}

std::vector<Word> enumerate_orbit_reps(std::int32_t n, std::int64_t k) {
  std::vector<Word> out;
  for_each_orbit_rep(n, k, [&](const Word& w) { out.push_back(w); });
  return out;
}

void for_each_word(std::int32_t n, std::int64_t k,
                   const std::function<void(const Word&)>& fn) {
  if (n < 1 || k < 0) throw std::domain_error("for_each_word: need n >= 1 and k >= 0");
  Word w(n, std::vector<std::int32_t>(static_cast<std::size_t>(k), 1));
  for (;;) {
    fn(w);
    std::int64_t i = k - 1;
    while (i >= 0 && w.letters[static_cast<std::size_t>(i)] == n) {
      w.letters[static_cast<std::size_t>(i)] = 1;
      --i;
    }
    if (i < 0) return;
    ++w.letters[static_cast<std::size_t>(i)];
  }
}

}  // namespace fleray

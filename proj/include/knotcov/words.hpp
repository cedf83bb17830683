#pragma once
// Free-group words over generators g_0..g_{n-1}.
// A letter is a nonzero int: +(i+1) for g_i, -(i+1) for g_i^-1.

#include <vector>
#include <string>
#include <stdexcept>
#include <cstdlib>

namespace knotcov {

using Word = std::vector<int>;

inline int letter(int gen_index, bool inverse = false) {
  return inverse ? -(gen_index + 1) : gen_index + 1;
}

inline int gen_of(int l) { return std::abs(l) - 1; }

inline void push_reduced(Word& w, int l) {
  if (l == 0) throw std::invalid_argument("zero letter");
  if (!w.empty() && w.back() == -l)
    w.pop_back();
  else
    w.push_back(l);
}

inline Word reduce(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (int l : w) push_reduced(r, l);
  return r;
}

inline Word concat(const Word& a, const Word& b) {
  Word r = a;
  for (int l : b) push_reduced(r, l);
  return r;
}

inline Word inverse(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(-*it);
  return r;
}

inline std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += (w[i] > 0 ? "g" : "G") + std::to_string(gen_of(w[i]));
  }
  return s;
}

// Exponent sum of generator i in w.
inline long exponent_sum(const Word& w, int i) {
  long s = 0;
  for (int l : w)
    if (gen_of(l) == i) s += (l > 0 ? 1 : -1);
  return s;
}

inline int max_generator(const Word& w) {
  int m = -1;
  for (int l : w) m = std::max(m, gen_of(l));
  return m;
}

}  // namespace knotcov

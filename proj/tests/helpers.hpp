#pragma once

// Reference implementations used only by the tests. They run on plain
// std::string over 'a'..'z' and favor obviousness over speed, so any
// disagreement with the library points at the library.

#include <algorithm>
#include <cstddef>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace testref {

// rank order: 'a' is the greatest letter, later letters are smaller
inline int letter_cmp(char x, char y) {
  if (x == y) return 0;
  return x < y ? 1 : -1;
}

// +1 if u is deg-lex greater, -1 if smaller, 0 if equal
inline int deglex_cmp(const std::string& u, const std::string& v) {
  if (u.size() != v.size()) return u.size() > v.size() ? 1 : -1;
  for (std::size_t i = 0; i < u.size(); ++i) {
    int c = letter_cmp(u[i], v[i]);
    if (c != 0) return c;
  }
  return 0;
}

inline bool has_p_power(const std::string& w, unsigned p) {
  for (std::size_t start = 0; start < w.size(); ++start) {
    for (std::size_t blen = 1; start + blen * p <= w.size(); ++blen) {
      bool ok = true;
      for (std::size_t k = 0; ok && k < blen * (p - 1); ++k)
        if (w[start + k] != w[start + blen + k]) ok = false;
      if (ok) return true;
    }
  }
  return false;
}

inline bool decomposition_ok(const std::vector<std::string>& fs, bool strong) {
  std::string id_cat;
  for (const auto& f : fs) id_cat += f;
  if (strong) {
    for (const auto& f : fs)
      if ((fs.size() - 1) * f.size() >= id_cat.size()) return false;
  }
  std::vector<std::size_t> idx(fs.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  while (std::next_permutation(idx.begin(), idx.end())) {
    std::string cat;
    for (std::size_t i : idx) cat += fs[i];
    if (deglex_cmp(id_cat, cat) <= 0) return false;
  }
  return true;
}

inline bool split_exists(const std::string& sub, std::size_t from, unsigned remaining,
                         std::vector<std::string>& parts, bool strong) {
  if (remaining == 1) {
    if (from >= sub.size()) return false;
    parts.push_back(sub.substr(from));
    bool ok = decomposition_ok(parts, strong);
    parts.pop_back();
    return ok;
  }
  for (std::size_t len = 1; sub.size() - from >= len + (remaining - 1); ++len) {
    parts.push_back(sub.substr(from, len));
    if (split_exists(sub, from + len, remaining - 1, parts, strong)) {
      parts.pop_back();
      return true;
    }
    parts.pop_back();
  }
  return false;
}

inline bool has_decomposable_subword(const std::string& w, unsigned q, bool strong) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t len = q; i + len <= w.size(); ++len) {
      std::vector<std::string> parts;
      if (split_exists(w.substr(i, len), 0, q, parts, strong)) return true;
    }
  }
  return false;
}

inline bool has_witness(const std::string& w, unsigned p, unsigned q, bool strong) {
  return has_p_power(w, p) || has_decomposable_subword(w, q, strong);
}

inline std::size_t distinct_factors(const std::string& w, std::size_t n) {
  std::set<std::string> seen;
  for (std::size_t i = 0; i + n <= w.size(); ++i) seen.insert(w.substr(i, n));
  return seen.size();
}

inline std::string random_string(std::mt19937_64& rng, unsigned m,
                                 std::size_t min_len, std::size_t max_len) {
  std::size_t len = min_len + rng() % (max_len - min_len + 1);
  std::string out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    out.push_back(static_cast<char>('a' + rng() % m));
  return out;
}

// all words over the first m letters with length in [1, max_len],
// shortest first, alphabetical within a length
inline std::vector<std::string> all_words(unsigned m, std::size_t max_len) {
  std::vector<std::string> out;
  std::vector<std::string> layer{""};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::string> next;
    for (const auto& w : layer)
      for (unsigned c = 0; c < m; ++c)
        next.push_back(w + static_cast<char>('a' + c));
    for (const auto& w : next) out.push_back(w);
    layer = std::move(next);
  }
  return out;
}

}  // namespace testref

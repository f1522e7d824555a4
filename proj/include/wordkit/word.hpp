#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wordkit/errors.hpp"

namespace wordkit {

// Letters are 1-based ranks. Rank 1 is the GREATEST letter in the order:
// 'a' = rank 1 beats 'b' = rank 2 beats 'c' = rank 3, and so on. Getting
// this backwards silently inverts every decomposition, so it is pinned by
// tests and never inferred anywhere else.
using rank_type = std::uint32_t;

// The text format maps ranks onto 'a'..'z', which caps the alphabet at 26.
// The cap is a property of the format, not of any algorithm here.
inline constexpr rank_type max_alphabet_size = 26;

struct alphabet {
  explicit alphabet(rank_type m) : size(m) {
    if (m < 1 || m > max_alphabet_size)
      throw parameter_error("alphabet size must be in [1, 26], got " +
                            std::to_string(m));
  }
  rank_type size;

  friend bool operator==(alphabet a, alphabet b) { return a.size == b.size; }
};

// 1-based closed interval [start, end] inside some word.
struct position {
  std::size_t start = 1;
  std::size_t end = 1;

  std::size_t length() const { return end - start + 1; }
  friend bool operator==(position a, position b) = default;
};

// A finite sequence of letter ranks over a fixed alphabet. Immutable after
// construction; all mutation is by building a new word.
class word {
 public:
  explicit word(alphabet a) : alpha_(a) {}

  word(alphabet a, std::vector<rank_type> letters)
      : alpha_(a), letters_(std::move(letters)) {
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (letters_[i] < 1 || letters_[i] > alpha_.size)
        throw parameter_error("letter rank " + std::to_string(letters_[i]) +
                              " at index " + std::to_string(i + 1) +
                              " outside alphabet of size " +
                              std::to_string(alpha_.size));
    }
  }

  // Text form: the first m lowercase letters, nothing else.
  static word parse(std::string_view text, alphabet a) {
    std::vector<rank_type> letters;
    letters.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char c = text[i];
      if (c < 'a' || c >= static_cast<char>('a' + a.size))
        throw parse_error("character '" + std::string(1, c) +
                              "' at index " + std::to_string(i + 1) +
                              " is not one of the first " +
                              std::to_string(a.size) + " lowercase letters",
                          i + 1);
      letters.push_back(static_cast<rank_type>(c - 'a') + 1);
    }
    return word(a, std::move(letters));
  }

  std::string render() const {
    std::string out;
    out.reserve(letters_.size());
    for (rank_type r : letters_) out.push_back(static_cast<char>('a' + r - 1));
    return out;
  }

  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  alphabet alpha() const { return alpha_; }

  // 1-based letter access, matching the public position convention.
  rank_type at(std::size_t i) const {
    if (i < 1 || i > letters_.size())
      throw bounds_error("letter index " + std::to_string(i) +
                         " outside word of length " +
                         std::to_string(letters_.size()));
    return letters_[i - 1];
  }

  const std::vector<rank_type>& ranks() const { return letters_; }

  friend bool operator==(const word& u, const word& v) {
    return u.alpha_ == v.alpha_ && u.letters_ == v.letters_;
  }

 private:
  alphabet alpha_;
  std::vector<rank_type> letters_;
};

namespace detail {

// Letterwise comparison for equal-length blocks. Rank 1 is greatest, so a
// SMALLER rank wins.
inline std::strong_ordering compare_letters(rank_type a, rank_type b) {
  if (a == b) return std::strong_ordering::equal;
  return a < b ? std::strong_ordering::greater : std::strong_ordering::less;
}

}  // namespace detail

// Degree-lexicographic order: longer words are strictly greater; equal
// lengths compare letterwise with rank 1 greatest. The empty word is the
// unique minimum.
inline std::strong_ordering compare_deglex(const word& u, const word& v) {
  if (!(u.alpha() == v.alpha()))
    throw alphabet_mismatch("cannot compare words over alphabets of size " +
                            std::to_string(u.alpha().size) + " and " +
                            std::to_string(v.alpha().size));
  if (u.length() != v.length())
    return u.length() < v.length() ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
  const auto& a = u.ranks();
  const auto& b = v.ranks();
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto c = detail::compare_letters(a[i], b[i]);
    if (c != std::strong_ordering::equal) return c;
  }
  return std::strong_ordering::equal;
}

struct deglex_less {
  bool operator()(const word& u, const word& v) const {
    return compare_deglex(u, v) == std::strong_ordering::less;
  }
};

inline void check_position(const word& w, position p) {
  if (p.start < 1 || p.start > p.end || p.end > w.length())
    throw bounds_error("position [" + std::to_string(p.start) + ", " +
                       std::to_string(p.end) + "] invalid in word of length " +
                       std::to_string(w.length()));
}

// The contiguous letters w[start..end], both ends included.
inline word subword(const word& w, position p) {
  check_position(w, p);
  const auto& r = w.ranks();
  return word(w.alpha(),
              std::vector<rank_type>(r.begin() + (p.start - 1),
                                     r.begin() + p.end));
}

// All 1-based start indices where v occurs in w, ascending, overlaps
// included. With a window, only occurrences lying entirely inside
// [window.start, window.end] count.
inline std::vector<std::size_t> occurrences(
    const word& w, const word& v,
    std::optional<position> window = std::nullopt) {
  if (v.empty())
    throw parameter_error("occurrence pattern must be non-empty");
  if (!(w.alpha() == v.alpha()))
    throw alphabet_mismatch("pattern and word use different alphabets");

  std::size_t lo = 1, hi = w.length();
  if (window) {
    check_position(w, *window);
    lo = window->start;
    hi = window->end;
  }

  std::vector<std::size_t> starts;
  if (v.length() > w.length()) return starts;
  const auto& ws = w.ranks();
  const auto& vs = v.ranks();
  for (std::size_t s = lo; s + v.length() - 1 <= hi; ++s) {
    bool hit = true;
    for (std::size_t k = 0; k < vs.size(); ++k) {
      if (ws[s - 1 + k] != vs[k]) {
        hit = false;
        break;
      }
    }
    if (hit) starts.push_back(s);
  }
  return starts;
}

inline word concat(const word& u, const word& v) {
  if (!(u.alpha() == v.alpha()))
    throw alphabet_mismatch("cannot concatenate words over different alphabets");
  std::vector<rank_type> out = u.ranks();
  out.insert(out.end(), v.ranks().begin(), v.ranks().end());
  return word(u.alpha(), std::move(out));
}

}  // namespace wordkit

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wordkit/errors.hpp"
#include "wordkit/word.hpp"

namespace wordkit {

enum class generator_kind { substitution, periodic };

// A recipe for a right-infinite word: either the fixed point of a
// prolongable substitution, or an explicit base repeated forever.
struct generator {
  std::string name;
  generator_kind kind;
  alphabet alpha;
  std::vector<word> images;  // substitution only; images[r-1] for rank r
  rank_type seed;            // substitution only
  word base;                 // periodic only
};

inline generator make_substitution(std::string name, alphabet alpha,
                                   std::vector<word> images, rank_type seed) {
  if (images.size() != alpha.size)
    throw parameter_error("substitution must map every letter: alphabet has " +
                          std::to_string(alpha.size) + " letters, got " +
                          std::to_string(images.size()) + " images");
  for (rank_type r = 1; r <= alpha.size; ++r) {
    const word& img = images[r - 1];
    if (!(img.alpha() == alpha))
      throw alphabet_mismatch("image of letter '" +
                              std::string(1, char('a' + r - 1)) +
                              "' uses a different alphabet");
    if (img.empty())
      throw parameter_error("image of letter '" +
                            std::string(1, char('a' + r - 1)) + "' is empty");
  }
  if (seed < 1 || seed > alpha.size)
    throw parameter_error("seed letter is outside the alphabet");
  const word& seed_img = images[seed - 1];
  if (seed_img.length() < 2 || seed_img.at(1) != seed)
    throw parameter_error(
        "generator is not prolongable: the image of the seed must start with "
        "the seed and have length at least 2");
  return generator{std::move(name), generator_kind::substitution, alpha,
                   std::move(images), seed, word(alpha)};
}

inline generator make_periodic(std::string name, word base) {
  if (base.empty())
    throw parameter_error("periodic base must be non-empty");
  alphabet a = base.alpha();
  return generator{std::move(name), generator_kind::periodic, a, {}, 1,
                   std::move(base)};
}

inline generator thue_morse() {
  alphabet a(2);
  return make_substitution(
      "thue-morse", a, {word::parse("ab", a), word::parse("ba", a)}, 1);
}

inline generator fibonacci() {
  alphabet a(2);
  return make_substitution("fibonacci", a,
                           {word::parse("ab", a), word::parse("a", a)}, 1);
}

inline generator tribonacci() {
  alphabet a(3);
  return make_substitution(
      "tribonacci", a,
      {word::parse("ab", a), word::parse("ac", a), word::parse("a", a)}, 1);
}

// First `length` letters of the generated infinite word. For substitutions
// this iterates from the seed; prolongability makes each pass grow the
// word, and appending image blocks left to right means a truncated pass
// still yields a true prefix of the fixed point.
inline word prefix(const generator& gen, std::size_t length) {
  if (length < 1)
    throw parameter_error("prefix length must be at least 1");
  if (gen.kind == generator_kind::periodic) {
    const auto& b = gen.base.ranks();
    std::vector<rank_type> out;
    out.reserve(length);
    for (std::size_t i = 0; i < length; ++i) out.push_back(b[i % b.size()]);
    return word(gen.alpha, std::move(out));
  }
  std::vector<rank_type> cur{gen.seed};
  while (cur.size() < length) {
    std::vector<rank_type> next;
    next.reserve(2 * cur.size());
    for (rank_type r : cur) {
      const auto& img = gen.images[r - 1].ranks();
      next.insert(next.end(), img.begin(), img.end());
      if (next.size() >= length) break;
    }
    cur = std::move(next);
  }
  cur.resize(length);
  return word(gen.alpha, std::move(cur));
}

struct complexity_profile {
  std::size_t prefix_length = 0;
  // values[i] = number of distinct factors of length i+1
  std::vector<std::size_t> values;
};

// Distinct-factor counts for n = 1..n_max, by sorting the factor start
// positions under letterwise comparison.
inline complexity_profile complexity(const word& w, std::size_t n_max) {
  if (n_max < 1)
    throw parameter_error("n_max must be at least 1");
  if (n_max > w.length())
    throw bounds_error("n_max " + std::to_string(n_max) +
                       " exceeds the word length " +
                       std::to_string(w.length()));
  complexity_profile profile;
  profile.prefix_length = w.length();
  const auto& r = w.ranks();
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<std::size_t> starts(w.length() - n + 1);
    std::iota(starts.begin(), starts.end(), std::size_t{0});
    auto factor_less = [&](std::size_t a, std::size_t b) {
      return std::lexicographical_compare(r.begin() + a, r.begin() + a + n,
                                          r.begin() + b, r.begin() + b + n);
    };
    std::sort(starts.begin(), starts.end(), factor_less);
    std::size_t distinct = 1;
    for (std::size_t k = 1; k < starts.size(); ++k)
      if (factor_less(starts[k - 1], starts[k])) ++distinct;
    profile.values.push_back(distinct);
  }
  return profile;
}

struct recurrence_profile {
  word pattern;
  std::size_t max_gap = 0;
  // smallest L such that every length-L window of the scanned prefix
  // contains the pattern; says nothing about the infinite word
  std::optional<std::size_t> window_constant;
  std::size_t prefix_length = 0;
};

// Occurrence-gap statistics for v inside the scanned prefix w.
inline recurrence_profile recurrence(const word& w, const word& v) {
  const std::vector<std::size_t> occ = occurrences(w, v);
  if (occ.size() < 2)
    throw insufficient_occurrences("pattern \"" + v.render() + "\" occurs " +
                                   std::to_string(occ.size()) +
                                   " time(s) in the prefix; at least 2 needed");
  recurrence_profile profile{v};
  profile.prefix_length = w.length();
  for (std::size_t k = 1; k < occ.size(); ++k)
    profile.max_gap = std::max(profile.max_gap, occ[k] - occ[k - 1]);

  const std::size_t len = w.length();
  const std::size_t pat = v.length();
  // window size L works iff every window start i has an occurrence start in
  // [i, i+L-pat]; monotone in L, so binary search the minimum
  auto works = [&](std::size_t window) {
    if (window < pat) return false;
    std::size_t k = 0;
    for (std::size_t i = 1; i + window - 1 <= len; ++i) {
      while (k < occ.size() && occ[k] < i) ++k;
      if (k == occ.size() || occ[k] > i + window - pat) return false;
    }
    return true;
  };
  std::size_t lo = pat, hi = len;  // hi always works: one window, v inside
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (works(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  profile.window_constant = lo;
  return profile;
}

struct periodicity {
  std::size_t preperiod = 0;
  std::size_t period = 1;
};

// Tests whether the prefix is consistent with eventual periodicity: after
// dropping `preperiod` letters the rest repeats with the given period, and
// the repeating tail covers at least two full periods so a stray suffix
// match does not count. Smallest (preperiod, period) lexicographically.
inline std::optional<periodicity> eventually_periodic_check(
    const word& w, std::size_t max_period) {
  if (max_period < 1)
    throw parameter_error("max_period must be at least 1");
  if (max_period > w.length() / 2)
    throw parameter_error("max_period " + std::to_string(max_period) +
                          " exceeds half the word length " +
                          std::to_string(w.length()) +
                          "; the tail must fit two full periods");
  const auto& r = w.ranks();
  const std::size_t len = r.size();
  // earliest[p] = smallest e such that r[i] == r[i+p] for all i >= e
  std::vector<std::size_t> earliest(max_period + 1, 0);
  for (std::size_t p = 1; p <= max_period; ++p) {
    std::size_t e = 0;
    for (std::size_t i = len - p; i-- > 0;) {
      if (r[i] != r[i + p]) {
        e = i + 1;
        break;
      }
    }
    earliest[p] = e;
  }
  for (std::size_t e = 0; e + 2 <= len; ++e)
    for (std::size_t p = 1; p <= max_period; ++p)
      if (earliest[p] <= e && e + 2 * p <= len)
        return periodicity{e, p};
  return std::nullopt;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

inline rank_type config_letter(std::string_view item, std::string_view token,
                               std::size_t index) {
  if (token.size() != 1 || token[0] < 'a' || token[0] > 'z')
    throw parse_error("expected a single letter a-z in \"" +
                      std::string(item) + "\"", index);
  return static_cast<rank_type>(token[0] - 'a' + 1);
}

}  // namespace detail

// One-line generator config: `name: a->ab, b->ba, seed=a` for substitutions
// or `name: periodic=abab` for explicit repetition. The alphabet is the
// letters a..x for the largest letter x mentioned anywhere in the line.
inline generator parse_generator(std::string_view line) {
  const std::size_t colon = line.find(':');
  if (colon == std::string_view::npos)
    throw parse_error("generator config needs `name: ...`", 1);
  std::string name(detail::trim(line.substr(0, colon)));
  if (name.empty()) throw parse_error("generator name is empty", 1);

  std::vector<std::pair<rank_type, std::string>> rules;
  std::optional<rank_type> seed;
  std::optional<std::string> periodic_base;

  std::string_view rest = line.substr(colon + 1);
  std::size_t index = 0;
  while (!rest.empty()) {
    ++index;
    const std::size_t comma = rest.find(',');
    std::string_view item = detail::trim(rest.substr(0, comma));
    rest = comma == std::string_view::npos ? std::string_view{}
                                          : rest.substr(comma + 1);
    if (item.empty())
      throw parse_error("empty item in generator config", index);
    if (std::size_t arrow = item.find("->"); arrow != std::string_view::npos) {
      rank_type from = detail::config_letter(
          item, detail::trim(item.substr(0, arrow)), index);
      std::string image(detail::trim(item.substr(arrow + 2)));
      for (auto [f, img] : rules)
        if (f == from)
          throw parse_error("duplicate image for letter '" +
                            std::string(1, char('a' + from - 1)) + "'", index);
      rules.emplace_back(from, std::move(image));
    } else if (item.starts_with("seed=")) {
      if (seed)
        throw parse_error("duplicate seed in generator config", index);
      seed = detail::config_letter(item, detail::trim(item.substr(5)), index);
    } else if (item.starts_with("periodic=")) {
      if (periodic_base)
        throw parse_error("duplicate periodic base", index);
      periodic_base = std::string(detail::trim(item.substr(9)));
    } else {
      throw parse_error("unrecognized generator config item \"" +
                        std::string(item) + "\"", index);
    }
  }

  if (periodic_base) {
    if (!rules.empty() || seed)
      throw parse_error(
          "periodic= cannot be combined with substitution rules or seed", 1);
    rank_type m = 0;
    for (char c : *periodic_base)
      if (c >= 'a' && c <= 'z')
        m = std::max(m, static_cast<rank_type>(c - 'a' + 1));
    if (m == 0) throw parse_error("periodic base is empty", 1);
    return make_periodic(std::move(name),
                         word::parse(*periodic_base, alphabet(m)));
  }

  if (rules.empty())
    throw parse_error("generator config has no substitution rules", 1);
  if (!seed) throw parse_error("generator config is missing seed=", 1);
  rank_type m = *seed;
  for (const auto& [from, image] : rules) {
    m = std::max(m, from);
    for (char c : image)
      if (c >= 'a' && c <= 'z')
        m = std::max(m, static_cast<rank_type>(c - 'a' + 1));
  }
  alphabet alpha(m);
  std::vector<std::optional<word>> slots(m);
  for (const auto& [from, image] : rules)
    slots[from - 1] = word::parse(image, alpha);
  std::vector<word> images;
  for (rank_type r = 1; r <= m; ++r) {
    if (!slots[r - 1])
      throw parse_error("letter '" + std::string(1, char('a' + r - 1)) +
                        "' appears in the config but has no image", 1);
    images.push_back(std::move(*slots[r - 1]));
  }
  return make_substitution(std::move(name), alpha, std::move(images), *seed);
}

}  // namespace wordkit

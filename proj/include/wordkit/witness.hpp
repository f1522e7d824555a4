#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wordkit/errors.hpp"
#include "wordkit/word.hpp"

namespace wordkit {

// Hard cap on the factorial permutation check: 8! = 40320 comparisons.
inline constexpr std::uint32_t max_decomposition_arity = 8;
// Cap on q for the exhaustive subword split search, which is much costlier
// than a single check.
inline constexpr std::uint32_t max_search_arity = 6;

// A non-trivial p-power occurrence: the subword at `pos` equals `base`
// repeated exactly `exponent` times, base non-empty.
struct power_witness {
  position pos;
  word base;
  std::uint32_t exponent;
};

// A (strongly) q-decomposable subword occurrence: the factors concatenate
// to the subword at `pos`, and the identity-order concatenation strictly
// deg-lex-dominates every other permutation's concatenation. When `strong`,
// additionally (q-1)*length(factor_i) < total length for every i.
struct decomp_witness {
  position pos;
  std::vector<word> factors;
  bool strong;
};

namespace detail {

// Borrowed slice of a rank buffer; lets the split searches test factor
// sequences without materializing words.
struct factor_view {
  const rank_type* data;
  std::size_t len;
};

// Compares concatenations of the same factors in two orders without
// materializing either side. Total lengths agree, so this is letterwise.
inline std::strong_ordering compare_factor_orders(
    std::span<const factor_view> fs, std::span<const std::uint32_t> lhs,
    std::span<const std::uint32_t> rhs) {
  std::size_t li = 0, lo = 0, ri = 0, ro = 0;
  for (;;) {
    while (li < lhs.size() && lo == fs[lhs[li]].len) {
      ++li;
      lo = 0;
    }
    while (ri < rhs.size() && ro == fs[rhs[ri]].len) {
      ++ri;
      ro = 0;
    }
    if (li == lhs.size() || ri == rhs.size())
      return std::strong_ordering::equal;
    auto c = compare_letters(fs[lhs[li]].data[lo], fs[rhs[ri]].data[ro]);
    if (c != std::strong_ordering::equal) return c;
    ++lo;
    ++ro;
  }
}

// Permutation loop shared by the public check and the searches. Assumes
// 2 <= q <= max_decomposition_arity and non-empty factors. Adjacent
// transpositions go first; they fail fast on almost every non-witness.
inline bool decomposition_holds(std::span<const factor_view> fs,
                                bool strong) {
  const std::uint32_t q = static_cast<std::uint32_t>(fs.size());
  std::uint32_t id[max_decomposition_arity];
  std::uint32_t perm[max_decomposition_arity];
  for (std::uint32_t i = 0; i < q; ++i) id[i] = perm[i] = i;
  const std::span<const std::uint32_t> id_span(id, q);

  if (strong) {
    std::size_t total = 0;
    for (const factor_view& f : fs) total += f.len;
    for (const factor_view& f : fs)
      if (!((q - 1) * f.len < total)) return false;
  }

  for (std::uint32_t i = 0; i + 1 < q; ++i) {
    std::swap(perm[i], perm[i + 1]);
    std::span<const std::uint32_t> p(perm, q);
    if (compare_factor_orders(fs, id_span, p) != std::strong_ordering::greater)
      return false;
    std::swap(perm[i], perm[i + 1]);
  }

  while (std::next_permutation(perm, perm + q)) {
    std::span<const std::uint32_t> p(perm, q);
    if (compare_factor_orders(fs, id_span, p) != std::strong_ordering::greater)
      return false;
  }
  return true;
}

inline bool decomposition_holds(const std::vector<word>& fs, bool strong) {
  std::vector<factor_view> views;
  views.reserve(fs.size());
  for (const word& f : fs) views.push_back({f.ranks().data(), f.length()});
  return decomposition_holds(std::span<const factor_view>(views), strong);
}

inline void validate_factors(const std::vector<word>& factors) {
  if (factors.size() < 2)
    throw parameter_error("a decomposition needs at least 2 factors, got " +
                          std::to_string(factors.size()));
  if (factors.size() > max_decomposition_arity)
    throw limit_error("decomposition arity " + std::to_string(factors.size()) +
                      " exceeds the permutation-check cap of " +
                      std::to_string(max_decomposition_arity));
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].empty())
      throw parameter_error("decomposition factor " + std::to_string(i + 1) +
                            " is empty");
    if (!(factors[i].alpha() == factors[0].alpha()))
      throw alphabet_mismatch("decomposition factors use different alphabets");
  }
}

inline void check_exponent(std::uint32_t p) {
  if (p < 2)
    throw parameter_error(
        "power exponent must be at least 2 (p = 1 would make every letter a "
        "witness), got " + std::to_string(p));
}

}  // namespace detail

// True iff the factor sequence, in the given order, is a valid (strongly)
// q-decomposition: all q!-1 strict inequalities hold, plus the length
// constraint when strong.
inline bool check_decomposition(const std::vector<word>& factors,
                                bool strong) {
  detail::validate_factors(factors);
  return detail::decomposition_holds(factors, strong);
}

// Straightforward scan: every start, every base length, letter-by-letter
// check. Kept as the standing oracle for the period-based scan below.
inline std::optional<power_witness> find_power_naive(const word& w,
                                                     std::uint32_t p) {
  detail::check_exponent(p);
  const auto& r = w.ranks();
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t b = 1; i + p * b <= n; ++b) {
      bool ok = true;
      for (std::size_t k = 0; ok && k < (p - 1) * b; ++k)
        ok = r[i + k] == r[i + b + k];
      if (ok)
        return power_witness{position{i + 1, i + p * b},
                             subword(w, position{i + 1, i + b}), p};
    }
  }
  return std::nullopt;
}

// Period-based scan. For each base length b one right-to-left pass yields,
// at every start, how far the word agrees with itself shifted by b; a
// p-power with that base starts wherever the agreement reaches (p-1)*b.
// Returns the leftmost witness, shortest base breaking ties, exactly like
// the naive scan.
inline std::optional<power_witness> find_power(const word& w,
                                               std::uint32_t p) {
  detail::check_exponent(p);
  const auto& r = w.ranks();
  const std::size_t n = r.size();
  if (n < p) return std::nullopt;

  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> best_base(n, none);
  std::vector<std::size_t> agree(n + 1);
  for (std::size_t b = 1; p * b <= n; ++b) {
    for (std::size_t i = n - b; i < n + 1; ++i) agree[i] = 0;
    for (std::size_t i = n - b; i-- > 0;)
      agree[i] = r[i] == r[i + b] ? agree[i + 1] + 1 : 0;
    for (std::size_t i = 0; i + p * b <= n; ++i)
      if (agree[i] >= (p - 1) * b && best_base[i] == none) best_base[i] = b;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (best_base[i] != none) {
      const std::size_t b = best_base[i];
      return power_witness{position{i + 1, i + p * b},
                           subword(w, position{i + 1, i + b}), p};
    }
  }
  return std::nullopt;
}

struct search_stats {
  std::uint64_t subwords_examined = 0;
  std::uint64_t splits_examined = 0;
};

// The exhaustive split search is exponential in q and quadratic in the word;
// both knobs below turn overruns into an explicit budget_exceeded outcome
// instead of a silent truncation.
struct decomp_search_options {
  std::size_t max_word_length = 200;
  std::uint64_t max_splits = 10'000'000;
};

struct decomp_search_result {
  std::optional<decomp_witness> witness;
  bool budget_exceeded = false;
  search_stats stats;
};

namespace detail {

// Enumerates the split vectors of data[0..len) into q non-empty parts in
// lexicographic order on (len_1, ..., len_{q-1}) and reports the first
// valid (strong) decomposition, materializing only the winning factors.
inline bool first_valid_split(const rank_type* data, std::size_t len,
                              const alphabet& alpha, std::uint32_t q,
                              bool strong, const decomp_search_options& opts,
                              search_stats& stats, bool& budget_hit,
                              std::vector<word>& out) {
  std::vector<std::size_t> lengths(q - 1, 1);
  std::vector<factor_view> views(q);
  for (;;) {
    if (stats.splits_examined >= opts.max_splits) {
      budget_hit = true;
      return false;
    }
    ++stats.splits_examined;
    std::size_t at = 0;
    for (std::uint32_t k = 0; k + 1 < q; ++k) {
      views[k] = {data + at, lengths[k]};
      at += lengths[k];
    }
    views[q - 1] = {data + at, len - at};
    if (decomposition_holds(std::span<const factor_view>(views), strong)) {
      out.clear();
      for (const factor_view& v : views)
        out.emplace_back(alpha,
                         std::vector<rank_type>(v.data, v.data + v.len));
      return true;
    }
    // odometer step: bump the last coordinate that still leaves room for
    // one letter per remaining factor, reset everything after it
    std::size_t k = q - 1;
    bool advanced = false;
    while (k-- > 0) {
      ++lengths[k];
      std::size_t fixed = 0;
      for (std::size_t j = 0; j <= k; ++j) fixed += lengths[j];
      if (fixed + (q - 1 - k) <= len) {
        advanced = true;
        break;
      }
      lengths[k] = 1;
    }
    if (!advanced) return false;
    for (std::size_t j = k + 1; j < lengths.size(); ++j) lengths[j] = 1;
  }
}

}  // namespace detail

// Bounded exhaustive search for a (strongly) q-decomposable subword.
// Deterministic order: leftmost start, then shortest subword, then
// lexicographically earliest split vector; the first valid split wins.
inline decomp_search_result find_decomposable_subword(
    const word& w, std::uint32_t q, bool strong,
    decomp_search_options opts = {}) {
  if (q < 2)
    throw parameter_error("decomposition arity must be at least 2, got " +
                          std::to_string(q));
  if (q > max_search_arity)
    throw limit_error("subword split search caps arity at " +
                      std::to_string(max_search_arity) + ", got " +
                      std::to_string(q));

  decomp_search_result result;
  if (w.length() > opts.max_word_length) {
    result.budget_exceeded = true;
    return result;
  }

  const rank_type* data = w.ranks().data();
  const std::size_t n = w.length();
  std::vector<word> factors;
  for (std::size_t i = 1; i + q - 1 <= n; ++i) {
    for (std::size_t j = i + q - 1; j <= n; ++j) {
      ++result.stats.subwords_examined;
      bool budget_hit = false;
      if (detail::first_valid_split(data + (i - 1), j - i + 1, w.alpha(), q,
                                    strong, opts, result.stats, budget_hit,
                                    factors)) {
        result.witness =
            decomp_witness{position{i, j}, std::move(factors), strong};
        return result;
      }
      if (budget_hit) {
        result.budget_exceeded = true;
        return result;
      }
    }
  }
  return result;
}

enum class outcome_kind { power, decomposition, none_found, budget_exceeded };

inline std::string to_string(outcome_kind k) {
  switch (k) {
    case outcome_kind::power: return "power";
    case outcome_kind::decomposition: return "decomposition";
    case outcome_kind::none_found: return "none";
    case outcome_kind::budget_exceeded: return "budget_exceeded";
  }
  return "none";
}

// Everything one analysis run produced, re-verifiable from the fields alone.
struct analysis_report {
  word input;
  std::uint32_t p = 2;
  std::uint32_t q = 2;
  bool strong_mode = false;
  bool exhaustive = false;

  outcome_kind outcome = outcome_kind::none_found;
  std::optional<power_witness> power;
  std::optional<decomp_witness> decomposition;
  bool decomposition_searched = false;
  search_stats stats;
};

// Runs the power scan first, then the split search. By default the split
// search is skipped once a power witness exists; `exhaustive` forces both
// so the report carries each side of the dichotomy independently.
inline analysis_report analyze(const word& w, std::uint32_t p, std::uint32_t q,
                               bool strong, bool exhaustive = false,
                               decomp_search_options opts = {}) {
  analysis_report report{w, p, q, strong, exhaustive};
  report.power = find_power(w, p);
  if (report.power && !exhaustive) {
    report.outcome = outcome_kind::power;
    return report;
  }
  auto search = find_decomposable_subword(w, q, strong, opts);
  report.decomposition_searched = true;
  report.decomposition = std::move(search.witness);
  report.stats = search.stats;
  if (report.power)
    report.outcome = outcome_kind::power;
  else if (report.decomposition)
    report.outcome = outcome_kind::decomposition;
  else if (search.budget_exceeded)
    report.outcome = outcome_kind::budget_exceeded;
  else
    report.outcome = outcome_kind::none_found;
  return report;
}

// Re-checks a claimed power witness from scratch with word-core primitives
// only. Never throws; any violation is a false.
inline bool verify_witness(const word& w, const power_witness& pw) {
  if (pw.base.empty() || pw.exponent < 2) return false;
  if (!(pw.base.alpha() == w.alpha())) return false;
  if (pw.pos.start < 1 || pw.pos.start > pw.pos.end || pw.pos.end > w.length())
    return false;
  if (pw.pos.length() != pw.base.length() * pw.exponent) return false;
  word repeated = pw.base;
  for (std::uint32_t k = 1; k < pw.exponent; ++k)
    repeated = concat(repeated, pw.base);
  return subword(w, pw.pos) == repeated;
}

// Same for a claimed decomposition witness: containment, factor equality,
// all permutation inequalities, and the strong length constraint when set.
inline bool verify_witness(const word& w, const decomp_witness& dw) {
  if (dw.factors.size() < 2 || dw.factors.size() > max_decomposition_arity)
    return false;
  for (const word& f : dw.factors)
    if (f.empty() || !(f.alpha() == w.alpha())) return false;
  if (dw.pos.start < 1 || dw.pos.start > dw.pos.end || dw.pos.end > w.length())
    return false;
  word cat(w.alpha());
  for (const word& f : dw.factors) cat = concat(cat, f);
  if (!(subword(w, dw.pos) == cat)) return false;
  return detail::decomposition_holds(dw.factors, dw.strong);
}

}  // namespace wordkit

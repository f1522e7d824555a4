#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "wordkit/errors.hpp"
#include "wordkit/morphic.hpp"
#include "wordkit/witness.hpp"
#include "wordkit/word.hpp"

namespace wordkit {

// One evaluated inequality (or equation) backing a certificate; lhs and rhs
// are the concrete numbers, `relation` the comparison between them.
struct inequality_entry {
  std::string label;
  std::uint64_t lhs = 0;
  std::string relation;
  std::uint64_t rhs = 0;
  bool holds = false;
};

// A checked witness that `source` contains a strongly q-decomposable
// subword, built by placing q marker subwords in evenly spaced windows.
// Every field is raw data; the verifier recomputes all claims from it.
struct strong_decomp_certificate {
  word source;
  std::uint32_t q = 2;
  std::size_t marker_length = 1;        // N
  std::vector<word> markers;            // strictly decreasing in deg-lex
  std::size_t recurrence_constant = 1;  // L: window size certified on source
  std::vector<std::size_t> positions;   // j_1..j_q, 1-based starts
  std::vector<word> factors;            // u_1..u_q
  std::vector<inequality_entry> inequalities;
};

// Smallest N at which the prefix has at least q distinct length-N factors,
// together with the q deg-lex-largest of them in strictly decreasing order.
inline std::pair<std::size_t, std::vector<word>> select_markers(
    const word& prefix, std::uint32_t q) {
  if (q < 1)
    throw parameter_error("marker count must be at least 1");
  const auto& r = prefix.ranks();
  const std::size_t len = prefix.length();
  std::size_t best_seen = 0;
  for (std::size_t n = 1; n <= len && len - n + 1 >= q; ++n) {
    std::vector<std::size_t> starts(len - n + 1);
    std::iota(starts.begin(), starts.end(), std::size_t{0});
    auto factor_less = [&](std::size_t a, std::size_t b) {
      return std::lexicographical_compare(r.begin() + a, r.begin() + a + n,
                                          r.begin() + b, r.begin() + b + n);
    };
    std::sort(starts.begin(), starts.end(), factor_less);
    std::vector<std::size_t> distinct{starts[0]};
    for (std::size_t k = 1; k < starts.size(); ++k)
      if (factor_less(starts[k - 1], starts[k])) distinct.push_back(starts[k]);
    best_seen = std::max(best_seen, distinct.size());
    if (distinct.size() >= q) {
      // ascending letterwise rank order is descending deg-lex on equal
      // lengths: rank 1 is the greatest letter
      std::vector<word> markers;
      for (std::size_t k = 0; k < q; ++k)
        markers.push_back(subword(prefix, position{distinct[k] + 1,
                                                   distinct[k] + n}));
      return {n, std::move(markers)};
    }
  }
  throw insufficient_complexity(
      "the prefix never shows " + std::to_string(q) +
      " distinct factors of any one length (best: " +
      std::to_string(best_seen) + ")");
}

// Smallest window size L such that every length-L window of the prefix
// contains every marker; the per-marker minima are independent, so this is
// their maximum. Each marker must occur at least twice.
inline std::size_t estimate_recurrence_constant(
    const word& prefix, const std::vector<word>& markers) {
  if (markers.empty())
    throw parameter_error("marker list is empty");
  std::size_t best = 0;
  for (const word& marker : markers) {
    recurrence_profile profile = recurrence(prefix, marker);
    best = std::max(best, *profile.window_constant);
  }
  return best;
}

namespace detail {

// The evaluated record for a certificate's numbers, in a fixed order: the
// verifier rebuilds this and compares. Factor lengths are passed separately
// so the builder needs no access to the words.
inline std::vector<inequality_entry> build_inequalities(
    std::uint32_t q, std::size_t L, const std::vector<std::size_t>& j,
    const std::vector<std::size_t>& factor_lengths) {
  std::vector<inequality_entry> out;
  auto push = [&](std::string label, std::uint64_t lhs, std::string rel,
                  std::uint64_t rhs) {
    bool holds = rel == "<"    ? lhs < rhs
                 : rel == "<=" ? lhs <= rhs
                 : rel == ">"  ? lhs > rhs
                 : rel == ">=" ? lhs >= rhs
                               : lhs == rhs;
    out.push_back({std::move(label), lhs, std::move(rel), rhs, holds});
  };

  const std::uint64_t cap = static_cast<std::uint64_t>(L) * (2 * q + 1);
  std::uint64_t total = 0;
  for (std::size_t len : factor_lengths) total += len;

  for (std::uint32_t i = 1; i <= q; ++i) {
    const std::uint64_t lo = 2ull * L * q * (i - 1) + 1;
    push("window_lower(j_" + std::to_string(i) + ")", j[i - 1], ">=", lo);
    push("window_upper(j_" + std::to_string(i) + ")", j[i - 1], "<=",
         lo + L);
  }
  push("head(j_1)", j[0], "<=", L);
  push("tail(j_" + std::to_string(q) + ")", j[q - 1], ">=",
       2ull * L * q * (q - 1) + 1);
  for (std::uint32_t i = 1; i <= q; ++i)
    push("factor_cap(u_" + std::to_string(i) + ")", factor_lengths[i - 1],
         "<", cap);
  push("length_equation", total,
       "==", 2ull * L * q + j[q - 1] - j[0] + 1);
  push("length_lower_bound", total,
       ">=", static_cast<std::uint64_t>(L) * (2ull * q * q - 1) + 1);
  push("chain_middle", static_cast<std::uint64_t>(L) * (2ull * q * q - 1) + 1,
       ">", static_cast<std::uint64_t>(q - 1) * cap);
  for (std::uint32_t i = 1; i <= q; ++i)
    push("chain_end(u_" + std::to_string(i) + ")",
         static_cast<std::uint64_t>(q - 1) * cap, ">",
         static_cast<std::uint64_t>(q - 1) * factor_lengths[i - 1]);
  for (std::uint32_t i = 1; i <= q; ++i)
    push("strong_constraint(u_" + std::to_string(i) + ")",
         static_cast<std::uint64_t>(q - 1) * factor_lengths[i - 1], "<",
         total);
  return out;
}

}  // namespace detail

struct certificate_check {
  bool ok = true;
  std::string first_violation;
};

// From-scratch validation of a certificate: shape, marker order, window
// containment, occurrence and slice equality, every recorded inequality,
// and the strong decomposition check on the factors. Stops at the first
// violated clause and names it.
inline certificate_check verify_certificate_detailed(
    const strong_decomp_certificate& cert) {
  auto fail = [](std::string clause) {
    return certificate_check{false, std::move(clause)};
  };

  const std::uint32_t q = cert.q;
  if (q < 2 || q > max_decomposition_arity)
    return fail("factor count outside [2, " +
                std::to_string(max_decomposition_arity) + "]");
  if (cert.markers.size() != q || cert.positions.size() != q ||
      cert.factors.size() != q)
    return fail("markers, positions, and factors must all have q entries");
  const std::size_t N = cert.marker_length;
  const std::size_t L = cert.recurrence_constant;
  if (N < 1 || L < 1) return fail("marker length and window size must be >= 1");
  const std::size_t len = cert.source.length();

  for (std::uint32_t i = 0; i < q; ++i) {
    if (cert.markers[i].length() != N)
      return fail("marker_length(w_" + std::to_string(i + 1) + ")");
    if (!(cert.markers[i].alpha() == cert.source.alpha()))
      return fail("marker_alphabet(w_" + std::to_string(i + 1) + ")");
  }
  for (std::uint32_t i = 0; i + 1 < q; ++i)
    if (compare_deglex(cert.markers[i], cert.markers[i + 1]) !=
        std::strong_ordering::greater)
      return fail("marker_order(w_" + std::to_string(i + 1) + ", w_" +
                  std::to_string(i + 2) + ")");

  for (std::uint32_t i = 0; i < q; ++i) {
    const std::size_t lo = 2 * L * q * i + 1;
    const std::size_t j = cert.positions[i];
    if (j < lo || j > lo + L)
      return fail("window(j_" + std::to_string(i + 1) + ")");
    if (j + N - 1 > len)
      return fail("marker_bounds(j_" + std::to_string(i + 1) + ")");
    if (!(subword(cert.source, position{j, j + N - 1}) == cert.markers[i]))
      return fail("marker_at(j_" + std::to_string(i + 1) + ")");
  }

  for (std::uint32_t i = 0; i + 1 < q; ++i) {
    if (cert.positions[i + 1] <= cert.positions[i])
      return fail("position_order(j_" + std::to_string(i + 1) + ", j_" +
                  std::to_string(i + 2) + ")");
    position span{cert.positions[i], cert.positions[i + 1] - 1};
    if (!(subword(cert.source, span) == cert.factors[i]))
      return fail("factor_slice(u_" + std::to_string(i + 1) + ")");
  }
  const std::size_t tail_end = cert.positions[q - 1] + 2 * L * q;
  if (tail_end > len) return fail("factor_bounds(u_" + std::to_string(q) + ")");
  if (!(subword(cert.source, position{cert.positions[q - 1], tail_end}) ==
        cert.factors[q - 1]))
    return fail("factor_slice(u_" + std::to_string(q) + ")");

  std::vector<std::size_t> factor_lengths;
  for (const word& f : cert.factors) factor_lengths.push_back(f.length());
  const auto expected =
      detail::build_inequalities(q, L, cert.positions, factor_lengths);
  for (const auto& entry : expected)
    if (!entry.holds) return fail(entry.label);
  if (cert.inequalities.size() != expected.size())
    return fail("inequality_record_size");
  for (std::size_t k = 0; k < expected.size(); ++k) {
    const auto& a = cert.inequalities[k];
    const auto& b = expected[k];
    if (a.label != b.label || a.lhs != b.lhs || a.relation != b.relation ||
        a.rhs != b.rhs || a.holds != b.holds)
      return fail("inequality_record(" + b.label + ")");
  }

  if (!check_decomposition(cert.factors, /*strong=*/true))
    return fail("decomposition");
  return {};
}

inline bool verify_certificate(const strong_decomp_certificate& cert) {
  return verify_certificate_detailed(cert).ok;
}

// Builds the certificate on a concrete prefix: pick markers, certify a
// window size, place each marker at its leftmost occurrence inside its
// window, slice the factors, and self-verify before returning.
inline strong_decomp_certificate construct(const word& prefix,
                                           std::uint32_t q) {
  if (q < 2)
    throw parameter_error("factor count must be at least 2, got " +
                          std::to_string(q));
  if (q > max_decomposition_arity)
    throw limit_error("factor count " + std::to_string(q) +
                      " exceeds the decomposition cap of " +
                      std::to_string(max_decomposition_arity));

  auto [N, markers] = select_markers(prefix, q);
  const std::size_t L = estimate_recurrence_constant(prefix, markers);
  const std::size_t required = 2 * L * q * (q - 1) + L + 1 + 2 * L * q + N;
  if (prefix.length() < required)
    throw prefix_too_short("prefix of length " +
                               std::to_string(prefix.length()) +
                               " is too short; the placement needs " +
                               std::to_string(required) + " letters",
                           required);

  std::vector<std::size_t> j;
  for (std::uint32_t i = 0; i < q; ++i) {
    const std::size_t window_start = 2 * L * q * i + 1;
    const auto occ = occurrences(prefix, markers[i],
                                 position{window_start, window_start + L - 1});
    if (occ.empty())
      throw construction_failed(
          "marker \"" + markers[i].render() + "\" missing from window [" +
              std::to_string(window_start) + ", " +
              std::to_string(window_start + L - 1) +
              "], contradicting the certified window size",
          "window(j_" + std::to_string(i + 1) + ")");
    j.push_back(occ.front());
  }

  strong_decomp_certificate cert{prefix, q, N, std::move(markers), L, j, {}};
  for (std::uint32_t i = 0; i + 1 < q; ++i)
    cert.factors.push_back(subword(prefix, position{j[i], j[i + 1] - 1}));
  cert.factors.push_back(
      subword(prefix, position{j[q - 1], j[q - 1] + 2 * L * q}));

  std::vector<std::size_t> factor_lengths;
  for (const word& f : cert.factors) factor_lengths.push_back(f.length());
  cert.inequalities = detail::build_inequalities(q, L, j, factor_lengths);

  const certificate_check check = verify_certificate_detailed(cert);
  if (!check.ok)
    throw construction_failed("emitted certificate failed self-verification",
                              check.first_violation);
  return cert;
}

struct auto_sizing {
  std::size_t scout = 256;
  std::size_t max_rounds = 12;
};

// Sizes the prefix by iterating the length requirement: measure markers and
// window size on the current prefix, recompute the needed length, repeat
// until it stabilizes, then build on the stabilized prefix.
inline strong_decomp_certificate construct_auto(const generator& gen,
                                                std::uint32_t q,
                                                auto_sizing opts = {}) {
  if (q < 2)
    throw parameter_error("factor count must be at least 2, got " +
                          std::to_string(q));
  if (q > max_decomposition_arity)
    throw limit_error("factor count " + std::to_string(q) +
                      " exceeds the decomposition cap of " +
                      std::to_string(max_decomposition_arity));
  std::size_t len = opts.scout;
  for (std::size_t round = 0; round < opts.max_rounds; ++round) {
    const word w = prefix(gen, len);
    auto [N, markers] = select_markers(w, q);
    const std::size_t L = estimate_recurrence_constant(w, markers);
    const std::size_t required = 2 * L * q * (q - 1) + L + 1 + 2 * L * q + N;
    if (required == len) return construct(w, q);
    len = required;
  }
  throw construction_failed("prefix sizing did not stabilize after " +
                                std::to_string(opts.max_rounds) + " rounds",
                            "sizing");
}

}  // namespace wordkit

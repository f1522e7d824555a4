#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "wordkit/errors.hpp"
#include "wordkit/witness.hpp"
#include "wordkit/word.hpp"

namespace wordkit {

inline constexpr std::size_t max_frontier_exemplars = 16;

struct search_budget {
  std::size_t max_depth = 64;
  std::uint64_t max_nodes = 10'000'000;
};

// Outcome of the empirical avoidance scan: the longest word over m letters
// with neither a p-power nor a (strongly) q-decomposable subword, plus the
// thereby implied bound (one more than that length). `exhausted` marks a
// proof: every longer word was shown to contain a witness, rather than the
// search merely running out of budget or depth.
struct bound_report {
  std::uint32_t m = 1;
  std::uint32_t p = 2;
  std::uint32_t q = 2;
  bool strong_mode = false;

  std::size_t longest_witness_free_length = 0;
  std::vector<word> exemplars;
  std::size_t empirical_bound = 1;
  bool exhausted = false;

  std::uint64_t nodes_visited = 0;
  // entry i counts the words of length i+1 the search examined
  std::vector<std::uint64_t> nodes_per_depth;
};

namespace detail {

inline decomp_search_options unbounded_split_options() {
  return decomp_search_options{static_cast<std::size_t>(-1),
                               static_cast<std::uint64_t>(-1)};
}

inline bool any_valid_split(const rank_type* data, std::size_t len,
                            const alphabet& alpha, std::uint32_t q,
                            bool strong) {
  search_stats st;
  bool budget_hit = false;
  std::vector<word> out;
  return first_valid_split(data, len, alpha, q, strong,
                           unbounded_split_options(), st, budget_hit, out);
}

inline void check_search_arity(std::uint32_t q, std::size_t reachable_len) {
  if (q > max_decomposition_arity && reachable_len >= q)
    throw limit_error(
        "decomposition checks cap the arity at " +
        std::to_string(max_decomposition_arity) + ", but the search reached "
        "a word of length " + std::to_string(reachable_len) +
        " with q = " + std::to_string(q));
}

// Every proper prefix of r is already known witness-free, so only witnesses
// ending at the last letter need checking.
inline bool suffix_has_witness(const std::vector<rank_type>& r,
                               const alphabet& alpha, std::uint32_t p,
                               std::uint32_t q, bool strong) {
  const std::size_t len = r.size();
  for (std::size_t b = 1; p * b <= len; ++b) {
    const std::size_t start = len - p * b;
    bool ok = true;
    for (std::size_t i = start; ok && i + b < len; ++i) ok = r[i] == r[i + b];
    if (ok) return true;
  }
  if (len >= q) {
    check_search_arity(q, len);
    for (std::size_t i = 0; i + q <= len; ++i)
      if (any_valid_split(r.data() + i, len - i, alpha, q, strong))
        return true;
  }
  return false;
}

// Non-incremental witness detection, used only to double-check results.
inline bool contains_witness_full(const word& w, std::uint32_t p,
                                  std::uint32_t q, bool strong) {
  if (find_power(w, p)) return true;
  const std::size_t n = w.length();
  if (n < q) return false;
  check_search_arity(q, n);
  const rank_type* data = w.ranks().data();
  for (std::size_t i = 0; i + q <= n; ++i)
    for (std::size_t j = i + q; j <= n; ++j)
      if (any_valid_split(data + i, j - i, w.alpha(), q, strong)) return true;
  return false;
}

struct subtree_result {
  std::size_t deepest = 0;
  std::vector<word> exemplars;
  std::uint64_t nodes = 0;
  std::vector<std::uint64_t> nodes_per_depth;
  bool budget_hit = false;
};

// Depth-first scan of all witness-free words starting with `root`, children
// in rank order so the traversal is reproducible. The node budget is per
// subtree; results are independent of how subtrees are scheduled.
inline void run_subtree(const alphabet& alpha, std::uint32_t p,
                        std::uint32_t q, bool strong,
                        const search_budget& budget, rank_type root,
                        std::uint64_t node_budget, subtree_result& out) {
  std::vector<rank_type> cur;
  std::vector<rank_type> next_rank;

  auto enter = [&](rank_type r) {
    cur.push_back(r);
    ++out.nodes;
    if (out.nodes_per_depth.size() < cur.size())
      out.nodes_per_depth.resize(cur.size(), 0);
    ++out.nodes_per_depth[cur.size() - 1];
    if (suffix_has_witness(cur, alpha, p, q, strong)) {
      cur.pop_back();
      return false;
    }
    if (cur.size() > out.deepest) {
      out.deepest = cur.size();
      out.exemplars.clear();
    }
    if (cur.size() == out.deepest &&
        out.exemplars.size() < max_frontier_exemplars)
      out.exemplars.emplace_back(alpha, cur);
    return true;
  };

  if (out.nodes >= node_budget) {
    out.budget_hit = true;
    return;
  }
  if (!enter(root)) return;
  if (budget.max_depth <= 1) return;
  next_rank.push_back(1);
  while (!next_rank.empty()) {
    rank_type r = next_rank.back();
    if (r > alpha.size) {
      next_rank.pop_back();
      cur.pop_back();
      continue;
    }
    ++next_rank.back();
    if (out.nodes >= node_budget) {
      out.budget_hit = true;
      return;
    }
    if (enter(r)) {
      if (cur.size() < budget.max_depth)
        next_rank.push_back(1);
      else
        cur.pop_back();
    }
  }
}

}  // namespace detail

// Backtracking avoidance search over all words on m letters. Same report
// for any thread count: subtrees get equal node budgets and are merged in
// rank order after all of them finish.
inline bound_report longest_witness_free(std::uint32_t m, std::uint32_t p,
                                         std::uint32_t q, bool strong,
                                         search_budget budget = {},
                                         unsigned threads = 1) {
  alphabet alpha(m);
  detail::check_exponent(p);
  if (q < 2)
    throw parameter_error("decomposition arity must be at least 2, got " +
                          std::to_string(q));
  if (budget.max_depth < 1)
    throw parameter_error("search depth cap must be at least 1");
  if (threads < 1)
    throw parameter_error("thread count must be at least 1");

  const std::uint64_t per_subtree = budget.max_nodes / m;
  std::vector<detail::subtree_result> results(m);
  std::vector<std::exception_ptr> errors(m);

  auto work = [&](std::size_t idx) {
    try {
      detail::run_subtree(alpha, p, q, strong, budget,
                          static_cast<rank_type>(idx + 1), per_subtree,
                          results[idx]);
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  };

  if (threads == 1 || m == 1) {
    for (std::size_t idx = 0; idx < m; ++idx) work(idx);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const unsigned count = std::min<unsigned>(threads, m);
    for (unsigned t = 0; t < count; ++t)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t idx = next.fetch_add(1);
          if (idx >= m) return;
          work(idx);
        }
      });
    for (std::thread& t : pool) t.join();
  }
  for (std::size_t idx = 0; idx < m; ++idx)
    if (errors[idx]) std::rethrow_exception(errors[idx]);

  bound_report report;
  report.m = m;
  report.p = p;
  report.q = q;
  report.strong_mode = strong;
  bool any_budget_hit = false;
  for (const auto& r : results) {
    report.nodes_visited += r.nodes;
    if (report.nodes_per_depth.size() < r.nodes_per_depth.size())
      report.nodes_per_depth.resize(r.nodes_per_depth.size(), 0);
    for (std::size_t d = 0; d < r.nodes_per_depth.size(); ++d)
      report.nodes_per_depth[d] += r.nodes_per_depth[d];
    report.longest_witness_free_length =
        std::max(report.longest_witness_free_length, r.deepest);
    any_budget_hit = any_budget_hit || r.budget_hit;
  }
  for (const auto& r : results) {
    if (r.deepest != report.longest_witness_free_length) continue;
    for (const word& w : r.exemplars) {
      if (report.exemplars.size() >= max_frontier_exemplars) break;
      report.exemplars.push_back(w);
    }
  }
  report.empirical_bound = report.longest_witness_free_length + 1;
  report.exhausted =
      !any_budget_hit &&
      report.longest_witness_free_length < budget.max_depth;
  return report;
}

// Guard for the exhaustive cross-check below; m^(longest+1) words get
// re-analyzed from scratch.
inline constexpr std::uint64_t max_frontier_recheck = 1u << 24;

// Independent validation of a bound report: exemplars must have the claimed
// length and survive a from-scratch witness scan; when the report claims
// exhaustion, every word one letter longer must fail one.
inline bool verify_frontier(const bound_report& report) {
  alphabet alpha(report.m);
  if (report.empirical_bound != report.longest_witness_free_length + 1)
    return false;
  if (report.exemplars.empty()) return false;
  for (const word& w : report.exemplars) {
    if (!(w.alpha() == alpha)) return false;
    if (w.length() != report.longest_witness_free_length) return false;
    if (detail::contains_witness_full(w, report.p, report.q,
                                      report.strong_mode))
      return false;
  }
  if (!report.exhausted) return true;

  const std::size_t len = report.empirical_bound;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < len; ++i) {
    total *= report.m;
    if (total > max_frontier_recheck)
      throw limit_error("frontier recheck would enumerate more than " +
                        std::to_string(max_frontier_recheck) + " words");
  }
  std::vector<rank_type> ranks(len, 1);
  for (;;) {
    if (!detail::contains_witness_full(word(alpha, ranks), report.p, report.q,
                                       report.strong_mode))
      return false;
    std::size_t k = len;
    while (k > 0 && ranks[k - 1] == report.m) ranks[--k] = 1;
    if (k == 0) break;
    ++ranks[k - 1];
  }
  return true;
}

}  // namespace wordkit

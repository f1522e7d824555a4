#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wordkit/errors.hpp"

namespace wordkit {

// All identity checks are exact zero/nonzero decisions; no floating point
// appears anywhere in this module.
using rational = boost::multiprecision::cpp_rational;

class exact_matrix {
 public:
  explicit exact_matrix(std::size_t n) : n_(n), entries_(n * n) {
    if (n < 1) throw parameter_error("matrix dimension must be at least 1");
  }

  std::size_t dim() const { return n_; }

  rational& operator()(std::size_t row, std::size_t col) {
    return entries_[index(row, col)];
  }
  const rational& operator()(std::size_t row, std::size_t col) const {
    return entries_[index(row, col)];
  }

  static exact_matrix identity(std::size_t n) {
    exact_matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  // e_{row,col} in the usual 1-based matrix-unit notation
  static exact_matrix unit(std::size_t n, std::size_t row, std::size_t col) {
    exact_matrix m(n);
    if (row < 1 || row > n || col < 1 || col > n)
      throw bounds_error("matrix unit indices must lie in [1, " +
                         std::to_string(n) + "]");
    m(row - 1, col - 1) = 1;
    return m;
  }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const rational& v) { return v == 0; });
  }

  friend exact_matrix operator+(const exact_matrix& a, const exact_matrix& b) {
    check_same_dim(a, b);
    exact_matrix out(a.n_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
      out.entries_[k] = a.entries_[k] + b.entries_[k];
    return out;
  }

  friend exact_matrix operator-(const exact_matrix& a, const exact_matrix& b) {
    check_same_dim(a, b);
    exact_matrix out(a.n_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
      out.entries_[k] = a.entries_[k] - b.entries_[k];
    return out;
  }

  friend exact_matrix operator*(const exact_matrix& a, const exact_matrix& b) {
    check_same_dim(a, b);
    exact_matrix out(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        const rational& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < a.n_; ++j)
          out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend exact_matrix operator*(const rational& s, const exact_matrix& a) {
    exact_matrix out(a.n_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
      out.entries_[k] = s * a.entries_[k];
    return out;
  }

  friend bool operator==(const exact_matrix& a, const exact_matrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t index(std::size_t row, std::size_t col) const {
    if (row >= n_ || col >= n_)
      throw bounds_error("matrix entry (" + std::to_string(row) + ", " +
                         std::to_string(col) + ") outside dimension " +
                         std::to_string(n_));
    return row * n_ + col;
  }

  static void check_same_dim(const exact_matrix& a, const exact_matrix& b) {
    if (a.n_ != b.n_)
      throw dimension_mismatch("matrix dimensions " + std::to_string(a.n_) +
                               " and " + std::to_string(b.n_) + " differ");
  }

  std::size_t n_;
  std::vector<rational> entries_;
};

inline constexpr std::uint32_t max_identity_degree = 8;

namespace detail {

inline int permutation_sign(std::span<const std::uint32_t> perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace detail

// The signed sum over all C! orderings of the arguments, C = args.size().
inline exact_matrix standard_polynomial(std::span<const exact_matrix> args) {
  const std::size_t count = args.size();
  if (count < 1)
    throw parameter_error("standard polynomial needs at least one argument");
  if (count > max_identity_degree)
    throw limit_error("standard polynomial degree " + std::to_string(count) +
                      " exceeds the cap of " +
                      std::to_string(max_identity_degree) + " (" +
                      std::to_string(count) + "! terms)");
  const std::size_t n = args[0].dim();
  for (const exact_matrix& m : args)
    if (m.dim() != n)
      throw dimension_mismatch("standard polynomial arguments have dimensions " +
                               std::to_string(n) + " and " +
                               std::to_string(m.dim()));

  std::vector<std::uint32_t> perm(count);
  std::iota(perm.begin(), perm.end(), 0u);
  exact_matrix sum(n);
  do {
    exact_matrix term = args[perm[0]];
    for (std::size_t k = 1; k < count; ++k) term = term * args[perm[k]];
    if (detail::permutation_sign(perm) > 0)
      sum = sum + term;
    else
      sum = sum - term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

inline exact_matrix standard_polynomial(
    std::initializer_list<exact_matrix> args) {
  return standard_polynomial(
      std::span<const exact_matrix>(args.begin(), args.size()));
}

struct identity_report {
  std::uint32_t degree = 2;     // 2n, the vanishing identity tested
  std::uint32_t dimension = 1;  // n
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  bool all_vanished = false;
  std::optional<std::vector<exact_matrix>> counterexample;
  // witness that degree 2n-1 does NOT vanish: a matrix-unit tuple with
  // nonzero value, if one exists
  std::uint32_t lower_degree = 1;
  std::optional<std::vector<exact_matrix>> lower_witness;
};

// Evaluates s_{2n} on `trials` pseudo-random n-by-n integer matrices
// (entries in [-3, 3], fixed seed) expecting zero every time, then searches
// matrix-unit tuples for an s_{2n-1} nonzero witness. Raw engine draws are
// mapped by modulo so the stream depends only on the seed.
inline identity_report amitsur_levitzski_check(std::uint32_t n,
                                               std::uint64_t trials,
                                               std::uint64_t seed = 42) {
  if (n < 1) throw parameter_error("dimension must be at least 1");
  if (n > 2)
    throw limit_error("dimension " + std::to_string(n) +
                      " exceeds the cap of 2 (degree 2n stays within the " +
                      std::to_string(max_identity_degree) + "! budget)");
  if (trials < 1) throw parameter_error("trial count must be at least 1");

  identity_report report;
  report.degree = 2 * n;
  report.dimension = n;
  report.trials = trials;
  report.seed = seed;
  report.lower_degree = 2 * n - 1;

  std::mt19937_64 rng(seed);
  auto small_entry = [&rng]() {
    return rational(static_cast<std::int64_t>(rng() % 7) - 3);
  };

  report.all_vanished = true;
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::vector<exact_matrix> tuple;
    for (std::uint32_t k = 0; k < 2 * n; ++k) {
      exact_matrix m(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = small_entry();
      tuple.push_back(std::move(m));
    }
    if (!standard_polynomial(std::span<const exact_matrix>(tuple)).is_zero()) {
      report.all_vanished = false;
      report.counterexample = std::move(tuple);
      break;
    }
  }

  // lexicographic scan over unit tuples; first nonzero value wins
  std::vector<exact_matrix> units;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      units.push_back(exact_matrix::unit(n, i, j));
  const std::size_t arity = 2 * n - 1;
  std::vector<std::size_t> pick(arity, 0);
  for (;;) {
    std::vector<exact_matrix> tuple;
    for (std::size_t idx : pick) tuple.push_back(units[idx]);
    if (!standard_polynomial(std::span<const exact_matrix>(tuple)).is_zero()) {
      report.lower_witness = std::move(tuple);
      break;
    }
    std::size_t k = arity;
    while (k > 0 && pick[k - 1] == units.size() - 1) pick[--k] = 0;
    if (k == 0) break;
    ++pick[k - 1];
  }
  return report;
}

struct spanning_bound {
  std::uint64_t dimension_bound = 1;  // 1 + m + ... + m^N
  std::uint64_t degree = 2;           // twice the bound
};

// Count of words of length at most N over m letters, and twice that count
// (the degree at which the standard identity is forced on the span).
inline spanning_bound spanning_constant(std::uint32_t m, std::uint32_t N) {
  if (m < 1) throw parameter_error("alphabet size must be at least 1");
  std::uint64_t sum = 0;
  std::uint64_t power = 1;  // m^k
  for (std::uint32_t k = 0; k <= N; ++k) {
    if (__builtin_add_overflow(sum, power, &sum))
      throw arithmetic_overflow("word count 1+m+...+m^N overflows 64 bits");
    if (k < N && __builtin_mul_overflow(power, m, &power))
      throw arithmetic_overflow("m^" + std::to_string(k + 1) +
                                " overflows 64 bits");
  }
  std::uint64_t degree;
  if (__builtin_mul_overflow(sum, std::uint64_t{2}, &degree))
    throw arithmetic_overflow("2*(1+m+...+m^N) overflows 64 bits");
  return spanning_bound{sum, degree};
}

}  // namespace wordkit

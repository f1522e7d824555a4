#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "wordkit/word.hpp"

using namespace wordkit;

namespace {

word bw(const std::string& text, rank_type m = 2) {
  return word::parse(text, alphabet{m});
}

int to_int(std::strong_ordering o) {
  if (o == std::strong_ordering::greater) return 1;
  if (o == std::strong_ordering::less) return -1;
  return 0;
}

}  // namespace

TEST_CASE("alphabet bounds", "[word]") {
  CHECK_NOTHROW(alphabet{1});
  CHECK_NOTHROW(alphabet{26});
  CHECK_THROWS_AS(alphabet{0}, parameter_error);
  CHECK_THROWS_AS(alphabet{27}, parameter_error);
}

TEST_CASE("parse and render round trip", "[word]") {
  const std::string text = "abbabaab";
  word w = bw(text);
  CHECK(w.render() == text);
  CHECK(w.length() == 8);
  CHECK_FALSE(w.empty());
  CHECK(w.alpha().size == 2);

  word empty = bw("");
  CHECK(empty.render().empty());
  CHECK(empty.empty());
  CHECK(empty.length() == 0);

  word z = word::parse("z", alphabet{26});
  CHECK(z.at(1) == 26);
  CHECK(z.render() == "z");
}

TEST_CASE("parse rejects letters outside the alphabet", "[word]") {
  try {
    word::parse("abd", alphabet{3});
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.index == 3);
  }
  CHECK_THROWS_AS(word::parse("aBa", alphabet{2}), parse_error);
  CHECK_THROWS_AS(word::parse("a b", alphabet{2}), parse_error);
  CHECK_NOTHROW(word::parse("abd", alphabet{4}));
}

TEST_CASE("letter access is 1-based", "[word]") {
  word w = bw("ab");
  CHECK(w.at(1) == 1);
  CHECK(w.at(2) == 2);
  CHECK_THROWS_AS(w.at(0), bounds_error);
  CHECK_THROWS_AS(w.at(3), bounds_error);
}

TEST_CASE("rank vector constructor validates ranks", "[word]") {
  CHECK_NOTHROW(word(alphabet{2}, {1, 2, 1}));
  CHECK_THROWS_AS(word(alphabet{2}, {1, 3}), parameter_error);
  CHECK_THROWS_AS(word(alphabet{2}, {0}), parameter_error);
}

TEST_CASE("deg-lex comparison places rank 1 on top", "[word][order]") {
  // longer word always greater
  CHECK(compare_deglex(bw(""), bw("a")) == std::strong_ordering::less);
  CHECK(compare_deglex(bw("ba"), bw("abb")) == std::strong_ordering::less);
  // same length: 'a' beats 'b' letterwise
  CHECK(compare_deglex(bw("ab"), bw("ba")) == std::strong_ordering::greater);
  CHECK(compare_deglex(bw("aa"), bw("ab")) == std::strong_ordering::greater);
  CHECK(compare_deglex(bw("ab"), bw("ab")) == std::strong_ordering::equal);
  // the empty word is the unique minimum
  CHECK(compare_deglex(bw(""), bw("")) == std::strong_ordering::equal);
}

TEST_CASE("deg-lex agrees with the reference comparator", "[word][order]") {
  std::mt19937_64 rng(7);
  alphabet a3{3};
  for (int trial = 0; trial < 4000; ++trial) {
    std::string s = testref::random_string(rng, 3, 0, 8);
    std::string t = testref::random_string(rng, 3, 0, 8);
    int got = to_int(compare_deglex(word::parse(s, a3), word::parse(t, a3)));
    CHECK(got == testref::deglex_cmp(s, t));
  }
}

TEST_CASE("deg-lex order axioms hold on random triples", "[word][order]") {
  std::mt19937_64 rng(11);
  alphabet a3{3};
  for (int trial = 0; trial < 1000; ++trial) {
    word u = word::parse(testref::random_string(rng, 3, 0, 10), a3);
    word v = word::parse(testref::random_string(rng, 3, 0, 10), a3);
    word w = word::parse(testref::random_string(rng, 3, 0, 10), a3);

    // antisymmetry
    CHECK(to_int(compare_deglex(u, v)) == -to_int(compare_deglex(v, u)));
    // equality only for equal words
    if (compare_deglex(u, v) == std::strong_ordering::equal) CHECK(u == v);
    // transitivity across the triple
    if (to_int(compare_deglex(u, v)) <= 0 && to_int(compare_deglex(v, w)) <= 0)
      CHECK(to_int(compare_deglex(u, w)) <= 0);
  }
}

TEST_CASE("deglex_less sorts descending rank first", "[word][order]") {
  std::vector<word> ws{bw("ba"), bw("a"), bw("ab"), bw(""), bw("b")};
  std::sort(ws.begin(), ws.end(), deglex_less{});
  std::vector<std::string> rendered;
  for (const auto& w : ws) rendered.push_back(w.render());
  CHECK(rendered == std::vector<std::string>{"", "b", "a", "ba", "ab"});
}

TEST_CASE("compare_deglex requires matching alphabets", "[word][order]") {
  CHECK_THROWS_AS(compare_deglex(bw("a", 2), bw("a", 3)), alphabet_mismatch);
}

TEST_CASE("subword uses closed 1-based positions", "[word]") {
  word w = bw("abbab");
  CHECK(subword(w, position{1, 5}).render() == "abbab");
  CHECK(subword(w, position{2, 3}).render() == "bb");
  CHECK(subword(w, position{4, 4}).render() == "a");
  CHECK(position{2, 3}.length() == 2);

  CHECK_THROWS_AS(subword(w, position{0, 2}), bounds_error);
  CHECK_THROWS_AS(subword(w, position{3, 2}), bounds_error);
  CHECK_THROWS_AS(subword(w, position{4, 6}), bounds_error);
}

TEST_CASE("occurrences finds all 1-based starts", "[word]") {
  word w = bw("ababa");
  CHECK(occurrences(w, bw("aba")) == std::vector<std::size_t>{1, 3});
  CHECK(occurrences(w, bw("b")) == std::vector<std::size_t>{2, 4});
  CHECK(occurrences(w, bw("bb")).empty());
  CHECK(occurrences(w, bw("ababab")).empty());
}

TEST_CASE("occurrences window keeps only full containments", "[word]") {
  word w = bw("ababa");
  word v = bw("aba");
  CHECK(occurrences(w, v, position{1, 3}) == std::vector<std::size_t>{1});
  CHECK(occurrences(w, v, position{2, 5}) == std::vector<std::size_t>{3});
  CHECK(occurrences(w, v, position{1, 5}) == std::vector<std::size_t>{1, 3});
  CHECK(occurrences(w, v, position{2, 4}).empty());
  CHECK_THROWS_AS(occurrences(w, v, position{0, 4}), bounds_error);
}

TEST_CASE("occurrences rejects an empty pattern", "[word]") {
  CHECK_THROWS_AS(occurrences(bw("ab"), bw("")), parameter_error);
}

TEST_CASE("occurrences rejects mixed alphabets", "[word]") {
  CHECK_THROWS_AS(occurrences(bw("ab", 2), bw("a", 3)), alphabet_mismatch);
}

TEST_CASE("concat joins words over one alphabet", "[word]") {
  CHECK(concat(bw("ab"), bw("ba")).render() == "abba");
  CHECK(concat(bw(""), bw("b")).render() == "b");
  CHECK_THROWS_AS(concat(bw("a", 2), bw("a", 3)), alphabet_mismatch);
}

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "wordkit/morphic.hpp"

using namespace wordkit;

namespace {

word bw(const std::string& text, rank_type m = 2) {
  return word::parse(text, alphabet{m});
}

word periodic_word(const std::string& base, std::size_t len, rank_type m) {
  std::string out;
  for (std::size_t i = 0; i < len; ++i) out.push_back(base[i % base.size()]);
  return word::parse(out, alphabet{m});
}

}  // namespace

TEST_CASE("builtin generators produce the known prefixes", "[morphic]") {
  CHECK(prefix(thue_morse(), 8).render() == "abbabaab");
  CHECK(prefix(fibonacci(), 8).render() == "abaababa");
  CHECK(prefix(tribonacci(), 16).render() == "abacabaabacababa");
  CHECK(prefix(thue_morse(), 1).render() == "a");
  CHECK(prefix(thue_morse(), 16).render() == "abbabaabbaababba");
}

TEST_CASE("periodic generators cycle their base", "[morphic]") {
  generator rep = make_periodic("rep", bw("ab"));
  CHECK(prefix(rep, 5).render() == "ababa");
  CHECK(prefix(rep, 1).render() == "a");
  CHECK(prefix(rep, 6).render() == "ababab");
  CHECK_THROWS_AS(make_periodic("bad", bw("")), parameter_error);
}

TEST_CASE("prefix lengths nest", "[morphic]") {
  for (const generator& gen : {thue_morse(), fibonacci(), tribonacci()}) {
    for (std::size_t len : {1, 5, 21, 64}) {
      std::string small = prefix(gen, len).render();
      std::string big = prefix(gen, 2 * len).render();
      CHECK(big.substr(0, len) == small);
      CHECK(big.size() == 2 * len);
    }
  }
}

TEST_CASE("substitution fixed points absorb their own image", "[morphic]") {
  // applying the substitution to a prefix yields another prefix
  generator tm = thue_morse();
  std::string w = prefix(tm, 40).render();
  std::string image;
  for (char c : w) image += (c == 'a') ? "ab" : "ba";
  CHECK(prefix(tm, image.size()).render() == image);

  generator fib = fibonacci();
  std::string f = prefix(fib, 40).render();
  std::string fimage;
  for (char c : f) fimage += (c == 'a') ? "ab" : "a";
  CHECK(prefix(fib, fimage.size()).render() == fimage);
}

TEST_CASE("prefix length must be positive", "[morphic]") {
  CHECK_THROWS_AS(prefix(thue_morse(), 0), parameter_error);
}

TEST_CASE("substitution construction is validated", "[morphic]") {
  alphabet a2{2};
  // image list must be rank-indexed and complete
  CHECK_THROWS_AS(make_substitution("x", a2, {bw("ab")}, 1), parameter_error);
  // images live over the generator's alphabet
  CHECK_THROWS_AS(
      make_substitution("x", a2, {word::parse("ab", alphabet{3}), bw("a")}, 1),
      alphabet_mismatch);
  // empty image
  CHECK_THROWS_AS(make_substitution("x", a2, {bw(""), bw("a")}, 1),
                  parameter_error);
  // seed image must start with the seed and have length at least 2
  CHECK_THROWS_AS(make_substitution("x", a2, {bw("ba"), bw("a")}, 1),
                  parameter_error);
  CHECK_THROWS_AS(make_substitution("x", a2, {bw("a"), bw("ba")}, 1),
                  parameter_error);
  // seed rank outside the alphabet
  CHECK_THROWS_AS(make_substitution("x", a2, {bw("ab"), bw("ba")}, 3),
                  parameter_error);
  CHECK_NOTHROW(make_substitution("x", a2, {bw("ab"), bw("ba")}, 1));
}

TEST_CASE("complexity matches hand values", "[morphic]") {
  auto profile = complexity(bw("abbab"), 3);
  CHECK(profile.prefix_length == 5);
  CHECK(profile.values == std::vector<std::size_t>{2, 3, 3});

  // constant word: one factor at every length
  auto flat = complexity(bw("aaaa", 1), 4);
  CHECK(flat.values == std::vector<std::size_t>{1, 1, 1, 1});
}

TEST_CASE("fibonacci complexity is n plus one", "[morphic]") {
  word f = prefix(fibonacci(), 500);
  auto profile = complexity(f, 20);
  for (std::size_t n = 1; n <= 20; ++n) CHECK(profile.values[n - 1] == n + 1);
}

TEST_CASE("complexity agrees with the set-based oracle", "[morphic]") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    unsigned m = 2 + rng() % 3;
    std::string s = testref::random_string(rng, m, 5, 60);
    auto profile = complexity(word::parse(s, alphabet{m}), 5);
    for (std::size_t n = 1; n <= 5; ++n)
      CHECK(profile.values[n - 1] == testref::distinct_factors(s, n));
  }
}

TEST_CASE("complexity never decreases under a longer prefix", "[morphic]") {
  word small = prefix(thue_morse(), 128);
  word big = prefix(thue_morse(), 256);
  auto ps = complexity(small, 10);
  auto pb = complexity(big, 10);
  for (std::size_t n = 0; n < 10; ++n) CHECK(ps.values[n] <= pb.values[n]);
}

TEST_CASE("complexity parameter validation", "[morphic]") {
  CHECK_THROWS_AS(complexity(bw("ab"), 0), parameter_error);
  CHECK_THROWS_AS(complexity(bw("ab"), 3), bounds_error);
}

TEST_CASE("recurrence on a periodic word", "[morphic]") {
  auto profile = recurrence(bw("ababab"), bw("ab"));
  CHECK(profile.pattern.render() == "ab");
  CHECK(profile.max_gap == 2);
  REQUIRE(profile.window_constant.has_value());
  CHECK(*profile.window_constant == 3);
  CHECK(profile.prefix_length == 6);
}

TEST_CASE("recurrence on the thue-morse prefix", "[morphic]") {
  word tm = prefix(thue_morse(), 1024);
  word pat = bw("abba");
  CHECK(occurrences(tm, pat).size() == 171);
  auto profile = recurrence(tm, pat);
  CHECK(profile.max_gap == 8);
  REQUIRE(profile.window_constant.has_value());
  CHECK(*profile.window_constant == 11);
}

TEST_CASE("the window constant is tight", "[morphic]") {
  word tm = prefix(thue_morse(), 1024);
  std::string w = tm.render();
  const std::string pat = "abba";
  auto window_works = [&](std::size_t window) {
    if (window > w.size()) return false;
    for (std::size_t i = 0; i + window <= w.size(); ++i)
      if (w.substr(i, window).find(pat) == std::string::npos) return false;
    return true;
  };
  CHECK(window_works(11));
  CHECK_FALSE(window_works(10));
}

TEST_CASE("recurrence needs at least two occurrences", "[morphic]") {
  CHECK_THROWS_AS(recurrence(bw("abba"), bw("bb")), insufficient_occurrences);
  CHECK_THROWS_AS(recurrence(bw("ab"), bw("ba")), insufficient_occurrences);
  CHECK_THROWS_AS(recurrence(bw("ab"), bw("")), parameter_error);
}

TEST_CASE("eventual periodicity on hand examples", "[morphic]") {
  auto p1 = eventually_periodic_check(bw("aababab"), 3);
  REQUIRE(p1.has_value());
  CHECK(p1->preperiod == 1);
  CHECK(p1->period == 2);

  auto p2 = eventually_periodic_check(bw("aaaa", 1), 2);
  REQUIRE(p2.has_value());
  CHECK(p2->preperiod == 0);
  CHECK(p2->period == 1);

  auto p3 = eventually_periodic_check(periodic_word("abc", 201, 3), 10);
  REQUIRE(p3.has_value());
  CHECK(p3->preperiod == 0);
  CHECK(p3->period == 3);

  auto p4 = eventually_periodic_check(bw("baaaaa"), 2);
  REQUIRE(p4.has_value());
  CHECK(p4->preperiod == 1);
  CHECK(p4->period == 1);
}

TEST_CASE("aperiodic prefixes report nothing", "[morphic]") {
  word tm = prefix(thue_morse(), 256);
  CHECK_FALSE(eventually_periodic_check(tm, 64).has_value());
}

TEST_CASE("periodicity requires two full periods of tail", "[morphic]") {
  // the lone trailing b would need a second copy to certify period 1, and
  // no longer period fits twice either
  CHECK_FALSE(eventually_periodic_check(bw("aaab"), 2).has_value());
}

TEST_CASE("periodicity parameter validation", "[morphic]") {
  CHECK_THROWS_AS(eventually_periodic_check(bw("abab"), 0), parameter_error);
  // max_period beyond len/2 can never satisfy the two-period rule
  CHECK_THROWS_AS(eventually_periodic_check(bw("abab"), 3), parameter_error);
  CHECK_NOTHROW(eventually_periodic_check(bw("abab"), 2));
}

TEST_CASE("bounded complexity goes with a found period", "[morphic]") {
  // on a certified periodic prefix the distinct-factor count stays at or
  // below preperiod + period for every length
  word w = periodic_word("abc", 120, 3);
  auto p = eventually_periodic_check(w, 30);
  REQUIRE(p.has_value());
  auto profile = complexity(w, 20);
  for (std::size_t v : profile.values) CHECK(v <= p->preperiod + p->period);
}

TEST_CASE("generator config round trip", "[morphic]") {
  generator tm = parse_generator("tm: a->ab, b->ba, seed=a");
  CHECK(tm.name == "tm");
  CHECK(tm.kind == generator_kind::substitution);
  CHECK(prefix(tm, 8).render() == "abbabaab");

  generator fib = parse_generator("fib: a->ab, b->a, seed=a");
  CHECK(prefix(fib, 8).render() == "abaababa");

  generator rep = parse_generator("rep: periodic=abab");
  CHECK(rep.kind == generator_kind::periodic);
  CHECK(prefix(rep, 6).render() == "ababab");
}

TEST_CASE("generator config alphabet is the largest letter used", "[morphic]") {
  generator trib = parse_generator("trib: a->ab, b->ac, c->a, seed=a");
  CHECK(trib.alpha.size == 3);
  CHECK(prefix(trib, 16).render() == prefix(tribonacci(), 16).render());
}

TEST_CASE("generator config rejects malformed lines", "[morphic]") {
  CHECK_THROWS_AS(parse_generator(""), parse_error);
  CHECK_THROWS_AS(parse_generator("x:"), parse_error);
  CHECK_THROWS_AS(parse_generator("a->ab, b->ba, seed=a"), parse_error);
  // missing seed
  CHECK_THROWS_AS(parse_generator("x: a->ab, b->ba"), parse_error);
  // duplicate image
  CHECK_THROWS_AS(parse_generator("x: a->ab, a->ba, seed=a"), parse_error);
  // missing image for a mentioned letter
  CHECK_THROWS_AS(parse_generator("x: a->ab, seed=a"), parse_error);
  // rules and periodic form cannot mix
  CHECK_THROWS_AS(parse_generator("x: a->ab, periodic=ab, seed=a"), parse_error);
  // grammatically fine but not prolongable, so rejected at construction
  CHECK_THROWS_AS(parse_generator("x: a->ba, b->ab, seed=a"), parameter_error);

  try {
    parse_generator("x: a->ab, b!ba, seed=a");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.index == 2);  // items are numbered from 1 after the name
  }
}

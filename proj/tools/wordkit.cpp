// Command-line front end: one subcommand per library entry point, JSON on
// stdout, diagnostics on stderr. Exit 0 on success (a none-found analysis
// is a success), 1 when verify rejects a certificate, 2 on usage errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wordkit/wordkit.hpp"

namespace {

struct source_options {
  std::string word_text;
  std::string word_file;
  std::string generator_name;
  std::string periodic_base;
  std::string config_file;
  std::size_t length = 0;
  std::uint32_t m_override = 0;
};

void add_word_flags(CLI::App* sub, source_options& opts) {
  sub->add_option("--word", opts.word_text,
                  "word inline, lowercase letters a-z");
  sub->add_option("--word-file", opts.word_file,
                  "file with the word on its first line");
  sub->add_option("--m", opts.m_override,
                  "alphabet size (default: largest letter used)");
}

void add_generator_flags(CLI::App* sub, source_options& opts,
                         bool length_required) {
  sub->add_option("--generator", opts.generator_name,
                  "built-in generator: thue-morse, fibonacci, tribonacci");
  sub->add_option("--periodic", opts.periodic_base,
                  "repeat this base word forever");
  sub->add_option("--config", opts.config_file,
                  "generator config file, e.g. `name: a->ab, b->ba, seed=a`");
  auto* len = sub->add_option("--length", opts.length,
                              "prefix length to generate");
  if (length_required) len->required();
}

std::string read_first_line(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw wordkit::parameter_error("cannot open file \"" + path + "\"");
  std::string line;
  std::getline(in, line);
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
    line.pop_back();
  return line;
}

wordkit::generator resolve_generator(const source_options& opts) {
  const int given = !opts.generator_name.empty() +
                    !opts.periodic_base.empty() + !opts.config_file.empty();
  if (given != 1)
    throw wordkit::parameter_error(
        "pick exactly one of --generator, --periodic, --config");
  if (!opts.generator_name.empty()) {
    if (opts.generator_name == "thue-morse") return wordkit::thue_morse();
    if (opts.generator_name == "fibonacci") return wordkit::fibonacci();
    if (opts.generator_name == "tribonacci") return wordkit::tribonacci();
    throw wordkit::parameter_error(
        "unknown generator \"" + opts.generator_name +
        "\"; built-ins are thue-morse, fibonacci, tribonacci");
  }
  if (!opts.periodic_base.empty()) {
    wordkit::rank_type m = 0;
    for (char c : opts.periodic_base)
      if (c >= 'a' && c <= 'z')
        m = std::max(m, static_cast<wordkit::rank_type>(c - 'a' + 1));
    if (m == 0)
      throw wordkit::parameter_error("periodic base has no letters a-z");
    return wordkit::make_periodic(
        "periodic", wordkit::word::parse(opts.periodic_base,
                                         wordkit::alphabet(m)));
  }
  return wordkit::parse_generator(read_first_line(opts.config_file));
}

wordkit::word parse_with_alphabet(const std::string& text,
                                  std::uint32_t m_override) {
  wordkit::rank_type m = m_override;
  if (m == 0) {
    for (char c : text)
      if (c >= 'a' && c <= 'z')
        m = std::max(m, static_cast<wordkit::rank_type>(c - 'a' + 1));
    if (m == 0) m = 1;  // empty word still needs an alphabet
  }
  return wordkit::word::parse(text, wordkit::alphabet(m));
}

// A word from either an explicit source or a generator prefix.
wordkit::word resolve_word(const source_options& opts, bool allow_generator) {
  const bool has_word = !opts.word_text.empty() || !opts.word_file.empty();
  const bool has_gen = !opts.generator_name.empty() ||
                       !opts.periodic_base.empty() ||
                       !opts.config_file.empty();
  if (has_word && has_gen)
    throw wordkit::parameter_error(
        "give either a word (--word/--word-file) or a generator, not both");
  if (has_word) {
    if (!opts.word_text.empty() && !opts.word_file.empty())
      throw wordkit::parameter_error(
          "give either --word or --word-file, not both");
    const std::string text = !opts.word_text.empty()
                                 ? opts.word_text
                                 : read_first_line(opts.word_file);
    return parse_with_alphabet(text, opts.m_override);
  }
  if (!allow_generator || !has_gen)
    throw wordkit::parameter_error("no input word: use --word or --word-file");
  if (opts.length == 0)
    throw wordkit::parameter_error("generator sources need --length");
  return wordkit::prefix(resolve_generator(opts), opts.length);
}

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

void print_analysis_text(const wordkit::analysis_report& report) {
  std::cout << "word: " << report.input.render()
            << " (m=" << report.input.alpha().size << ")\n"
            << "mode: " << (report.strong_mode ? "strong" : "plain")
            << ", p=" << report.p << ", q=" << report.q << "\n"
            << "outcome: " << wordkit::to_string(report.outcome) << "\n";
  if (report.power)
    std::cout << "power: base \"" << report.power->base.render() << "\" ^ "
              << report.power->exponent << " at [" << report.power->pos.start
              << ", " << report.power->pos.end << "]\n";
  if (report.decomposition) {
    std::cout << "decomposition at [" << report.decomposition->pos.start
              << ", " << report.decomposition->pos.end << "]:";
    for (const wordkit::word& f : report.decomposition->factors)
      std::cout << " " << f.render();
    std::cout << "\n";
  }
}

int run(CLI::App& app, int argc, char** argv) {
  app.require_subcommand(1);

  source_options src;
  std::uint32_t p = 2, q = 2;
  bool strong = false, exhaustive = false, trace = false;
  std::string output = "json";
  wordkit::decomp_search_options split_opts;
  wordkit::search_budget budget;
  unsigned threads = 1;
  std::uint32_t bound_m = 2;
  std::size_t n_max = 0, max_period = 0;
  std::string pattern, certificate_file;
  std::uint32_t identity_n = 2;
  std::uint64_t trials = 100, seed = 42;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "find a power or decomposable-subword witness in a word");
  add_word_flags(analyze, src);
  analyze->add_option("--p", p, "power exponent, at least 2");
  analyze->add_option("--q", q, "decomposition factor count");
  analyze->add_flag("--strong", strong,
                    "require the factor-length constraint");
  analyze->add_flag("--exhaustive", exhaustive,
                    "search both witness kinds even after the first hit");
  analyze->add_option("--max-word-length", split_opts.max_word_length,
                      "skip the split search on longer words");
  analyze->add_option("--max-splits", split_opts.max_splits,
                      "split-search budget");
  analyze->add_option("--output", output, "json or text");
  analyze->footer("example: wordkit analyze --word abab --p 2 --q 2");

  CLI::App* bound = app.add_subcommand(
      "bound", "longest witness-free word over m letters, by backtracking");
  bound->add_option("--m", bound_m, "alphabet size")->required();
  bound->add_option("--p", p, "power exponent, at least 2");
  bound->add_option("--q", q, "decomposition factor count");
  bound->add_flag("--strong", strong,
                  "prune with strong decompositions only");
  bound->add_option("--max-depth", budget.max_depth, "depth cap");
  bound->add_option("--max-nodes", budget.max_nodes,
                    "node budget, split evenly over first-letter subtrees");
  bound->add_option("--threads", threads,
                    "worker threads; the report does not depend on this");
  bound->add_flag("--trace", trace,
                  "after the search, print nodes per depth to stderr");
  bound->add_option("--output", output, "json or text");
  bound->footer("example: wordkit bound --m 2 --p 2 --q 9");

  CLI::App* gen = app.add_subcommand(
      "gen", "emit a prefix of a generated infinite word");
  add_generator_flags(gen, src, /*length_required=*/true);
  gen->add_option("--output", output, "text (the word itself) or json");
  gen->footer("example: wordkit gen --generator thue-morse --length 32");

  CLI::App* complexity = app.add_subcommand(
      "complexity", "distinct-factor counts of a word, per length");
  add_word_flags(complexity, src);
  add_generator_flags(complexity, src, /*length_required=*/false);
  complexity->add_option("--n-max", n_max, "largest factor length to count")
      ->required();
  complexity->add_option("--max-period", max_period,
                         "also test eventual periodicity up to this period");
  complexity->add_option("--output", output, "json or text");
  complexity->footer(
      "example: wordkit complexity --generator fibonacci --length 500 "
      "--n-max 20");

  CLI::App* recur = app.add_subcommand(
      "recur", "occurrence gaps and covering window size for a pattern");
  add_word_flags(recur, src);
  add_generator_flags(recur, src, /*length_required=*/false);
  recur->add_option("--subword", pattern, "pattern to scan for")->required();
  recur->add_option("--output", output, "json or text");
  recur->footer(
      "example: wordkit recur --generator thue-morse --length 1024 "
      "--subword abba");

  CLI::App* construct = app.add_subcommand(
      "construct",
      "build a checked strong-decomposition certificate from a prefix");
  add_word_flags(construct, src);
  add_generator_flags(construct, src, /*length_required=*/false);
  construct->add_option("--q", q, "factor count, 2 to 8");
  construct->add_option("--output", output, "json (certificate) or text");
  construct->footer(
      "example: wordkit construct --generator fibonacci --q 2\n"
      "(generator sources without --length size their own prefix)");

  CLI::App* verify = app.add_subcommand(
      "verify", "re-check a certificate file; FAIL names the first bad clause");
  verify->add_option("--certificate", certificate_file, "certificate JSON file")
      ->required();
  verify->add_option("--output", output, "text (PASS/FAIL) or json");
  verify->footer("example: wordkit verify --certificate cert.json");

  CLI::App* identity = app.add_subcommand(
      "identity",
      "standard-identity checks on n-by-n matrices, exact arithmetic");
  identity->add_option("--n", identity_n, "matrix dimension, 1 or 2");
  identity->add_option("--trials", trials, "random tuples to test");
  identity->add_option("--seed", seed, "random seed");
  identity->add_option("--output", output, "json or text");
  identity->footer("example: wordkit identity --n 2 --trials 100 --seed 42");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (output != "json" && output != "text")
    throw wordkit::parameter_error("--output must be json or text");
  const bool json_out = output == "json";

  if (analyze->parsed()) {
    const wordkit::word w = resolve_word(src, /*allow_generator=*/false);
    const auto report =
        wordkit::analyze(w, p, q, strong, exhaustive, split_opts);
    if (json_out)
      emit(wordkit::to_json(report));
    else
      print_analysis_text(report);
    return 0;
  }

  if (bound->parsed()) {
    const auto report =
        wordkit::longest_witness_free(bound_m, p, q, strong, budget, threads);
    if (trace)
      for (std::size_t d = 0; d < report.nodes_per_depth.size(); ++d)
        std::cerr << "depth " << d + 1 << ": " << report.nodes_per_depth[d]
                  << " nodes\n";
    if (json_out) {
      emit(wordkit::to_json(report));
    } else {
      std::cout << "longest witness-free length: "
                << report.longest_witness_free_length << "\n"
                << "empirical bound: " << report.empirical_bound
                << (report.exhausted ? " (exhausted)" : " (frontier open)")
                << "\n";
      for (const wordkit::word& w : report.exemplars)
        std::cout << w.render() << "\n";
    }
    return 0;
  }

  if (gen->parsed()) {
    if (src.length == 0)
      throw wordkit::parameter_error("--length must be at least 1");
    const wordkit::generator g = resolve_generator(src);
    const wordkit::word w = wordkit::prefix(g, src.length);
    if (json_out)
      emit({{"generator", g.name},
            {"m", g.alpha.size},
            {"length", w.length()},
            {"word", w.render()}});
    else
      std::cout << w.render() << "\n";
    return 0;
  }

  if (complexity->parsed()) {
    const wordkit::word w = resolve_word(src, /*allow_generator=*/true);
    const auto profile = wordkit::complexity(w, n_max);
    std::optional<wordkit::periodicity> periodic;
    if (max_period > 0)
      periodic = wordkit::eventually_periodic_check(w, max_period);
    nlohmann::json j = wordkit::to_json(profile);
    if (max_period > 0)
      j["periodicity"] =
          periodic ? nlohmann::json{{"preperiod", periodic->preperiod},
                                    {"period", periodic->period}}
                   : nlohmann::json(nullptr);
    if (json_out) {
      emit(j);
    } else {
      for (std::size_t i = 0; i < profile.values.size(); ++i)
        std::cout << i + 1 << " " << profile.values[i] << "\n";
      if (max_period > 0) {
        if (periodic)
          std::cout << "periodicity: preperiod " << periodic->preperiod
                    << ", period " << periodic->period << "\n";
        else
          std::cout << "periodicity: none up to period " << max_period << "\n";
      }
    }
    return 0;
  }

  if (recur->parsed()) {
    const wordkit::word w = resolve_word(src, /*allow_generator=*/true);
    const wordkit::word v = wordkit::word::parse(pattern, w.alpha());
    const auto profile = wordkit::recurrence(w, v);
    if (json_out) {
      emit(wordkit::to_json(profile));
    } else {
      std::cout << "max gap: " << profile.max_gap << "\n";
      if (profile.window_constant)
        std::cout << "window constant: " << *profile.window_constant << "\n";
    }
    return 0;
  }

  if (construct->parsed()) {
    const bool has_gen = !src.generator_name.empty() ||
                         !src.periodic_base.empty() ||
                         !src.config_file.empty();
    wordkit::strong_decomp_certificate cert =
        has_gen && src.length == 0
            ? wordkit::construct_auto(resolve_generator(src), q)
            : wordkit::construct(resolve_word(src, /*allow_generator=*/true),
                                 q);
    if (json_out) {
      emit(wordkit::to_json(cert));
    } else {
      std::cout << "markers:";
      for (const wordkit::word& m : cert.markers)
        std::cout << " " << m.render();
      std::cout << "\nwindow size: " << cert.recurrence_constant
                << "\npositions:";
      for (std::size_t j : cert.positions) std::cout << " " << j;
      std::cout << "\nfactors:";
      for (const wordkit::word& f : cert.factors)
        std::cout << " " << f.render();
      std::cout << "\n";
    }
    return 0;
  }

  if (verify->parsed()) {
    std::ifstream in(certificate_file);
    if (!in)
      throw wordkit::parameter_error("cannot open file \"" +
                                     certificate_file + "\"");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw wordkit::parse_error(
          std::string("certificate file is not valid JSON: ") + e.what(), 1);
    }
    const auto cert = wordkit::certificate_from_json(j);
    const auto check = wordkit::verify_certificate_detailed(cert);
    if (json_out)
      emit({{"ok", check.ok},
            {"first_violation",
             check.ok ? nlohmann::json(nullptr)
                      : nlohmann::json(check.first_violation)}});
    else if (check.ok)
      std::cout << "PASS\n";
    else
      std::cout << "FAIL: " << check.first_violation << "\n";
    return check.ok ? 0 : 1;
  }

  if (identity->parsed()) {
    const auto report =
        wordkit::amitsur_levitzski_check(identity_n, trials, seed);
    if (json_out) {
      emit(wordkit::to_json(report));
    } else {
      std::cout << "s_" << report.degree << " on " << report.dimension << "x"
                << report.dimension << " matrices: "
                << (report.all_vanished ? "all vanished" : "counterexample")
                << "\n"
                << "s_" << report.lower_degree << " nonzero witness: "
                << (report.lower_witness ? "found" : "absent") << "\n";
    }
    return 0;
  }
  return 2;  // unreachable: require_subcommand guarantees one branch
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "word combinatorics toolkit: repetition and decomposition witnesses, "
      "avoidance bounds, morphic words, decomposition certificates, and "
      "exact matrix identities"};
  try {
    return run(app, argc, argv);
  } catch (const wordkit::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

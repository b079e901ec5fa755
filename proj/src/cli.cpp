#include "shirshov/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "shirshov/serialize.hpp"

namespace shirshov {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;
constexpr int kExitBudget = 3;

struct Options {
  std::string format = "json";
  std::string out_file;
  int threads = 1;
  int precision_bits = kDefaultPrecisionBits;
};

Word load_word(const std::string& text, const std::string& file, int alphabet) {
  if (!text.empty() && !file.empty()) throw UsageError("give either --word or --word-file");
  if (!text.empty()) return Word::parse(text, alphabet);
  if (file.empty()) throw UsageError("a word is required (--word or --word-file)");
  std::ifstream file_stream;
  std::istream* in = &std::cin;
  if (file != "-") {
    file_stream.open(file);
    if (!file_stream) throw UsageError("cannot read " + file);
    in = &file_stream;
  }
  std::string contents, line;
  while (std::getline(*in, line)) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    contents += line;
  }
  return Word::parse(contents, alphabet);
}

// Flattens a result object into (column, value) pairs: nested keys are
// dotted, scalar arrays are space-joined, anything deeper is inline JSON.
void flatten(const json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& cells) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), cells);
    return;
  }
  if (j.is_array()) {
    bool scalars = true;
    for (const auto& item : j) scalars = scalars && item.is_primitive();
    if (scalars) {
      std::string joined;
      for (const auto& item : j) {
        if (!joined.empty()) joined += " ";
        joined += item.is_string() ? item.get<std::string>() : item.dump();
      }
      cells.emplace_back(prefix, joined);
    } else {
      cells.emplace_back(prefix, j.dump());
    }
    return;
  }
  cells.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
}

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void emit(const Options& options, const std::string& command, const json& params,
          const json& result, long long timing_ms, std::ostream& out_stream) {
  std::ofstream file;
  std::ostream* out = &out_stream;
  if (!options.out_file.empty()) {
    file.open(options.out_file);
    if (!file) throw UsageError("cannot write " + options.out_file);
    out = &file;
  }
  if (options.format == "json") {
    json envelope{{"schema", 1},
                  {"command", command},
                  {"params", params},
                  {"result", result},
                  {"timing_ms", timing_ms}};
    *out << envelope.dump(2) << "\n";
  } else if (options.format == "csv") {
    std::vector<std::pair<std::string, std::string>> cells;
    flatten(result, "", cells);
    for (size_t i = 0; i < cells.size(); i++) *out << (i ? "," : "") << csv_escape(cells[i].first);
    *out << "\n";
    for (size_t i = 0; i < cells.size(); i++)
      *out << (i ? "," : "") << csv_escape(cells[i].second);
    *out << "\n";
  } else {
    std::vector<std::pair<std::string, std::string>> cells;
    flatten(result, "", cells);
    for (const auto& [key, value] : cells) *out << key << ": " << value << "\n";
  }
}

// Deterministic word sample: letters drawn uniformly via a seeded mt19937_64.
std::vector<Word> sample_words(int count, int length, int alphabet, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(0, alphabet - 1);
  std::vector<Word> out;
  out.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; i++) {
    std::vector<Letter> letters(static_cast<size_t>(length));
    for (auto& x : letters) x = dist(rng);
    out.emplace_back(std::move(letters), Alphabet{alphabet});
  }
  return out;
}

std::vector<Word> all_words_up_to(int alphabet, int max_len) {
  std::vector<Word> out;
  for (int len = 1; len <= max_len; len++) {
    std::vector<Letter> letters(static_cast<size_t>(len), 0);
    while (true) {
      out.emplace_back(letters, Alphabet{alphabet});
      int i = len - 1;
      while (i >= 0 && letters[static_cast<size_t>(i)] == alphabet - 1) {
        letters[static_cast<size_t>(i)] = 0;
        i--;
      }
      if (i < 0) break;
      letters[static_cast<size_t>(i)]++;
    }
  }
  return out;
}

struct SweepOutcome {
  long long vacuous = 0;
  long long confirmed = 0;
  long long counterexamples = 0;
  std::string first_counterexample;
};

SweepOutcome sweep_cancellation(const std::vector<Word>& words, int n, int d, int threads) {
  const size_t total = words.size();
  std::vector<SweepOutcome> partial(static_cast<size_t>(std::max(1, threads)));
  std::vector<long long> first_index(partial.size(), -1);
  auto work = [&](size_t chunk, size_t begin, size_t end) {
    for (size_t i = begin; i < end; i++) {
      auto check = check_divisibility_cancellation(words[i], n, d);
      if (check.status == CheckStatus::Vacuous) partial[chunk].vacuous++;
      else if (check.status == CheckStatus::Confirmed) partial[chunk].confirmed++;
      else {
        partial[chunk].counterexamples++;
        if (first_index[chunk] < 0) {
          first_index[chunk] = static_cast<long long>(i);
          partial[chunk].first_counterexample = words[i].str();
        }
      }
    }
  };
  if (threads <= 1) {
    work(0, 0, total);
  } else {
    std::vector<std::thread> pool;
    size_t per = (total + static_cast<size_t>(threads) - 1) / static_cast<size_t>(threads);
    for (int c = 0; c < threads; c++) {
      size_t begin = static_cast<size_t>(c) * per;
      size_t end = std::min(total, begin + per);
      if (begin >= end) break;
      pool.emplace_back(work, static_cast<size_t>(c), begin, end);
    }
    for (auto& t : pool) t.join();
  }
  SweepOutcome merged;
  long long best = -1;
  for (size_t c = 0; c < partial.size(); c++) {
    merged.vacuous += partial[c].vacuous;
    merged.confirmed += partial[c].confirmed;
    merged.counterexamples += partial[c].counterexamples;
    if (first_index[c] >= 0 && (best < 0 || first_index[c] < best)) {
      best = first_index[c];
      merged.first_counterexample = partial[c].first_counterexample;
    }
  }
  return merged;
}

json blocks_of(const Word& w, const OrdinaryDivision& division) {
  json blocks = json::array();
  for (size_t i = 1; i < division.boundaries.size(); i++)
    blocks.push_back(
        w.subword(division.boundaries[i - 1], division.boundaries[i] - division.boundaries[i - 1])
            .str());
  return blocks;
}

json tails_of(const Word& w, const TailDivision& division) {
  json tails = json::array();
  for (int pos : division.positions) tails.push_back(w.suffix(pos).str());
  return tails;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"detectors, chain instrumentation and certified bounds for n-divisible words"};
  app.require_subcommand(1);
  app.fallthrough();

  Options options;
  if (const char* env = std::getenv("SHIRSHOV_PRECISION_BITS")) {
    try {
      options.precision_bits = std::stoi(env);
    } catch (const std::exception&) {
      err << "bad SHIRSHOV_PRECISION_BITS\n";
      return kExitUsage;
    }
  }
  app.add_option("--format", options.format)->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", options.out_file, "write the report to a file");
  app.add_option("--threads", options.threads)->check(CLI::Range(1, 256));
  app.add_option("--precision-bits", options.precision_bits);

  std::string word_text, word_file, second_word;
  int alphabet = 0;
  int n = 2, d = 2, k = 2, t = 2, p_level = 1, p_reps = 2, m = 1, a = 1, cap = 64,
      max_steps = 1 << 20;
  int count = 0, length = 0, t_param = 0;
  long long node_budget = -1;
  std::uint64_t seed = 0;
  bool seed_set = false, latyshev = false, no_symmetry = false;
  std::string sense_name = "tail", which, sweep_mode, words_csv, code;
  std::string checkpoint_file, resume_file;
  long n_long = 2, d_long = 2, l_long = 2;

  auto add_word_options = [&](CLI::App* cmd) {
    cmd->add_option("--word", word_text, "inline word: 'abc' or [0,1,27]");
    cmd->add_option("--word-file", word_file, "file holding the word");
    cmd->add_option("--alphabet", alphabet, "alphabet size (default: smallest fitting)");
  };

  auto* divide = app.add_subcommand("divide", "maximal ordinary/tail divisibility with witness");
  add_word_options(divide);
  divide->add_option("--sense", sense_name)->check(CLI::IsMember({"ordinary", "tail"}));

  auto* power = app.add_subcommand("power", "earliest d-th power subword");
  add_word_options(power);
  power->add_option("--d", d)->required();

  auto* cancel = app.add_subcommand("cancel", "n-cancellability verdict");
  add_word_options(cancel);
  cancel->add_option("--n", n)->required();
  cancel->add_option("--d", d)->required();

  auto* lemma = app.add_subcommand("lemma", "run a property check by id");
  lemma->add_option("code", code, "one of 2-6 2-7 2-9 2-10 3-4 4-8 4-10 5-3")->required();
  add_word_options(lemma);
  lemma->add_option("--n", n);
  lemma->add_option("--d", d);
  lemma->add_option("--k", k);
  lemma->add_option("--t", t);
  lemma->add_option("--a", a);
  lemma->add_option("--m", m);
  lemma->add_option("--u", second_word, "copied subword for 2-9");
  lemma->add_option("--max-steps", max_steps);
  lemma->add_option("--sweep", sweep_mode)->check(CLI::IsMember({"exhaustive", "random"}));
  lemma->add_option("--l", l_long, "alphabet size for sweeps");
  lemma->add_option("--max-len", length, "length bound (exhaustive) or length (random)");
  lemma->add_option("--count", count, "sample count for random sweeps");
  lemma->add_option("--seed", seed, "rng seed (required for random sweeps)")
      ->each([&](const std::string&) { seed_set = true; });

  auto* chains_cmd = app.add_subcommand("chains", "tail poset, width and chain cover");
  add_word_options(chains_cmd);
  chains_cmd->add_option("--d", d)->required();

  auto* trace_b = app.add_subcommand("trace-b", "color evolution trace and psi");
  add_word_options(trace_b);
  trace_b->add_option("--n", n)->required();
  trace_b->add_option("--d", d)->required();
  trace_b->add_option("--p", p_level)->required();

  auto* process = app.add_subcommand("process", "one-hot process sequences: bound and search");
  process->add_option("--p", p_reps)->required();
  process->add_option("--k", k)->required();
  process->add_option("--words", words_csv, "comma-separated one-hot words to validate");

  auto* bounds_cmd = app.add_subcommand("bounds", "certified closed-form bound evaluation");
  bounds_cmd
      ->add_option("--which", which)
      ->check(CLI::IsMember({"phi-log3", "phi-log3-coarse", "phi-log2", "psi-log3", "psi-log2",
                             "upsilon", "lopatin", "lower-gk", "kuzmin", "compare"}))
      ->required();
  bounds_cmd->add_option("--n", n_long);
  bounds_cmd->add_option("--d", d_long);
  bounds_cmd->add_option("--l", l_long);

  auto* height_cmd = app.add_subcommand("height", "fewest-factors power decomposition");
  add_word_options(height_cmd);
  height_cmd->add_option("--n", n)->required();

  auto* essential_cmd = app.add_subcommand("essential", "minimal power-block count");
  add_word_options(essential_cmd);
  essential_cmd->add_option("--n", n)->required();

  auto* algorithm51 = app.add_subcommand("algorithm51", "periodic fragment removal trace");
  add_word_options(algorithm51);
  algorithm51->add_option("--n", n)->required();
  algorithm51->add_option("--max-steps", max_steps);
  algorithm51->add_option("--t", t_param, "accounting group count (default: largest)");

  auto* xi_cmd = app.add_subcommand("xi", "non-divisible permutation count");
  xi_cmd->add_option("--k", k)->required();
  xi_cmd->add_option("--n", n)->required();
  xi_cmd->add_flag("--latyshev", latyshev);

  auto* search = app.add_subcommand("search", "longest word avoiding powers and divisibility");
  search->add_option("--l", l_long)->required();
  search->add_option("--n", n, "divisibility threshold; omit to disable");
  search->add_option("--d", d)->required();
  search->add_option("--sense", sense_name)->check(CLI::IsMember({"ordinary", "tail"}));
  search->add_option("--cap", cap);
  search->add_flag("--no-symmetry", no_symmetry, "do not pin the first letter");
  search->add_option("--node-budget", node_budget);
  search->add_option("--checkpoint", checkpoint_file, "write the paused search state here");
  search->add_option("--resume", resume_file, "continue from a saved checkpoint");

  auto* verify = app.add_subcommand("verify", "exhausted search against both psi evaluations");
  verify->add_option("--l", l_long)->required();
  verify->add_option("--n", n)->required();
  verify->add_option("--d", d)->required();
  verify->add_option("--sense", sense_name)->check(CLI::IsMember({"ordinary", "tail"}));
  verify->add_option("--cap", cap);

  std::vector<const char*> argv;
  argv.push_back("shirshov");
  for (const auto& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  const auto started = std::chrono::steady_clock::now();
  auto elapsed_ms = [&]() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - started)
        .count();
  };

  int exit_code = kExitOk;
  json params, result;
  std::string command;

  try {
    if (divide->parsed()) {
      command = "divide";
      Word w = load_word(word_text, word_file, alphabet);
      params = {{"word", w.str()}, {"sense", sense_name}};
      if (sense_name == "ordinary") {
        auto max = max_ordinary_divisibility(w);
        result = {{"n_max", max.n_max},
                  {"prefix", w.subword(0, max.witness.prefix_len()).str()},
                  {"blocks", blocks_of(w, max.witness)},
                  {"boundaries", max.witness.boundaries}};
      } else {
        auto max = max_tail_divisibility(w);
        result = {{"m", max.m},
                  {"positions", max.witness.positions},
                  {"tails", tails_of(w, max.witness)}};
      }
    } else if (power->parsed()) {
      command = "power";
      Word w = load_word(word_text, word_file, alphabet);
      params = {{"word", w.str()}, {"d", d}};
      auto witness = find_power(w, d);
      result = {{"found", witness.has_value()}};
      if (witness) result["witness"] = to_json(*witness);
    } else if (cancel->parsed()) {
      command = "cancel";
      Word w = load_word(word_text, word_file, alphabet);
      params = {{"word", w.str()}, {"n", n}, {"d", d}};
      result = to_json(is_n_cancellable(w, n, d));
    } else if (lemma->parsed()) {
      command = "lemma " + code;
      if (code == "2-6") {
        Word w = load_word(word_text, word_file, alphabet);
        params = {{"word", w.str()}, {"d", d}};
        auto check = check_leading_tails(w, d);
        result = {{"comparable", check.comparable}};
        if (check.power) result["power"] = to_json(*check.power);
        if (!check.comparable && !check.power) exit_code = kExitViolation;
      } else if (code == "2-7") {
        Word w = load_word(word_text, word_file, alphabet);
        params = {{"word", w.str()}, {"k", k}, {"t", t}};
        auto check = check_factor_budget_power(w, k, t);
        result = {{"distinct_factors", check.distinct_factors},
                  {"found", check.witness.has_value()}};
        if (check.witness) result["witness"] = to_json(*check.witness);
      } else if (code == "2-9") {
        Word w = load_word(word_text, word_file, alphabet);
        if (second_word.empty()) throw UsageError("lemma 2-9 needs --u");
        Word u = Word::parse(second_word, w.alphabet().size);
        params = {{"word", w.str()}, {"u", u.str()}, {"n", n}, {"d", d}};
        auto verdict = division_from_copies(w, u, n, d);
        result = to_json(verdict);
        if (verdict.kind == CancelKind::No && d >= 2) exit_code = kExitViolation;
      } else if (code == "2-10") {
        if (!sweep_mode.empty()) {
          std::vector<Word> words;
          if (sweep_mode == "random") {
            if (!seed_set) throw UsageError("random sweeps require --seed");
            if (count < 1 || length < 1) throw UsageError("random sweeps need --count and --max-len");
            words = sample_words(count, length, static_cast<int>(l_long), seed);
          } else {
            if (length < 1) throw UsageError("exhaustive sweeps need --max-len");
            words = all_words_up_to(static_cast<int>(l_long), length);
          }
          params = {{"sweep", sweep_mode}, {"l", l_long}, {"max_len", length},
                    {"count", count},      {"n", n},      {"d", d}};
          if (sweep_mode == "random") params["seed"] = seed;
          auto outcome = sweep_cancellation(words, n, d, options.threads);
          result = {{"words", words.size()},
                    {"vacuous", outcome.vacuous},
                    {"confirmed", outcome.confirmed},
                    {"counterexamples", outcome.counterexamples}};
          if (outcome.counterexamples > 0) {
            result["first_counterexample"] = outcome.first_counterexample;
            exit_code = kExitViolation;
          }
        } else {
          Word w = load_word(word_text, word_file, alphabet);
          params = {{"word", w.str()}, {"n", n}, {"d", d}};
          auto check = check_divisibility_cancellation(w, n, d);
          result = {{"status", to_string(check.status)},
                    {"tail_divisibility", check.tail_divisibility},
                    {"verdict", to_json(check.verdict)}};
          if (check.status == CheckStatus::Counterexample) exit_code = kExitViolation;
        }
      } else if (code == "3-4") {
        Word w = load_word(word_text, word_file, alphabet);
        params = {{"word", w.str()}, {"n", n}, {"d", d}, {"a", a}, {"k", k}};
        auto check = check_psi_recursion(w, n, d, a, k);
        result = {{"lhs", check.lhs},
                  {"rhs", check.rhs},
                  {"satisfied", check.satisfied},
                  {"hypotheses_met", check.hypotheses_met}};
        if (!check.satisfied && check.hypotheses_met) exit_code = kExitViolation;
      } else if (code == "4-8") {
        Word w = load_word(word_text, word_file, alphabet);
        params = {{"word", w.str()}, {"n", n}, {"m", m}};
        auto check = check_phi_fragment_bound(w, n, m);
        result = {{"phi_m", check.phi_m},
                  {"q", check.q},
                  {"m", check.m},
                  {"applicable", check.applicable},
                  {"satisfied", check.satisfied}};
        if (check.applicable) {
          auto report = phi_measure(w, n, m, m);
          result["trace"] = to_json(report.trace);
        }
        if (check.applicable && !check.satisfied && max_tail_divisibility_length(w) < n)
          exit_code = kExitViolation;
      } else if (code == "4-10") {
        Word w = load_word(word_text, word_file, alphabet);
        params = {{"word", w.str()}, {"n", n}, {"m", m}, {"a", a}, {"k", k}};
        auto check = check_phi_recursion(w, n, m, a, k);
        result = {{"lhs", check.lhs},
                  {"rhs", check.rhs},
                  {"applicable", check.applicable},
                  {"satisfied", check.satisfied}};
        if (check.applicable && !check.satisfied && max_tail_divisibility_length(w) < n)
          exit_code = kExitViolation;
      } else if (code == "5-3") {
        Word w = load_word(word_text, word_file, alphabet);
        params = {{"word", w.str()}, {"n", n}, {"max_steps", max_steps}};
        auto trace = run_removal(w, n, max_steps);
        json accounting = json::array();
        bool violated = false;
        for (const auto& acc : removal_accounting_all(trace)) {
          accounting.push_back(to_json(acc));
          violated = violated || !acc.s12_ok || !acc.weighted_ok;
        }
        result = {{"steps", trace.step_count()},
                  {"stop_reason", trace.stop_reason},
                  {"reconstructs", validate(trace)},
                  {"accounting", accounting}};
        if (violated || !validate(trace)) exit_code = kExitViolation;
      } else {
        throw UsageError("unknown check id: " + code);
      }
    } else if (chains_cmd->parsed()) {
      command = "chains";
      Word w = load_word(word_text, word_file, alphabet);
      params = {{"word", w.str()}, {"d", d}};
      Poset poset = build_tail_poset(w, d);
      auto antichain = max_antichain(poset);
      auto cover = chain_cover(poset);
      auto greedy = greedy_tail_chain_cover(w, d);
      result = {{"omega", poset.size()},
                {"relations", poset.relation_pairs().size()},
                {"width", antichain.size()},
                {"antichain", antichain},
                {"chains", cover.chains},
                {"color", cover.color},
                {"greedy_chains", greedy.chains}};
    } else if (trace_b->parsed()) {
      command = "trace-b";
      Word w = load_word(word_text, word_file, alphabet);
      params = {{"word", w.str()}, {"n", n}, {"d", d}, {"p", p_level}};
      auto trace = b_set_trace(w, n, d, p_level);
      result = to_json(trace);
      result["psi"] = psi_measure(trace);
    } else if (process->parsed()) {
      command = "process";
      const int p = p_reps;
      params = {{"p", p}, {"k", k}};
      long long bound = process_bound(p, k);  // overflow check happens here
      result = {{"bound", bound}};
      if (!words_csv.empty()) {
        ProcessSequence seq;
        seq.p = p;
        seq.k = k;
        std::istringstream in(words_csv);
        std::string item;
        while (std::getline(in, item, ',')) {
          auto one = item.find('1');
          if (item.size() != static_cast<size_t>(k - 1) || one == std::string::npos ||
              item.find('1', one + 1) != std::string::npos)
            throw UsageError("bad one-hot word: " + item);
          seq.bits.push_back(static_cast<int>(one) + 1);
        }
        params["words"] = words_csv;
        result["valid"] = validate_process(seq);
      } else {
        auto max = max_process_length(p, k);
        result["max_length"] = max.length;
        result["witness"] = max.witness.words();
      }
    } else if (bounds_cmd->parsed()) {
      command = "bounds";
      params = {{"which", which}, {"n", n_long}, {"d", d_long}, {"l", l_long},
                {"precision_bits", options.precision_bits}};
      const int bits = options.precision_bits;
      if (which == "phi-log3") result = to_json(phi_log3(n_long, l_long, bits));
      else if (which == "phi-log3-coarse") result = to_json(phi_log3_coarse(n_long, l_long, bits));
      else if (which == "phi-log2") result = to_json(phi_log2(n_long, l_long, bits));
      else if (which == "psi-log3") result = to_json(psi_log3(n_long, d_long, l_long, bits));
      else if (which == "psi-log2") result = to_json(psi_log2(n_long, d_long, l_long, bits));
      else if (which == "upsilon") result = to_json(upsilon(n_long, l_long));
      else if (which == "lopatin") result = to_json(lopatin(n_long, l_long, bits));
      else if (which == "lower-gk") result = to_json(lower_gk(n_long, l_long));
      else if (which == "kuzmin") result = to_json(kuzmin(n_long));
      else {
        auto comparison = compare_bounds(n_long, l_long, bits);
        result = {{"lopatin_vs_psi_log3", to_string(comparison.lopatin_vs_psi_log3)},
                  {"lopatin_vs_psi_log2", to_string(comparison.lopatin_vs_psi_log2)},
                  {"psi_log3_vs_psi_log2", to_string(comparison.psi_log3_vs_psi_log2)},
                  {"precision_bits", comparison.precision_bits}};
      }
    } else if (height_cmd->parsed()) {
      command = "height";
      Word w = load_word(word_text, word_file, alphabet);
      params = {{"word", w.str()}, {"n", n}};
      result = to_json(height_decompose(w, n));
    } else if (essential_cmd->parsed()) {
      command = "essential";
      Word w = load_word(word_text, word_file, alphabet);
      params = {{"word", w.str()}, {"n", n}};
      result = {{"essential", essential_height(w, n)}};
    } else if (algorithm51->parsed()) {
      command = "algorithm51";
      Word w = load_word(word_text, word_file, alphabet);
      params = {{"word", w.str()}, {"n", n}, {"max_steps", max_steps}};
      auto trace = run_removal(w, n, max_steps);
      result = to_json(trace);
      result["reconstructs"] = validate(trace);
      json accounting = json::array();
      if (t_param > 0) {
        accounting.push_back(to_json(removal_accounting(trace, t_param)));
      } else {
        for (const auto& acc : removal_accounting_all(trace)) accounting.push_back(to_json(acc));
      }
      result["accounting"] = accounting;
      if (!validate(trace)) exit_code = kExitViolation;
    } else if (xi_cmd->parsed()) {
      command = "xi";
      params = {{"k", k}, {"n", n}};
      long long count = xi(k, n);  // may refuse; keep it out of the json list
      result = {{"xi", count}};
      if (latyshev) {
        auto check = latyshev_check(k, n);
        result["latyshev_bound"] = check.bound;
        result["latyshev_holds"] = check.holds;
      }
    } else if (search->parsed()) {
      command = "search";
      SearchParams sp;
      sp.l = static_cast<int>(l_long);
      if (search->count("--n")) sp.n = n;
      sp.d = d;
      sp.sense = sense_name == "ordinary" ? Sense::Ordinary : Sense::Tail;
      sp.cap = cap;
      sp.fix_first_letter = !no_symmetry;
      params = {{"l", sp.l},
                {"n", sp.n ? json(*sp.n) : json(nullptr)},
                {"d", sp.d},
                {"sense", to_string(sp.sense)},
                {"cap", sp.cap}};
      std::optional<SearchCheckpoint> start;
      if (!resume_file.empty()) {
        std::ifstream in(resume_file);
        if (!in) throw UsageError("cannot read " + resume_file);
        json j;
        in >> j;
        start = checkpoint_from_json(j);
      }
      auto cp = longest_avoider_step(sp, start, node_budget);
      result = to_json(result_from_checkpoint(cp));
      result["done"] = cp.done;
      if (!checkpoint_file.empty()) {
        std::ofstream cp_out(checkpoint_file);
        if (!cp_out) throw UsageError("cannot write " + checkpoint_file);
        cp_out << to_json(cp).dump(2) << "\n";
      }
    } else if (verify->parsed()) {
      command = "verify";
      params = {{"l", l_long}, {"n", n}, {"d", d}, {"sense", sense_name}, {"cap", cap}};
      auto report = verify_finiteness(static_cast<int>(l_long), n, d,
                                      sense_name == "ordinary" ? Sense::Ordinary : Sense::Tail,
                                      cap, options.precision_bits);
      result = {{"search", to_json(report.search)},
                {"psi_log3", to_json(report.psi3)},
                {"psi_log2", to_json(report.psi2)},
                {"within_psi_log3", report.within_psi3},
                {"within_psi_log2", report.within_psi2},
                {"gap_ratio", report.gap_ratio}};
      if (!report.within_psi3 || !report.within_psi2) exit_code = kExitViolation;
    }
  } catch (const BudgetError& e) {
    err << "refused: " << e.what() << "\n";
    return kExitBudget;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  emit(options, command, params, result, elapsed_ms(), out);
  return exit_code;
}

}  // namespace shirshov

#include <doctest.h>

#include "shirshov/serialize.hpp"

using namespace shirshov;

TEST_CASE("words round-trip, including wide alphabets") {
  for (const char* text : {"", "a", "abz"}) {
    Word w = Word::parse(text, 26);
    CHECK(word_from_json(to_json(w)) == w);
  }
  Word wide = Word::parse("[0,29,5]", 30);
  CHECK(word_from_json(to_json(wide)) == wide);
}

TEST_CASE("witness types round-trip and re-validate") {
  Word host = Word::parse("cbaab");

  auto division = max_ordinary_divisibility(host).witness;
  auto division2 = ordinary_division_from_json(to_json(division));
  CHECK(division2.boundaries == division.boundaries);
  CHECK(validate(host, division2));

  auto tails = max_tail_divisibility(host).witness;
  CHECK(validate(host, tail_division_from_json(to_json(tails))));

  PowerWitness power{Word::parse("ab"), 2, 0};
  power = *find_power(Word::parse("xyababz", 26), 2);
  auto power2 = power_witness_from_json(to_json(power));
  CHECK(power2.period == power.period);
  CHECK(power2.start == power.start);
  CHECK(power2.exponent == power.exponent);

  auto verdict = is_n_cancellable(host, 2, 2);
  auto verdict2 = verdict_from_json(to_json(verdict));
  CHECK(verdict2.kind == verdict.kind);
  REQUIRE(verdict2.division.has_value());
  CHECK(validate(host, *verdict2.division));
}

TEST_CASE("process sequences and height decompositions round-trip") {
  ProcessSequence seq{2, 3, {2, 1, 2}};
  auto seq2 = process_sequence_from_json(to_json(seq));
  CHECK(seq2.p == seq.p);
  CHECK(seq2.k == seq.k);
  CHECK(seq2.bits == seq.bits);
  CHECK(validate_process(seq2));

  Word w = Word::parse("aabba");
  auto decomposition = height_decompose(w, 2);
  auto decomposition2 = height_from_json(to_json(decomposition));
  CHECK(validate(w, 2, decomposition2));
  CHECK(decomposition2.height() == decomposition.height());
}

TEST_CASE("removal traces round-trip bit-exactly") {
  Word w = Word::parse("aaaabbbbbbbbaaaa");
  auto trace = run_removal(w, 2, 10);
  auto trace2 = removal_trace_from_json(to_json(trace));
  CHECK(trace2.step_count() == trace.step_count());
  CHECK(validate(trace2));
  CHECK(reconstruct(trace2) == w);
  CHECK(to_json(trace2).dump() == to_json(trace).dump());
}

TEST_CASE("search checkpoints round-trip") {
  SearchParams params;
  params.l = 2;
  params.n = 2;
  params.d = 3;
  auto cp = longest_avoider_step(params, std::nullopt, 5);
  auto cp2 = checkpoint_from_json(to_json(cp));
  CHECK(to_json(cp2).dump() == to_json(cp).dump());
  // resuming the reloaded checkpoint finishes identically
  auto done_a = longest_avoider_step(params, cp, -1);
  auto done_b = longest_avoider_step(params, cp2, -1);
  CHECK(to_json(done_a).dump() == to_json(done_b).dump());
}

TEST_CASE("bound values serialize as exact strings or enclosures") {
  auto exact = to_json(kuzmin(4));
  CHECK(exact["exact"] == "9");
  auto interval = to_json(psi_log3(2, 2, 2), 6);
  CHECK(interval.contains("lo"));
  CHECK(interval.contains("hi"));
  CHECK(interval["lo"].get<std::string>() <= interval["hi"].get<std::string>());
}

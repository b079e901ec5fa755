#include "shirshov/serialize.hpp"

namespace shirshov {

using nlohmann::json;

json to_json(const Word& w) {
  return json{{"text", w.str()}, {"alphabet", w.alphabet().size}};
}

Word word_from_json(const json& j) {
  return Word::parse(j.at("text").get<std::string>(), j.at("alphabet").get<int>());
}

json to_json(const OrdinaryDivision& d) { return json{{"boundaries", d.boundaries}}; }

OrdinaryDivision ordinary_division_from_json(const json& j) {
  OrdinaryDivision d;
  d.boundaries = j.at("boundaries").get<std::vector<int>>();
  return d;
}

json to_json(const TailDivision& d) { return json{{"positions", d.positions}}; }

TailDivision tail_division_from_json(const json& j) {
  TailDivision d;
  d.positions = j.at("positions").get<std::vector<int>>();
  return d;
}

json to_json(const PowerWitness& w) {
  return json{{"period", to_json(w.period)}, {"start", w.start}, {"exponent", w.exponent}};
}

PowerWitness power_witness_from_json(const json& j) {
  return PowerWitness{word_from_json(j.at("period")), j.at("start").get<int>(),
                      j.at("exponent").get<int>()};
}

json to_json(const CancellabilityVerdict& v) {
  json out{{"kind", to_string(v.kind)}};
  if (v.division) out["division"] = to_json(*v.division);
  if (v.power) out["power"] = to_json(*v.power);
  return out;
}

CancellabilityVerdict verdict_from_json(const json& j) {
  CancellabilityVerdict v;
  std::string kind = j.at("kind").get<std::string>();
  v.kind = kind == "divisible" ? CancelKind::Divisible
                               : (kind == "power" ? CancelKind::Power : CancelKind::No);
  if (j.contains("division")) v.division = ordinary_division_from_json(j.at("division"));
  if (j.contains("power")) v.power = power_witness_from_json(j.at("power"));
  return v;
}

json to_json(const PeriodicFragment& f) {
  return json{{"start", f.start}, {"period", to_json(f.period)}, {"exponent", f.exponent}};
}

PeriodicFragment fragment_from_json(const json& j) {
  return PeriodicFragment{j.at("start").get<int>(), word_from_json(j.at("period")),
                          j.at("exponent").get<int>()};
}

json to_json(const FragmentDecomposition& d) {
  json fragments = json::array();
  for (const auto& f : d.fragments) fragments.push_back(to_json(f));
  return json{{"fragments", fragments},
              {"gap_comparable", d.gap_comparable},
              {"s", d.s()},
              {"s_comparable", d.s_comparable()}};
}

json to_json(const HeightDecomposition& d) {
  json factors = json::array();
  for (const auto& f : d.factors)
    factors.push_back(json{{"base", to_json(f.base)}, {"exponent", f.exponent}});
  return json{{"factors", factors}, {"height", d.height()}, {"essential", d.essential()}};
}

HeightDecomposition height_from_json(const json& j) {
  HeightDecomposition d;
  for (const auto& f : j.at("factors"))
    d.factors.push_back(HeightFactor{word_from_json(f.at("base")), f.at("exponent").get<int>()});
  return d;
}

json to_json(const RemovalStep& s) {
  json pieces = json::array();
  for (auto [start, len] : s.pieces) pieces.push_back(json::array({start, len}));
  return json{{"period", to_json(s.period)}, {"start_current", s.start_current},
              {"exponent", s.exponent},      {"r1", s.r1},
              {"r2", s.r2},                  {"pieces", pieces}};
}

json to_json(const RemovalTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) steps.push_back(to_json(s));
  return json{{"original", to_json(t.original)},
              {"n", t.n},
              {"steps", steps},
              {"remainder", to_json(t.remainder)},
              {"removed_at", t.removed_at},
              {"tedious_type", t.tedious_type},
              {"stop_reason", t.stop_reason}};
}

RemovalTrace removal_trace_from_json(const json& j) {
  RemovalTrace t;
  t.original = word_from_json(j.at("original"));
  t.n = j.at("n").get<int>();
  for (const auto& s : j.at("steps")) {
    RemovalStep step;
    step.period = word_from_json(s.at("period"));
    step.start_current = s.at("start_current").get<int>();
    step.exponent = s.at("exponent").get<int>();
    step.r1 = s.at("r1").get<int>();
    step.r2 = s.at("r2").get<int>();
    for (const auto& piece : s.at("pieces"))
      step.pieces.emplace_back(piece.at(0).get<int>(), piece.at(1).get<int>());
    t.steps.push_back(std::move(step));
  }
  t.remainder = word_from_json(j.at("remainder"));
  t.removed_at = j.at("removed_at").get<std::vector<int>>();
  t.tedious_type = j.at("tedious_type").get<std::vector<int>>();
  t.stop_reason = j.at("stop_reason").get<std::string>();
  return t;
}

json to_json(const RemovalAccounting& a) {
  return json{{"t", a.t},
              {"s_of_k", a.s_of_k},
              {"s12", a.s12},
              {"weighted_sum", a.weighted},
              {"s12_ok", a.s12_ok},
              {"weighted_ok", a.weighted_ok},
              {"z_intervals", a.z_intervals},
              {"z_disjoint", a.z_disjoint}};
}

json to_json(const ProcessSequence& s) {
  return json{{"p", s.p}, {"k", s.k}, {"bits", s.bits}};
}

ProcessSequence process_sequence_from_json(const json& j) {
  ProcessSequence s;
  s.p = j.at("p").get<int>();
  s.k = j.at("k").get<int>();
  s.bits = j.at("bits").get<std::vector<int>>();
  return s;
}

json to_json(const BoundValue& v, int frac_digits) {
  if (v.exact) return json{{"exact", exact_decimal(*v.exact)}};
  return json{{"lo", directed_decimal(v.lo, frac_digits, false)},
              {"hi", directed_decimal(v.hi, frac_digits, true)}};
}

json to_json(const SearchResult& r) {
  return json{{"max_length", r.max_length},
              {"witness", to_json(r.witness)},
              {"exhausted", r.exhausted},
              {"nodes_explored", r.nodes_explored}};
}

json to_json(const SearchCheckpoint& cp) {
  return json{{"l", cp.params.l},
              {"n", cp.params.n ? json(*cp.params.n) : json(nullptr)},
              {"d", cp.params.d},
              {"sense", to_string(cp.params.sense)},
              {"cap", cp.params.cap},
              {"fix_first_letter", cp.params.fix_first_letter},
              {"path", cp.path},
              {"next_letter", cp.next_letter},
              {"best_length", cp.best_length},
              {"best_word", cp.best_word},
              {"cap_hit", cp.cap_hit},
              {"nodes_explored", cp.nodes_explored},
              {"done", cp.done}};
}

SearchCheckpoint checkpoint_from_json(const json& j) {
  SearchCheckpoint cp;
  cp.params.l = j.at("l").get<int>();
  if (!j.at("n").is_null()) cp.params.n = j.at("n").get<int>();
  cp.params.d = j.at("d").get<int>();
  cp.params.sense = j.at("sense").get<std::string>() == "ordinary" ? Sense::Ordinary : Sense::Tail;
  cp.params.cap = j.at("cap").get<int>();
  cp.params.fix_first_letter = j.at("fix_first_letter").get<bool>();
  cp.path = j.at("path").get<std::vector<Letter>>();
  cp.next_letter = j.at("next_letter").get<std::vector<int>>();
  cp.best_length = j.at("best_length").get<int>();
  cp.best_word = j.at("best_word").get<std::vector<Letter>>();
  cp.cap_hit = j.at("cap_hit").get<bool>();
  cp.nodes_explored = j.at("nodes_explored").get<long long>();
  cp.done = j.at("done").get<bool>();
  return cp;
}

json to_json(const BSetTrace& t) {
  json tuples = json::array();
  for (int i = 0; i < t.omega(); i++) {
    json row = json::array();
    for (int j = 0; j < t.tuple_len; j++) {
      int f = t.entries[static_cast<size_t>(i)][static_cast<size_t>(j)];
      row.push_back(f < 0 ? json(nullptr) : json(t.entry_word(i, j).str()));
    }
    tuples.push_back(row);
  }
  json out{{"omega", t.omega()},  {"colors", t.colors},          {"tuple_len", t.tuple_len},
           {"p_level", t.p_level}, {"color", t.color},           {"tuples", tuples}};
  if (t.finding) {
    out["finding"] = json{{"width", t.finding->width},
                          {"tail_divisibility", t.finding->tail_divisibility}};
    if (t.finding->power) out["finding"]["power"] = to_json(*t.finding->power);
  }
  return out;
}

json to_json(const PhiTrace& t) {
  json tuples = json::array();
  for (int i = 0; i < t.cycle_count(); i++) {
    json row = json::array();
    for (int j = 0; j < t.q; j++) {
      int id = t.entries[static_cast<size_t>(i)][static_cast<size_t>(j)];
      row.push_back(id < 0 ? json(nullptr) : json(t.entry_word(i, j).str()));
    }
    tuples.push_back(row);
  }
  json fragments = json::array();
  for (const auto& f : t.fragments) fragments.push_back(to_json(f));
  json out{{"cycles", t.cycle_count()},
           {"q", t.q},
           {"alpha", t.alpha},
           {"fragments", fragments},
           {"tuples", tuples}};
  if (t.finding) out["finding"] = json{{"width", t.finding->width}};
  return out;
}

}  // namespace shirshov

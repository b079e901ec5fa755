#pragma once

#include <json.hpp>

#include "shirshov/bounds.hpp"
#include "shirshov/chains.hpp"
#include "shirshov/divisibility.hpp"
#include "shirshov/enumeration.hpp"
#include "shirshov/fragments.hpp"
#include "shirshov/height.hpp"
#include "shirshov/periodicity.hpp"
#include "shirshov/process.hpp"
#include "shirshov/word.hpp"

// JSON encodings for every witness and trace type; wire format is versioned
// by the CLI envelope ("schema": 1).  Words travel as their text form plus
// the alphabet size, so l > 26 round-trips through the bracketed syntax.

namespace shirshov {

nlohmann::json to_json(const Word& w);
Word word_from_json(const nlohmann::json& j);

nlohmann::json to_json(const OrdinaryDivision& d);
OrdinaryDivision ordinary_division_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TailDivision& d);
TailDivision tail_division_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PowerWitness& w);
PowerWitness power_witness_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CancellabilityVerdict& v);
CancellabilityVerdict verdict_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PeriodicFragment& f);
PeriodicFragment fragment_from_json(const nlohmann::json& j);
nlohmann::json to_json(const FragmentDecomposition& d);

nlohmann::json to_json(const HeightDecomposition& d);
HeightDecomposition height_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RemovalStep& s);
nlohmann::json to_json(const RemovalTrace& t);
RemovalTrace removal_trace_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RemovalAccounting& a);

nlohmann::json to_json(const ProcessSequence& s);
ProcessSequence process_sequence_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BoundValue& v, int frac_digits = 12);

nlohmann::json to_json(const SearchResult& r);
nlohmann::json to_json(const SearchCheckpoint& cp);
SearchCheckpoint checkpoint_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BSetTrace& t);
nlohmann::json to_json(const PhiTrace& t);

}  // namespace shirshov

#pragma once

#include <string>

#include <json.hpp>

#include "pgw/automorphism.hpp"
#include "pgw/corpus.hpp"
#include "pgw/oracle.hpp"
#include "pgw/presentation.hpp"
#include "pgw/structure.hpp"
#include "pgw/witness.hpp"

namespace pgw {

using Json = nlohmann::ordered_json;

Json to_json(const PcPresentation& pres, const ConsistencyReport& r);
Json to_json(const InvariantVector& v);
Json to_json(const HypothesisReport& r);
Json to_json(const AbstractGroup& G, const WitnessData& w);
Json to_json(const AbstractGroup& G, const VerificationReport& r);
Json to_json(const Outcome& o);
Json to_json(const CrossValidationReport& r);
/// Generator images rendered in G's notation.
Json automorphism_json(const Automorphism& f);

/// Invariants plus the named subgroups (center, Frattini, series terms).
Json structure_snapshot(const AbstractGroup& G);

/// Indented "key: value" rendering of a report for terminals.
std::string render_human(const Json& doc);

}  // namespace pgw

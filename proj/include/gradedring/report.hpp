#pragma once

#include <json.hpp>

#include <string>

#include "gradedring/decide.hpp"
#include "gradedring/oracle.hpp"
#include "gradedring/spectra.hpp"

namespace gradedring {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

Json to_json(const Grade& g);
Json to_json(const ElementSet& s);
Json to_json(const Partition& p);

/// {"verdict", "certificate", "verified"}.
Json certificate_json(const Certificate& c, bool verified);

/// Full decision report for f, with schema and ring fields.
Json decision_report(const std::string& question, const Element& f, const Certificate& c,
                     bool verified);

Json oracle_report(const FiniteRingTable& t);
Json pi0_report(const FiniteRingTable& t, const Pi0Report& r);
Json laurent_report(const LaurentReport& r);
Json proj_report(const RingHandle& ring, const std::vector<Element>& gens, const ProjResult& r);

/// Serializes with a fixed indentation and trailing newline.
std::string dump(const Json& j);

}  // namespace gradedring

#pragma once

// Serialization of analysis reports, invariant checks and dumps.

#include "singquiv/spec_format.hpp"
#include "singquiv/verify.hpp"

#include <json.hpp>

namespace singquiv {

/// The fixed-key analysis report. pd values are strings such as "Finite(0)".
nlohmann::ordered_json report_json(const std::string& name, const QMAlgebra& a, const AnalysisReport& rep);
std::string report_text(const std::string& name, const QMAlgebra& a, const AnalysisReport& rep);

nlohmann::ordered_json checks_json(const std::vector<CheckOutcome>& checks);
std::string checks_text(const std::vector<CheckOutcome>& checks);

enum class DumpTarget { M, Y, Z, A, B };
DumpTarget parse_dump_target(const std::string& s);

/// Labelled basis and action matrices (M, Y, Z) or basis and multiplication table (A, B).
template <class F>
nlohmann::ordered_json dump_json(const QMAlgebra& a, DumpTarget which, const F& k);
template <class F>
std::string dump_text(const QMAlgebra& a, DumpTarget which, const F& k);

extern template nlohmann::ordered_json dump_json<PrimeField>(const QMAlgebra&, DumpTarget, const PrimeField&);
extern template nlohmann::ordered_json dump_json<RationalField>(const QMAlgebra&, DumpTarget, const RationalField&);
extern template std::string dump_text<PrimeField>(const QMAlgebra&, DumpTarget, const PrimeField&);
extern template std::string dump_text<RationalField>(const QMAlgebra&, DumpTarget, const RationalField&);

} // namespace singquiv

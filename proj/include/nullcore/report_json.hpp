#pragma once

#include "json.hpp"
#include "nullcore/analysis.hpp"
#include "nullcore/mc.hpp"
#include "nullcore/perturbation.hpp"
#include "nullcore/tree.hpp"

// JSON views of the report types. Field names are part of the CLI contract.
namespace nullcore {

nlohmann::json integer_json(const Integer &v);  // number when it fits, decimal string otherwise
nlohmann::json to_json(const IntMatrix &m);
nlohmann::json to_json(const KernelBasis &k);
nlohmann::json to_json(const TheoremCheck &c);
nlohmann::json to_json(const AnalysisReport &r);
nlohmann::json to_json(const ReductionTrace &t);
nlohmann::json to_json(const MCReport &r);
nlohmann::json to_json(const PerturbationReport &r);
nlohmann::json to_json(const UnicyclicReport &r);
nlohmann::json to_json(const VertexProvenance &p);

}  // namespace nullcore

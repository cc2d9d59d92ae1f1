#pragma once

#include <nlohmann/json_fwd.hpp>

#include "coarse/hyperbolicity.hpp"
#include "coarse/subspaces.hpp"

namespace coarse {

using json = nlohmann::json;

// Rationals travel as strings: "p" when integral, "p/q" otherwise.
json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json path_to_json(const ParamPath& path);
ParamPath path_from_json(const json& j);

json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const json& j, int n);

json report_to_json(const HyperbolicityReport& report);
HyperbolicityReport report_from_json(const json& j);

json verdict_to_json(const QGVerdict& verdict);
json morse_to_json(const MorseEstimate& estimate);
json splice_witness_to_json(const SpliceWitness& witness);
json splice_result_to_json(const SpliceResult& result);
json certify_to_json(const CertifyResult& result);
json triangle_record_to_json(const TriangleExperimentRecord& record);

ParamPath load_path(const std::string& path_file);
Subspace load_subspace(const std::string& path_file, int n);

}  // namespace coarse

#pragma once

#include <string>

#include <Eigen/Dense>

#include "json.hpp"

#include "adq/hilbert.hpp"
#include "adq/quantize.hpp"
#include "adq/relations.hpp"
#include "adq/strata.hpp"

namespace adq {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolkitVersion = "0.1.0";

Json to_json(const Rational& q);     // "p/q"
Json to_json(Complex z);             // [re, im]
Json to_json(const Eigen::MatrixXcd& m);
Json to_json(const Partition& p);
Json to_json(const StratumDescriptor& s);
Json to_json(const BracketStructure& b);
Json to_json(const CanoeRecord& r);
Json to_json(const Membership& m);

Json polynomial_json(const LaurentPoly& p, const VariableSet& vars);
Json relation_json(const Relation& rel, const RelationCheck& check);
Json spectrum_json(const SpectrumEntry& e, const VariableSet& vars);
Json projection_json(const ProjectionTable& t);

/// Model settings that reproduce a run: family, rank, torus variables,
/// torus relations and bracket coefficients.
Json model_json(const TorusModel& m);

}  // namespace adq

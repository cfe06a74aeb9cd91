#include "adq/report.hpp"

namespace adq {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const Eigen::MatrixXcd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Partition& p) { return Json(std::vector<int>(p.begin(), p.end())); }

Json to_json(const StratumDescriptor& s) {
  Json closure = Json::array();
  for (const auto& c : s.closure) closure.push_back(to_json(c));
  return {{"partition", to_json(s.partition)},
          {"dimension", s.dimension},
          {"closure", closure},
          {"ambiguous", s.ambiguous}};
}

Json to_json(const BracketStructure& b) {
  Json rows = Json::array();
  for (const auto& row : b.coefficients) {
    Json r = Json::array();
    for (const auto& c : row) r.push_back(to_json(c));
    rows.push_back(std::move(r));
  }
  return {{"scale", to_json(b.scale)}, {"coefficients", rows}};
}

Json to_json(const CanoeRecord& r) {
  return {{"z", to_json(r.z)},
          {"X", r.x},
          {"Y", r.y},
          {"b", r.b},
          {"relation_residual", r.relation_residual},
          {"bracket", r.bracket_value},
          {"kappa_red", r.kappa_reduced}};
}

Json to_json(const Membership& m) {
  return {{"member", m.member},
          {"min_eigenvalue", m.min_eigenvalue},
          {"eigenvalues", m.eigenvalues},
          {"relation_residual", m.relation_residual}};
}

Json polynomial_json(const LaurentPoly& p, const VariableSet& vars) { return to_string(p, vars); }

Json relation_json(const Relation& rel, const RelationCheck& check) {
  return {{"tag", rel.tag},
          {"lhs", rel.lhs},
          {"rhs", rel.rhs},
          {"origin", rel.origin},
          {"pass", check.pass},
          {"residual", polynomial_json(check.residual, check.vars)},
          {"residual_terms", check.residual.size()}};
}

Json spectrum_json(const SpectrumEntry& e, const VariableSet& vars) {
  Rational dim = e.dimension;
  dim.canonicalize();
  Json j = {{"lambda", e.lambda}, {"energy", to_json(e.energy)}, {"dim", dim.get_num().get_si()}};
  if (e.character) j["character"] = polynomial_json(*e.character, vars);
  return j;
}

Json projection_json(const ProjectionTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows)
    rows.push_back({{"lambda", r.lambda},
                    {"energy", to_json(r.energy)},
                    {"restricted", polynomial_json(r.restricted, t.vars)},
                    {"vanishes", r.vanishes}});
  return {{"stratum", to_json(t.stratum)}, {"variables", t.vars.names()}, {"rows", rows}};
}

Json model_json(const TorusModel& m) {
  Json relations = Json::array();
  for (const auto& r : m.ideal.relations()) relations.push_back(polynomial_json(r, m.vars));
  return {{"family", to_string(m.family)},
          {"rank", m.rank},
          {"variables", m.vars.names()},
          {"torus_relations", relations},
          {"holomorphic_generators", m.holomorphic},
          {"bracket", to_json(m.bracket)},
          {"constrained", m.constraint.has_value()}};
}

}  // namespace adq

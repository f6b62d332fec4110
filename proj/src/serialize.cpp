#include "quandleforge/serialize.hpp"

namespace qf {

using nlohmann::json;

json poly_json(const LaurentPoly& p) {
  json j = json::object();
  for (const auto& [e, c] : p.coeffs()) j[std::to_string(e)] = c;
  return j;
}

LaurentPoly poly_from_json(const json& j) {
  LaurentPoly p;
  for (const auto& [key, value] : j.items())
    p = p + LaurentPoly::term(value.get<std::int64_t>(), std::stoi(key));
  return p;
}

json matrix_json(const LaurentMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.nrows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.ncols(); ++j)
      row.push_back(poly_json(m.at(i, j)));
    rows.push_back(row);
  }
  return {{"columns", m.column_labels()}, {"rows", rows}};
}

LaurentMatrix matrix_from_json(const json& j) {
  LaurentMatrix m(j.at("columns").get<std::vector<std::string>>());
  for (const auto& row : j.at("rows")) {
    std::vector<LaurentPoly> entries;
    for (const auto& cell : row) entries.push_back(poly_from_json(cell));
    m.append_row(std::move(entries));
  }
  return m;
}

json presentation_json(const Presentation& p) {
  json rels = json::array();
  for (const auto& [l, r] : p.relations) rels.push_back({l.str(), r.str()});
  return {{"name", p.name}, {"generators", p.generators}, {"relations", rels}};
}

Presentation presentation_from_json(const json& j) {
  Presentation p;
  p.name = j.at("name").get<std::string>();
  p.generators = j.at("generators").get<std::vector<std::string>>();
  for (const auto& rel : j.at("relations"))
    p.relations.emplace_back(parse_term(rel.at(0).get<std::string>()),
                             parse_term(rel.at(1).get<std::string>()));
  validate(p);
  return p;
}

json pelem_json(const PElem& e) {
  return {{"orbit", orbit_name(e.orbit_tag)},
          {"domain", e.value.domain().str()},
          {"range", e.value.range().str()}};
}

}  // namespace qf

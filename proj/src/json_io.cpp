#include "qosc/json_io.hpp"

#include "qosc/errors.hpp"

namespace qosc {

nlohmann::json matrix_to_json(const BigRMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < 9; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < 9; ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

BigRMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 9) throw ParseError("expected 9 rows");
  BigRMatrix m;
  for (int r = 0; r < 9; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != 9) throw ParseError("row " + std::to_string(r) + " must have 9 entries");
    for (int c = 0; c < 9; ++c) m(r, c) = FieldElem::parse(row[c].get<std::string>());
  }
  return m;
}

}  // namespace qosc

// Copyright 2026 the sqptlab authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SQPTLAB_JSON_IO_HPP
#define SQPTLAB_JSON_IO_HPP

#include <json.hpp>

#include "sqpt/types.hpp"

namespace sqpt {

// Complex matrices serialize as nested arrays of [re, im] pairs.
inline nlohmann::json cmat_to_json(const CMat &m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(row);
  }
  return rows;
}

inline CMat cmat_from_json(const nlohmann::json &j) {
  if (!j.is_array() || j.empty())
    throw ParseError("matrix: expected non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j.at(0).size());
  CMat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto &row = j.at(i);
    if (static_cast<Eigen::Index>(row.size()) != cols)
      throw ParseError("matrix: ragged rows");
    for (Eigen::Index c = 0; c < cols; ++c)
      m(i, c) = cplx(row.at(c).at(0).get<double>(),
                     row.at(c).at(1).get<double>());
  }
  return m;
}

inline CVec cvec_from_json(const nlohmann::json &j) {
  CVec v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    v(static_cast<Eigen::Index>(i)) =
        cplx(j.at(i).at(0).get<double>(), j.at(i).at(1).get<double>());
  return v;
}

inline nlohmann::json cvec_to_json(const CVec &v) {
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    out.push_back({v(i).real(), v(i).imag()});
  return out;
}

}  // namespace sqpt

#endif

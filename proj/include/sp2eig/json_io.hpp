#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "sp2eig/construct.hpp"
#include "sp2eig/linalg.hpp"
#include "sp2eig/matrix.hpp"
#include "sp2eig/quaternion.hpp"
#include "sp2eig/topology.hpp"

namespace sp2eig {

// ---- encoding ----

inline void to_json(nlohmann::json& j, const Quaternion& q) {
  j = nlohmann::json::array({q.t, q.x, q.y, q.z});
}

inline void to_json(nlohmann::json& j, const MatH2& m) {
  j = nlohmann::json::array(
      {nlohmann::json::array({m.a11, m.a12}), nlohmann::json::array({m.a21, m.a22})});
}

inline void to_json(nlohmann::json& j, const RotationForm& f) {
  j = nlohmann::json{{"q", f.q}, {"theta", f.theta}};
}

inline void to_json(nlohmann::json& j, const SigmaResidual& r) {
  j = nlohmann::json{{"re_residual", r.re_residual},
                     {"det_margins", nlohmann::json::array(
                                         {r.det_margins[0], r.det_margins[1]})}};
}

inline void to_json(nlohmann::json& j, const ConstructionResult& r) {
  nlohmann::json residuals = nlohmann::json::array();
  for (std::size_t i = 0; i < r.residuals.size(); ++i) {
    nlohmann::json entry = r.residuals[i];
    entry["index"] = i;
    residuals.push_back(std::move(entry));
  }
  j = nlohmann::json{
      {"branch", r.branch == ConstructionBranch::kFullRank ? "full_rank"
                                                           : "rank_deficient"},
      {"rank", r.rank},
      {"q", r.q},
      {"cos_theta", r.cos_theta},
      {"theta", r.theta},
      {"matrices", nlohmann::json::array({r.matrices[0], r.matrices[1]})},
      {"residuals", std::move(residuals)}};
}

inline void to_json(nlohmann::json& j, const BoundCheck& b) {
  j = nlohmann::json{{"lhs", b.lhs}, {"rhs", b.rhs}, {"strict", b.strict}};
}

inline void to_json(nlohmann::json& j, const OmegaMargin& o) {
  j = nlohmann::json{{"sigma", o.sigma}, {"margin", o.margin}, {"member", o.member}};
}

inline void to_json(nlohmann::json& j, const UncoveredSample& u) {
  j = nlohmann::json{{"index", u.index},
                     {"injected", u.injected},
                     {"matrix", u.matrix},
                     {"margins", u.margins}};
}

inline void to_json(nlohmann::json& j, const CoverReport& r) {
  j = nlohmann::json{{"sigmas", r.sigmas},
                     {"samples", r.samples},
                     {"seed", r.seed},
                     {"threshold", r.threshold},
                     {"min_best_margin", r.min_best_margin},
                     {"uncovered", r.uncovered}};
}

// ---- decoding with validation ----

inline Quaternion quaternion_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 4)
    throw std::invalid_argument("expected a quaternion as [t, x, y, z], got " +
                                j.dump());
  for (const auto& e : j)
    if (!e.is_number())
      throw std::invalid_argument("quaternion entries must be numbers, got " +
                                  j.dump());
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(),
          j[3].get<double>()};
}

inline MatH2 math2_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
      !j[1].is_array() || j[1].size() != 2)
    throw std::invalid_argument(
        "expected a 2x2 matrix as [[q, q], [q, q]] with quaternion entries");
  return {quaternion_from_json(j[0][0]), quaternion_from_json(j[0][1]),
          quaternion_from_json(j[1][0]), quaternion_from_json(j[1][1])};
}

inline std::vector<Quaternion> quaternion_list_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("expected a non-empty array of quaternions");
  std::vector<Quaternion> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(quaternion_from_json(e));
  return out;
}

inline std::vector<double> real_vector_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("expected a non-empty array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number())
      throw std::invalid_argument("vector entries must be numbers, got " + j.dump());
    out.push_back(e.get<double>());
  }
  return out;
}

inline RealMatrix real_matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("expected a matrix as a non-empty array of rows");
  const std::vector<double> first = real_vector_from_json(j[0]);
  RealMatrix m(j.size(), first.size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::vector<double> row = real_vector_from_json(j[r]);
    if (row.size() != m.cols())
      throw std::invalid_argument("matrix rows have inconsistent lengths");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = row[c];
  }
  return m;
}

// ---- deterministic text form ----

namespace detail {

inline void dump17(const nlohmann::json& j, std::string& out) {
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += nlohmann::json(it.key()).dump();
        out += ':';
        dump17(it.value(), out);
      }
      out += '}';
      break;
    }
    case nlohmann::json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += ',';
        first = false;
        dump17(e, out);
      }
      out += ']';
      break;
    }
    case nlohmann::json::value_t::number_float: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", j.get<double>());
      out += buf;
      break;
    }
    default:
      out += j.dump();
      break;
  }
}

}  // namespace detail

/// Serialize with every float at 17 significant digits so that parsing
/// the output reproduces each double bit for bit.
inline std::string dump_json17(const nlohmann::json& j) {
  std::string out;
  detail::dump17(j, out);
  return out;
}

}  // namespace sp2eig

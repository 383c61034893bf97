#include "qudit/io.hpp"

#include <string>

namespace qudit::io {

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw DomainError("matrix must be a non-empty array of rows");
  const auto n = static_cast<Eigen::Index>(j.size());
  ComplexMatrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw DomainError("matrix row " + std::to_string(r) + " must have " + std::to_string(n) + " entries");
    }
    for (Eigen::Index c = 0; c < n; ++c) {
      const Json& e = row[static_cast<std::size_t>(c)];
      if (e.is_number()) {
        m(r, c) = e.get<double>();
      } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
        m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
      } else {
        throw DomainError("matrix entries must be numbers or [re, im] pairs");
      }
    }
  }
  return m;
}

Json to_json(const BasisSet& basis) {
  Json elements = Json::array();
  for (const auto& e : basis.elements) elements.push_back(matrix_to_json(e));
  Json cartan = Json::array();
  for (int idx : basis.cartan_indices) cartan.push_back(idx + 1);
  return {{"N", basis.dim}, {"elements", std::move(elements)}, {"cartan_indices", std::move(cartan)}};
}

namespace {

Json tensor_entries(const std::map<IndexTriple, double>& entries) {
  Json out = Json::array();
  for (const auto& [key, value] : entries) {
    out.push_back({{"i", key[0] + 1}, {"j", key[1] + 1}, {"k", key[2] + 1}, {"value", value}});
  }
  return out;
}

}  // namespace

Json to_json(const StructureTensors& tensors) {
  return {{"N", tensors.dim},
          {"tolerance", tensors.tolerance},
          {"d", tensor_entries(tensors.d)},
          {"f", tensor_entries(tensors.f)}};
}

Json to_json(const StateClassification& c) {
  return {{"is_state", c.is_state}, {"rank", c.rank}, {"stratum", c.stratum}, {"margin", c.margin}};
}

Json to_json(const CasimirValues& c) {
  return {{"c2", c.c2}, {"c3", c.c3}, {"c4", c.c4}, {"c5", c.c5}, {"c6", c.c6}};
}

Json to_json(const OrbitCoordinates& c) {
  return {{"N", c.dim},
          {"radius", c.radius},
          {"angles", c.angles},
          {"convention", c.convention},
          {"degenerate", c.degenerate}};
}

Json to_json(const StratumReport& s) {
  return {{"label", s.label},
          {"orbit_dimension", s.orbit_dimension},
          {"rank", s.rank},
          {"stratum", s.stratum},
          {"spectrum", s.spectrum.values()}};
}

Json to_json(const ArcReport& a) {
  return {{"r", a.radius},
          {"circle_radius", a.circle_radius},
          {"psi_begin", a.psi_begin},
          {"psi_end", a.psi_end},
          {"angular_extent", a.angular_extent},
          {"arc_length", a.arc_length},
          {"begin", a.begin_point},
          {"end", a.end_point}};
}

Json to_json(const PolyhedronReport& p) {
  return {{"r", p.radius}, {"sphere_radius", p.sphere_radius}, {"shape", p.shape}, {"vertices", p.vertices}};
}

Json invariants_record(const TraceInvariants& t, const CasimirValues* casimirs) {
  Json rec = {{"N", t.dim},
              {"t", t.values},
              {"S", char_coefficients(t).values},
              {"disc", discriminant(t)},
              {"bezoutian_rank", bezoutian_rank(t)}};
  if (casimirs != nullptr) rec["casimirs"] = to_json(*casimirs);
  return rec;
}

HermitianMatrix state_from_json(const Json& record) {
  if (!record.is_object()) throw DomainError("state record must be a JSON object");
  if (record.contains("xi")) {
    const auto xi = record.at("xi").get<std::vector<double>>();
    if (record.contains("N")) return from_bloch(BlochVector(record.at("N").get<int>(), xi));
    return from_bloch(BlochVector(Eigen::Map<const RealVector>(xi.data(), static_cast<Eigen::Index>(xi.size()))));
  }
  if (record.contains("rho")) {
    ComplexMatrix m = matrix_from_json(record.at("rho"));
    if (record.contains("N") && record.at("N").get<int>() != m.rows()) {
      throw DimensionMismatch("state record: N does not match rho");
    }
    return HermitianMatrix(std::move(m), 1e-10);
  }
  throw DomainError("state record needs an \"xi\" or \"rho\" field");
}

}  // namespace qudit::io

#pragma once

// JSON reports. Keys keep insertion order and every value is derived from the
// inputs and the seed only, so identical runs serialize byte-identically.

#include <optional>
#include <string>

#include <json.hpp>

#include "sutcert/certifier.hpp"

namespace sutcert {

using Json = nlohmann::ordered_json;

inline constexpr int kReportVersion = 1;

template <class T>
Json matrix_json(const Matrix<T>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class Field>
Json representation_json(const Representation<Field>& rho) {
  Json gens = Json::array();
  for (std::size_t i = 0; i < rho.rank(); ++i)
    gens.push_back({{"generator", rho.alphabet().name(i)},
                    {"matrix", format_matrix(rho.generator(i), [](const auto& x) { return to_string(x); })}});
  return {{"field", rho.field().tag()}, {"dimension", rho.dimension()}, {"note", rho.note()}, {"generators", gens}};
}

Json conventions_json();
Json presentation_json(const SuturedPresentation& pres);

template <class Field>
Json certificate_json(const SuturedPresentation& pres, const Certificate<Field>& cert) {
  Json j;
  j["kind"] = "certificate";
  j["version"] = kReportVersion;
  j["presentation"] = presentation_json(pres);
  j["representation"] = representation_json(cert.representation);
  j["jacobian"] = matrix_json(cert.jacobian);
  j["det"] = to_string(cert.det);
  j["dual_det"] = cert.dual_det ? Json(to_string(*cert.dual_det)) : Json(nullptr);
  j["self_dual_reason"] = cert.self_dual_reason ? Json(*cert.self_dual_reason) : Json(nullptr);
  j["verdict"] = to_string(cert.verdict);
  j["conventions"] = conventions_json();
  j["trail"] = cert.trail;
  return j;
}

Json one_dim_json(const SuturedPresentation& pres, const OneDimGenericResult& result);
Json random_json(const SuturedPresentation& pres, const RandomReport& report);

struct ObstructionRun {
  std::size_t max_depth = 0;
  std::size_t search_length = 0;
  std::vector<std::size_t> depths;  // possibly partial
  std::optional<SolvableObstruction> solvable;
  std::optional<ObstructionWitness> one_dim_witness;
  bool one_dim_searched = false;
  std::optional<std::string> resource_error;
};

Json obstruction_json(const SuturedPresentation& pres, const ObstructionRun& run);

std::string dump(const Json& j);  // two-space indent, trailing newline

}  // namespace sutcert

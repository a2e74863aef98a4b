#include "sutcert/report.hpp"

namespace sutcert {

Json conventions_json() {
  ConventionLedger c;
  return {{"commutator", c.commutator}, {"fox", c.fox}, {"jacobian", c.jacobian}};
}

Json presentation_json(const SuturedPresentation& pres) {
  Json words = Json::array();
  for (const auto& w : pres.surface_words) words.push_back(format_word(w, pres.alphabet));
  return {{"label", pres.label},
          {"genus", pres.genus()},
          {"generators", pres.alphabet.names()},
          {"surface_words", words},
          {"sutures", pres.suture_metadata}};
}

Json one_dim_json(const SuturedPresentation& pres, const OneDimGenericResult& result) {
  Json j;
  j["kind"] = "one_dim_generic";
  j["version"] = kReportVersion;
  j["presentation"] = presentation_json(pres);
  j["determinant"] = result.det.to_string(pres.alphabet);
  j["verdict"] = result.certified ? "generically-certified" : "not-certified-by-any-one-dimensional-representation";
  j["conventions"] = conventions_json();
  return j;
}

Json random_json(const SuturedPresentation& pres, const RandomReport& report) {
  Json j;
  j["kind"] = "random";
  j["version"] = kReportVersion;
  j["presentation"] = presentation_json(pres);
  j["dimension"] = report.dimension;
  j["prime"] = report.prime;
  j["seed"] = report.seed;
  j["trials_requested"] = report.trials_requested;
  j["trials_run"] = report.trials_run;
  j["failures"] = report.failures;
  j["outcome"] = report.is_witness() ? "witness" : "inconclusive";
  if (report.is_witness()) {
    j["witness"] = {{"trial", *report.witness_trial},
                    {"representation", representation_json(*report.witness)},
                    {"det", report.det->to_string()},
                    {"dual_det", report.dual_det->to_string()}};
  } else {
    j["witness"] = nullptr;
  }
  j["conventions"] = conventions_json();
  return j;
}

Json obstruction_json(const SuturedPresentation& pres, const ObstructionRun& run) {
  Json j;
  j["kind"] = "obstruction";
  j["version"] = kReportVersion;
  j["presentation"] = presentation_json(pres);
  j["max_depth"] = run.max_depth;
  Json depths = Json::array();
  for (std::size_t i = 0; i < run.depths.size(); ++i)
    depths.push_back({{"surface_generator", "a" + std::to_string(i + 1)}, {"depth", run.depths[i]}});
  j["depths"] = depths;
  j["complete"] = run.solvable.has_value();
  if (run.solvable) {
    j["degree_bound"] = run.solvable->max_depth;
    j["statement"] = run.solvable->statement();
  } else {
    j["degree_bound"] = nullptr;
    j["statement"] = nullptr;
  }
  j["search_length"] = run.search_length;
  if (run.one_dim_witness) {
    auto sa = surface_alphabet(pres.genus());
    j["one_dim_witness"] = {{"surface_word", format_word(run.one_dim_witness->surface_word, sa)},
                            {"image", format_word(run.one_dim_witness->image, pres.alphabet)},
                            {"depth", run.one_dim_witness->depth}};
  } else {
    j["one_dim_witness"] = nullptr;
  }
  j["one_dim_searched"] = run.one_dim_searched;
  j["resource_error"] = run.resource_error ? Json(*run.resource_error) : Json(nullptr);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace sutcert

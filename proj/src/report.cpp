#include "hpseudo/report.hpp"

namespace hp {

Report::Report(const std::string& command) : command_(command) {}

void Report::set_spec(const std::string& file, const LieAlgebraSpec& s) {
  spec_ = Json::object();
  spec_["file"] = file;
  spec_["name"] = s.name;
  spec_["dim"] = s.dim;
  spec_["abelian"] = s.abelian();
  spec_["chi_zero"] = s.chi_zero();
}

void Report::set_config(Json config) { config_ = std::move(config); }

void Report::add_section(const std::string& name, bool pass, Json body, const std::string& detail) {
  Json s = Json::object();
  s["name"] = name;
  s["verdict"] = pass ? "PASS" : "FAIL";
  for (auto& [k, v] : body.items()) s[k] = v;
  sections_.push_back(std::move(s));
  if (!pass) note_failure(detail.empty() ? name : name + ": " + detail);
}

void Report::note_failure(const std::string& what) {
  pass_ = false;
  if (first_failure_.empty()) first_failure_ = what;
}

Json Report::json() const {
  Json j = Json::object();
  j["schema_version"] = kReportSchema;
  j["command"] = command_;
  if (!spec_.is_null()) j["spec"] = spec_;
  if (!config_.is_null()) j["config"] = config_;
  j["verdict"] = pass_ ? "PASS" : "FAIL";
  j["sections"] = sections_;
  return j;
}

std::string Report::dump() const { return json().dump(2) + "\n"; }

namespace {

std::string row_string(const ExactnessRow& r) {
  return "term " + std::to_string(r.term) + " degree " + std::to_string(r.degree) + ": kernel " +
         std::to_string(r.kernel) + " image " + std::to_string(r.image) + (r.exact ? " exact" : " NOT exact");
}

}  // namespace

Json to_json(const Q& q) { return to_string(q); }

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (int j = 0; j < m.cols(); ++j) r.push_back(to_string(m(i, j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

Json to_json(const std::vector<CheckItem>& items) {
  Json a = Json::array();
  for (const auto& it : items) {
    Json e = Json::object();
    e["check"] = it.name;
    e["pass"] = it.pass;
    if (!it.witness.empty()) e["witness"] = it.witness;
    a.push_back(std::move(e));
  }
  return a;
}

std::string first_failed_item(const std::vector<CheckItem>& items) {
  for (const auto& it : items)
    if (!it.pass) return it.witness.empty() ? it.name : it.name + " at " + it.witness;
  return "";
}

Json to_json(const ValidationReport& r) {
  Json j = Json::object();
  j["checks"] = to_json(r.items);
  if (!r.ok()) j["first_failure"] = r.first_failure();
  return j;
}

Json to_json(const ExactnessReport& r) {
  Json j = Json::object();
  j["zero_compositions"] = r.zero_compositions;
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(row_string(row));
  j["rows"] = std::move(rows);
  return j;
}

Json to_json(const std::vector<WeightDegree>& p) {
  Json a = Json::array();
  for (const auto& w : p) {
    Json e = Json::object();
    e["weight"] = weight_label(w.weight);
    e["degree"] = w.degree;
    e["multiplicity"] = w.multiplicity;
    a.push_back(std::move(e));
  }
  return a;
}

Json to_json(const ClassifyVerdict& v) {
  Json j = Json::object();
  j["expected"] = to_json(v.expected);
  j["found"] = to_json(v.found);
  j["singular_dims"] = v.dims;
  j["lambda_case"] = v.lambda_case;
  if (v.lambda_case) {
    j["fil1_lambda_independent"] = v.fil1_lambda_independent;
    j["deformation_ok"] = v.deformation_ok;
    j["irreducible_flag"] = v.irreducible_flag;
  }
  j["notes"] = v.notes;
  return j;
}

Json to_json(const SplitVerdict& v) {
  Json j = Json::object();
  j["built"] = v.built;
  j["zero_compositions"] = v.zero_compositions;
  j["exact"] = v.exact;
  j["split"] = v.split;
  j["slack"] = v.slack;
  Json rows = Json::array();
  for (const auto& row : v.rows)
    rows.push_back(row_string(row));
  j["rows"] = std::move(rows);
  j["notes"] = v.notes;
  return j;
}

Json to_json(const IrreducibilityVerdict& v) {
  Json j = Json::object();
  j["irreducible"] = v.irreducible;
  j["notes"] = v.notes;
  return j;
}

Json to_json(const LatticeVerdict& v) {
  Json j = Json::object();
  j["module"] = v.module;
  j["chain"] = v.chain;
  Json dims = Json::object();
  for (const auto& [k, d] : v.dims) dims[k] = d;
  j["dims"] = std::move(dims);
  j["proportional"] = v.proportional;
  j["scalar"] = v.scalar;
  j["notes"] = v.notes;
  return j;
}

Json to_json(const DistinguishedImages& d, int n) {
  Json j = Json::object();
  j["kernel"] = d.kernel_ok;
  j["linear"] = d.linear_ok;
  j["quadratic"] = d.quadratic_ok;
  j["central"] = d.central_ok;
  Json q = Json::object();
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int l = i; l < n; ++l, ++k)
      if (k < static_cast<int>(d.quadratic.size()))
        q["x" + std::to_string(i + 1) + "x" + std::to_string(l + 1)] = to_json(d.quadratic[k]);
  j["quadratic_images"] = std::move(q);
  if (!d.failures.empty()) j["failures"] = d.failures;
  return j;
}

}  // namespace hp

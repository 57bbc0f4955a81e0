#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "hpseudo/annihilation.hpp"
#include "hpseudo/complexes.hpp"
#include "hpseudo/singular.hpp"

namespace hp {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "hpseudo-report/1";

// Sections keep insertion order, so equal inputs give byte-identical output.
class Report {
 public:
  explicit Report(const std::string& command);

  void set_spec(const std::string& file, const LieAlgebraSpec& s);
  void set_config(Json config);
  void add_section(const std::string& name, bool pass, Json body, const std::string& detail = "");
  bool pass() const { return pass_; }
  // "section: detail" of the first failing section, empty on pass.
  const std::string& first_failure() const { return first_failure_; }
  void note_failure(const std::string& what);
  Json json() const;
  std::string dump() const;

 private:
  std::string command_;
  Json spec_, config_;
  Json sections_ = Json::array();
  bool pass_ = true;
  std::string first_failure_;
};

Json to_json(const Q& q);
Json to_json(const Matrix& m);
Json to_json(const std::vector<CheckItem>& items);
Json to_json(const ValidationReport& r);
Json to_json(const ExactnessReport& r);
Json to_json(const std::vector<WeightDegree>& p);
Json to_json(const ClassifyVerdict& v);
Json to_json(const SplitVerdict& v);
Json to_json(const IrreducibilityVerdict& v);
Json to_json(const LatticeVerdict& v);
Json to_json(const DistinguishedImages& d, int n);

// "name (witness)" for the first failing item, empty when all pass.
std::string first_failed_item(const std::vector<CheckItem>& items);

}  // namespace hp

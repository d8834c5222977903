#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qmirror/mirrormap.hpp"
#include "qmirror/rational.hpp"

namespace qmirror {

// One named verification with an optional list of series-level sub-results.
struct CheckOutcome {
  std::string name;
  bool pass = false;
  std::string note;
  std::vector<SeriesCheck> series;
};

struct VerifyConfig {
  std::optional<Rat> cutoff;
  std::optional<Rat> order;
  int threads = 1;
};

// Registry order; "all" runs every entry.
std::vector<std::string> verify_names();
std::vector<CheckOutcome> run_verify(const std::string& name, const VerifyConfig& cfg);

nlohmann::ordered_json verify_report_json(const std::vector<CheckOutcome>& results);
std::string verify_summary(const std::vector<CheckOutcome>& results);

}  // namespace qmirror

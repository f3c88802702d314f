#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scpn/model_spec.hpp"

namespace scpn {

enum class Status { kPass, kFail, kError };
std::string_view to_string(Status s);

// Suite names in report order.
const std::vector<std::string>& suite_names();

struct CheckRecord {
  std::string suite;
  std::optional<int> k;  // nullopt: whole model; -1: control projector
  std::optional<GaussianRational> lambda;
  Status status = Status::kPass;
  std::string defect;  // "0", or the first nonzero defect's leading term, or the error
  double wall_ms = 0;
};

struct Report {
  std::string model;
  std::vector<CheckRecord> records;
  int count(Status s) const;
  int exit_code() const;  // 2 on any error, else 1 on any fail, else 0
};

struct VerifyOptions {
  std::vector<std::string> checks;  // empty: the spec's list, or every suite
  int jobs = 1;
};

// Unknown suite names in options or spec raise kInvalidArgument.
Report run_verify(const ModelSpec& spec, const VerifyOptions& options);

std::string render_text(const Report& report);
std::string render_json(const Report& report);

}  // namespace scpn

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scpn/model.hpp"

namespace scpn {

inline constexpr const char* kModelSchema = "scpn-model/1";

struct TermSpec {
  GaussianRational coefficient;
  std::vector<std::string> monomial;  // generator names, multiplied left to right
  int x_power = 0;
  int x_minus_power = 0;
  friend bool operator==(const TermSpec&, const TermSpec&) = default;
};

using TermList = std::vector<TermSpec>;

struct ReductionSpec {
  GaussianRational c_plus;
  GaussianRational c_minus;
  friend bool operator==(const ReductionSpec&, const ReductionSpec&) = default;
};

struct ModelSpec {
  std::string name;
  int n = 0;
  std::vector<std::pair<std::string, std::string>> generators;  // first pair is theta
  GaussianRational base_point;
  int truncation_order = 0;
  std::vector<std::vector<TermList>> psi;  // psi[j][component]
  std::vector<TermList> epsilon;           // epsilon_1 .. epsilon_{N-1}
  std::vector<GaussianRational> lambdas;
  std::optional<std::vector<std::vector<GaussianRational>>> q;
  std::vector<std::string> checks;  // empty means every suite
  std::optional<ReductionSpec> reduction;
  std::optional<std::vector<TermList>> control_vector;
  friend bool operator==(const ModelSpec&, const ModelSpec&) = default;
};

// kParse on malformed input.
ModelSpec parse_model_spec(const std::string& text);
std::string serialize_model_spec(const ModelSpec& spec);

// veronese_cp<n> (n >= 1), eta_cp1, negative_control; kUnknownExample otherwise.
ModelSpec emit_example(const std::string& name);

// Structures built from a spec.
SpacePtr spec_space(const ModelSpec& spec);
Chain spec_chain(const ModelSpec& spec, const SpacePtr& space);
SuperVector spec_vector(const std::vector<TermList>& components, const SpacePtr& space, int order);
std::optional<SuperMatrix> spec_q(const ModelSpec& spec, const SpacePtr& space);

}  // namespace scpn

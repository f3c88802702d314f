#include <chrono>
#include <map>
#include <set>

#include "json.hpp"
#include "scpn/error.hpp"
#include "scpn/verify.hpp"
#include "support.hpp"

using namespace scpn;
using namespace scpn::testing;

namespace {

std::string random_name(Rng& rng) {
  std::string s;
  for (int i = rng.uniform(1, 8); i > 0; --i) s += static_cast<char>('a' + rng.uniform(0, 25));
  return s;
}

TermList random_terms(Rng& rng, const std::vector<std::string>& names) {
  TermList out;
  for (int i = rng.uniform(0, 3); i > 0; --i) {
    TermSpec t;
    t.coefficient = rng.scalar();
    for (int g = rng.uniform(0, 2); g > 0; --g) t.monomial.push_back(names[rng.uniform(0, names.size() - 1)]);
    t.x_power = rng.uniform(0, 3);
    t.x_minus_power = rng.uniform(0, 1) ? rng.uniform(0, 2) : 0;
    out.push_back(std::move(t));
  }
  return out;
}

ModelSpec random_spec(Rng& rng) {
  ModelSpec s;
  s.name = random_name(rng);
  s.n = rng.uniform(1, 4);
  std::vector<std::string> names;
  for (int p = rng.uniform(1, 3); p > 0; --p) {
    std::string stem = random_name(rng) + std::to_string(p);
    s.generators.emplace_back(stem + "+", stem + "-");
    names.push_back(stem + "+");
    names.push_back(stem + "-");
  }
  s.base_point = rng.scalar();
  s.truncation_order = rng.uniform(0, 12);
  for (int j = 0; j < s.n; ++j) {
    std::vector<TermList> v;
    for (int c = 0; c < s.n; ++c) v.push_back(random_terms(rng, names));
    s.psi.push_back(std::move(v));
  }
  for (int j = 1; j < s.n; ++j) s.epsilon.push_back(random_terms(rng, names));
  for (int l = rng.uniform(0, 4); l > 0; --l) s.lambdas.push_back(rng.scalar());
  if (rng.uniform(0, 1)) {
    std::vector<std::vector<GaussianRational>> rows(s.n, std::vector<GaussianRational>(s.n));
    for (auto& r : rows) {
      for (auto& e : r) e = rng.scalar();
    }
    s.q = rows;
  }
  for (const auto& suite : suite_names()) {
    if (rng.uniform(0, 2) == 0) s.checks.push_back(suite);
  }
  if (rng.uniform(0, 1)) s.reduction = ReductionSpec{rng.scalar(), rng.scalar()};
  if (rng.uniform(0, 1)) {
    std::vector<TermList> v;
    for (int c = 0; c < s.n; ++c) v.push_back(random_terms(rng, names));
    s.control_vector = v;
  }
  return s;
}

std::map<std::string, int> statuses(const Report& r, Status s) {
  std::map<std::string, int> out;
  for (const auto& rec : r.records) {
    if (rec.status == s) ++out[rec.suite];
  }
  return out;
}

bool all_pass(const Report& r) {
  for (const auto& rec : r.records) {
    if (rec.status != Status::kPass) {
      MESSAGE(rec.suite << " k=" << (rec.k ? *rec.k : -2) << ": " << rec.defect);
      return false;
    }
  }
  return !r.records.empty();
}

}  // namespace

TEST_CASE("model spec round trip is byte stable") {
  for (const char* name : {"veronese_cp2", "veronese_cp4", "eta_cp1", "negative_control"}) {
    ModelSpec s = emit_example(name);
    std::string text = serialize_model_spec(s);
    ModelSpec back = parse_model_spec(text);
    CHECK(back == s);
    CHECK(serialize_model_spec(back) == text);
  }
  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    ModelSpec s = random_spec(rng);
    std::string text = serialize_model_spec(s);
    ModelSpec back = parse_model_spec(text);
    REQUIRE(back == s);
    CHECK(serialize_model_spec(back) == text);
  }
}

TEST_CASE("example contents") {
  ModelSpec cp2 = emit_example("veronese_cp2");
  CHECK(cp2.n == 3);
  CHECK(cp2.truncation_order == 9);
  CHECK(cp2.base_point == cq(1, 2, 1, 3));
  CHECK(cp2.generators == std::vector<std::pair<std::string, std::string>>{{"theta+", "theta-"}});
  REQUIRE(cp2.lambdas.size() == 4);
  CHECK(cp2.lambdas[0] == cq(3, 5, 4, 5));
  CHECK(cp2.lambdas[1] == cq(5, 13, 12, 13));
  CHECK(cp2.lambdas[2] == q(-1));
  CHECK(cp2.lambdas[3] == q(1));
  // psi_0 = (1, x, x^2), epsilon_j = theta+
  CHECK(cp2.psi[0][2] == TermList{{q(1), {}, 2, 0}});
  CHECK(cp2.psi[2][2] == TermList{{q(2), {}, 0, 0}});
  CHECK(cp2.epsilon[1] == TermList{{q(1), {"theta+"}, 0, 0}});

  ModelSpec eta = emit_example("eta_cp1");
  CHECK(eta.n == 2);
  CHECK(eta.generators.size() == 2);
  CHECK(eta.reduction.has_value());
  CHECK(eta.psi[1][0].empty());
  CHECK(eta.psi[1][1] == TermList{{q(1), {}, 0, 0}});

  CHECK(emit_example("veronese_cp5").n == 6);
  CHECK_THROWS_AS(emit_example("veronese_cp0"), Error);
  CHECK_THROWS_AS(emit_example("bogus"), Error);
}

TEST_CASE("spec parse errors") {
  std::string good = serialize_model_spec(emit_example("veronese_cp2"));
  auto mutate = [&](const std::function<void(nlohmann::ordered_json&)>& f) {
    auto j = nlohmann::ordered_json::parse(good);
    f(j);
    return j.dump();
  };
  auto parse_code = [](const std::string& text) {
    try {
      parse_model_spec(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  CHECK(parse_code("{") == ErrorCode::kParse);
  CHECK(parse_code("[]") == ErrorCode::kParse);
  CHECK(parse_code(mutate([](auto& j) { j["schema"] = "scpn-model/0"; })) == ErrorCode::kParse);
  CHECK(parse_code(mutate([](auto& j) { j.erase("psi"); })) == ErrorCode::kParse);
  CHECK(parse_code(mutate([](auto& j) { j["base_point"] = {0.5, 0.25}; })) == ErrorCode::kParse);
  CHECK(parse_code(mutate([](auto& j) { j["base_point"] = {"1/0", "0"}; })) == ErrorCode::kParse);
  CHECK(parse_code(mutate([](auto& j) { j["N"] = 2; })) == ErrorCode::kParse);
  CHECK(parse_code(mutate([](auto& j) { j["psi"][0][0][0]["x_power"] = -1; })) == ErrorCode::kParse);
  CHECK(parse_code(mutate([](auto& j) { j["psi"][0][0][0].erase("x_power"); })) == ErrorCode::kParse);
  CHECK(parse_code(mutate([](auto& j) { j["epsilon"].push_back(nlohmann::ordered_json::array()); })) ==
        ErrorCode::kParse);
  CHECK(parse_code(mutate([](auto& j) { j["truncation_order"] = "nine"; })) == ErrorCode::kParse);
}

TEST_CASE("veronese_cp2 passes every suite") {
  auto t0 = std::chrono::steady_clock::now();
  Report r = run_verify(emit_example("veronese_cp2"), {{}, 2});
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(all_pass(r));
  CHECK(r.exit_code() == 0);
  CHECK(seconds < 30);
  // one record per (suite, k, lambda): chain 2, 9 per-k suites x 3, sum_rules 1, three lambda suites x 12
  CHECK(r.records.size() == 2 + 3 * 6 + 1 + 3 * 12);
  std::set<std::tuple<std::string, int, std::string>> keys;
  for (const auto& rec : r.records) {
    keys.insert({rec.suite, rec.k.value_or(-9), rec.lambda ? rec.lambda->to_string() : ""});
  }
  CHECK(keys.size() == r.records.size());
}

TEST_CASE("eta_cp1 passes every suite") {
  Report r = run_verify(emit_example("eta_cp1"), {{}, 1});
  CHECK(all_pass(r));
  CHECK(statuses(r, Status::kPass)["reduction"] == 2);
}

TEST_CASE("negative control fails outside the chain") {
  Report r = run_verify(emit_example("negative_control"), {{}, 1});
  CHECK(r.exit_code() == 1);
  auto pass = statuses(r, Status::kPass);
  auto fail = statuses(r, Status::kFail);
  CHECK(pass["chain"] == 2);
  CHECK(fail["chain"] == 0);
  CHECK(fail["el"] == 1);
  CHECK(fail["conservation"] == 1);
  CHECK(fail["mc"] >= 1);
  CHECK(r.count(Status::kError) == 0);
  for (const auto& rec : r.records) {
    if (rec.status == Status::kFail) CHECK(rec.defect != "0");
  }
  CHECK(render_text(r).find("euler_lagrange: ") != std::string::npos);
}

TEST_CASE("errors are reported per check") {
  ModelSpec s = emit_example("veronese_cp2");
  // nilpotent seed: |z_0|^2 has no invertible body
  s.psi[0] = {{{q(1), {"theta+"}, 0, 0}}, {}, {}};
  Report r = run_verify(s, {{"chain", "el"}, 1});
  CHECK(r.exit_code() == 2);
  REQUIRE(r.records.size() == 2);
  for (const auto& rec : r.records) CHECK(rec.status == Status::kError);

  ModelSpec off = emit_example("veronese_cp2");
  off.lambdas = {q(2)};
  Report ro = run_verify(off, {{"spectral"}, 1});
  CHECK(ro.exit_code() == 2);
  CHECK(ro.count(Status::kError) == 3);

  ModelSpec unreduced = emit_example("veronese_cp2");
  Report rr = run_verify(unreduced, {{"reduction"}, 1});
  CHECK(rr.count(Status::kError) == 3);

  CHECK_THROWS_AS(run_verify(unreduced, {{"nonsense"}, 1}), Error);
}

TEST_CASE("report is deterministic across job counts") {
  ModelSpec s = emit_example("eta_cp1");
  VerifyOptions subset{{"chain", "el", "mc", "sym_tafel"}, 1};
  Report a = run_verify(s, subset);
  subset.jobs = 4;
  Report b = run_verify(s, subset);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].suite == b.records[i].suite);
    CHECK(a.records[i].k == b.records[i].k);
    CHECK(a.records[i].lambda == b.records[i].lambda);
    CHECK(a.records[i].status == b.records[i].status);
    CHECK(a.records[i].defect == b.records[i].defect);
  }
  auto j = nlohmann::json::parse(render_json(a));
  CHECK(j["schema"] == "scpn-report/1");
  CHECK(j["records"].size() == a.records.size());
  CHECK(j["summary"]["exit_code"] == 0);
  CHECK(j["records"][0]["check"] == "chain");
  CHECK(j["records"][0]["lambda"].is_null());
}

#include "scpn/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <thread>

#include "json.hpp"
#include "scpn/error.hpp"
#include "scpn/forms.hpp"
#include "scpn/geometry.hpp"
#include "scpn/spectral.hpp"

namespace scpn {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kError: return "error";
  }
  return "?";
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"chain", "el", "conservation", "propz", "densities", "sum_rules",
                                              "mc", "spectral", "sym_tafel", "surface", "metric", "reduction"};
  return names;
}

int Report::count(Status s) const {
  return static_cast<int>(std::count_if(records.begin(), records.end(),
                                        [s](const CheckRecord& r) { return r.status == s; }));
}

int Report::exit_code() const {
  if (count(Status::kError) > 0) return 2;
  return count(Status::kFail) > 0 ? 1 : 0;
}

namespace {

// Collects named defects; the first nonzero one is reported.
class Defects {
 public:
  void add(const std::string& name, const Superfield& f) {
    if (first_.empty() && !f.is_zero()) first_ = name + ": " + f.leading_term();
  }
  void add(const std::string& name, const SuperMatrix& m) {
    if (first_.empty() && !m.is_zero()) first_ = name + ": " + m.leading_term();
  }
  void add(const std::string& name, const SuperVector& v) {
    for (int i = 0; i < v.size(); ++i) add(name + "[" + std::to_string(i) + "]", v[i]);
  }
  void add(const std::string& name, const TwoSuperform& f) {
    if (first_.empty() && !f.is_zero()) first_ = name + ": " + f.leading_term();
  }
  template <class T, std::size_t N>
  void add(const std::string& name, const std::array<T, N>& xs) {
    for (std::size_t i = 0; i < N; ++i) add(name + "[" + std::to_string(i) + "]", xs[i]);
  }
  template <class T>
  void add(const std::string& name, const std::vector<T>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) add(name + "[" + std::to_string(i) + "]", xs[i]);
  }
  void require(const std::string& name, bool ok) {
    if (first_.empty() && !ok) first_ = name;
  }
  bool clean() const { return first_.empty(); }
  const std::string& first() const { return first_; }

 private:
  std::string first_;
};

struct Context {
  const ModelSpec* spec = nullptr;
  std::shared_ptr<const ModelData> model;
  std::optional<SuperMatrix> q;
  std::optional<SuperMatrix> control;  // projector of the control vector
};

struct Task {
  std::string suite;
  std::optional<int> k;
  std::optional<int> lambda_index;
  std::function<void(Defects&)> body;
};

const SuperMatrix* q_of(const Context& c) { return c.q ? &*c.q : nullptr; }

void mc_check(Defects& d, const SuperMatrix& p, const GaussianRational& lambda, const SuperMatrix* q) {
  AlphaLambda a = build_alpha_lambda(p, lambda);
  d.add("consistency", a.consistency);
  d.add("maurer_cartan", mc_defect(a.alpha));
  d.add("system", mc_system_defects(a.alpha.aP, a.alpha.piP));
  d.require("su(N) valued", is_suN(a.alpha));
  if (lambda == GaussianRational(-1)) {
    AlphaMinusOne f = alpha_minus_one(p, q);
    d.add("frame_form", f.alpha.aP - a.alpha.aP);
    d.add("frame_unitarity", f.unitarity);
    d.add("frame_pullback", f.pullback);
    if (p.rows() <= 6) d.add("frame_determinant", f.determinant);
  }
}

std::vector<Task> plan(const Context& c, const std::vector<std::string>& suites) {
  std::vector<Task> tasks;
  const ModelSpec& spec = *c.spec;
  const int n = spec.n;
  auto per_k = [&](const std::string& suite, int lo, int hi, std::function<void(Defects&, int)> f) {
    for (int k = lo; k < hi; ++k) tasks.push_back({suite, k, std::nullopt, [f, k](Defects& d) { f(d, k); }});
  };
  auto per_k_lambda = [&](const std::string& suite, std::function<void(Defects&, int, const GaussianRational&)> f) {
    for (int k = 0; k < n; ++k) {
      for (std::size_t li = 0; li < spec.lambdas.size(); ++li) {
        GaussianRational lambda = spec.lambdas[li];
        tasks.push_back({suite, k, static_cast<int>(li), [f, k, lambda](Defects& d) { f(d, k, lambda); }});
      }
    }
  };
  const ModelData& m = *c.model;
  for (const auto& s : suites) {
    if (s == "chain") {
      per_k(s, 1, n, [&m](Defects& d, int j) {
        d.add("chain", m.epsilon(j) * m.psis()[j] - m.psis()[j - 1].super_derivative(Dir::kPlus));
      });
    } else if ((s == "el" || s == "conservation" || s == "mc") && c.control) {
      const SuperMatrix& p = *c.control;
      if (s == "mc") {
        for (std::size_t li = 0; li < spec.lambdas.size(); ++li) {
          GaussianRational lambda = spec.lambdas[li];
          const SuperMatrix* q = q_of(c);
          tasks.push_back({s, -1, static_cast<int>(li), [&p, lambda, q](Defects& d) { mc_check(d, p, lambda, q); }});
        }
      } else {
        bool el = s == "el";
        tasks.push_back({s, -1, std::nullopt, [&p, el](Defects& d) {
                           if (el) d.add("euler_lagrange", el_defect(p));
                           else d.add("conservation", conservation_defect(p));
                         }});
      }
    } else if (s == "el") {
      per_k(s, 0, n, [&m](Defects& d, int k) { d.add("euler_lagrange", el_defect(m.projector(k))); });
    } else if (s == "conservation") {
      per_k(s, 0, n, [&m](Defects& d, int k) { d.add("conservation", conservation_defect(m.projector(k))); });
    } else if (s == "propz") {
      per_k(s, 0, n, [&m](Defects& d, int k) {
        auto all = propz_defects(m);
        d.add("raising", all.at(k).raising);
        d.add("lowering", all.at(k).lowering);
      });
    } else if (s == "densities") {
      per_k(s, 0, n, [&m](Defects& d, int k) {
        auto r = density_log_identities(m, k);
        d.add("topological", r.topological);
        d.add("lagrangian", r.lagrangian);
      });
    } else if (s == "sum_rules") {
      tasks.push_back({s, std::nullopt, std::nullopt, [&m](Defects& d) {
                         auto r = sum_rules(m);
                         d.add("topological_sum", r.topological_sum);
                         d.add("log_gradient_plus", r.log_gradient_plus);
                         d.add("log_gradient_minus", r.log_gradient_minus);
                         d.add("xi", r.xi_defects);
                       }});
    } else if (s == "mc") {
      const SuperMatrix* q = q_of(c);
      per_k_lambda(s, [&m, q](Defects& d, int k, const GaussianRational& lambda) {
        mc_check(d, m.projector(k), lambda, q);
      });
    } else if (s == "spectral") {
      const SuperMatrix* q = q_of(c);
      per_k_lambda(s, [&m, q](Defects& d, int k, const GaussianRational& lambda) {
        SpectralFrame f = build_F(m, k, lambda, q);
        d.require("beta closed form", solve_betas(lambda, k).matches_closed_form);
        d.add("inverse", inverse_defect(f));
        d.add("unitarity", unitarity_defect(f));
        d.add("linear_problem", linear_problem_defects(f, m));
        SuperMatrix gauged = f.f * special_unitary_gauge(m, k, lambda);
        if (m.n() <= 6) {
          d.add("unit_determinant", determinant(gauged) - Superfield::constant(m.space(), m.order(), 1));
        }
      });
    } else if (s == "sym_tafel") {
      const SuperMatrix* q = q_of(c);
      per_k_lambda(s, [&m, q](Defects& d, int k, const GaussianRational& lambda) {
        auto y = sym_tafel_defects(build_F(m, k, lambda, q), m);
        d.add("frame_identity", y.frame_identity);
        d.add("trace", y.trace);
      });
    } else if (s == "surface") {
      per_k(s, 0, n, [&m](Defects& d, int k) {
        SurfaceDefects r = surface_defects(m, k);
        d.add("plus_equation", r.plus_equation);
        d.add("minus_equation", r.minus_equation);
        d.add("antihermitian", r.antihermitian);
        d.add("trace", r.trace);
        d.add("compatibility", r.compatibility);
        d.add("pi_relation", r.pi_relation);
      });
    } else if (s == "metric") {
      per_k(s, 0, n, [&m](Defects& d, int k) {
        MetricTable t = metric_components(m, k);
        d.add("dX", t.dx_defects);
        for (const auto& [name, f] : t.symmetry_defects) d.add("symmetry " + name, f);
        d.add("rho", rho_identity(m, k));
        XiADefects x = xi_A_formulas(m, k);
        d.add("xi0", x.xi0);
        d.add("A-", x.a_minus);
        d.add("u_orthogonality", x.u_orthogonality);
        d.add("reduced_projectors", x.reduced_projectors);
        d.add("g_theta_theta", g_theta_theta_formula(m, k));
      });
    } else if (s == "reduction") {
      std::optional<ReductionSpec> r = spec.reduction;
      per_k(s, 0, n, [&m, r](Defects& d, int k) {
        if (!r) throw Error(ErrorCode::kInvalidArgument, "reduction check needs a 'reduction' block");
        d.add("reduction", eta_reduction(m, k, r->c_plus, r->c_minus));
      });
    }
  }
  return tasks;
}

std::vector<std::string> selected_suites(const ModelSpec& spec, const VerifyOptions& options) {
  std::vector<std::string> wanted = !options.checks.empty() ? options.checks : spec.checks;
  if (wanted.empty()) wanted = suite_names();
  for (const auto& w : wanted) {
    if (std::find(suite_names().begin(), suite_names().end(), w) == suite_names().end()) {
      throw Error(ErrorCode::kInvalidArgument, "unknown check '" + w + "'");
    }
  }
  std::vector<std::string> out;
  for (const auto& s : suite_names()) {
    if (std::find(wanted.begin(), wanted.end(), s) != wanted.end()) out.push_back(s);
  }
  return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

Report run_verify(const ModelSpec& spec, const VerifyOptions& options) {
  Report report;
  report.model = spec.name;
  std::vector<std::string> suites = selected_suites(spec, options);

  Context ctx;
  ctx.spec = &spec;
  auto start = std::chrono::steady_clock::now();
  try {
    SpacePtr space = spec_space(spec);
    ctx.model = std::make_shared<const ModelData>(spec_chain(spec, space));
    ctx.q = spec_q(spec, space);
    if (spec.control_vector) {
      SuperVector v = spec_vector(*spec.control_vector, space, spec.truncation_order);
      ctx.control = outer_projector(v);
    }
  } catch (const std::exception& e) {
    // Nothing can run without the model; every requested suite reports the cause.
    double ms = elapsed_ms(start);
    for (const auto& s : suites) report.records.push_back({s, std::nullopt, std::nullopt, Status::kError, e.what(), ms});
    return report;
  }

  std::vector<Task> tasks = plan(ctx, suites);
  std::vector<CheckRecord> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const Task& t = tasks[i];
      CheckRecord& r = results[i];
      r.suite = t.suite;
      r.k = t.k;
      if (t.lambda_index) r.lambda = spec.lambdas[*t.lambda_index];
      auto t0 = std::chrono::steady_clock::now();
      try {
        Defects d;
        t.body(d);
        r.status = d.clean() ? Status::kPass : Status::kFail;
        r.defect = d.clean() ? "0" : d.first();
      } catch (const std::exception& e) {
        r.status = Status::kError;
        r.defect = e.what();
      }
      r.wall_ms = elapsed_ms(t0);
    }
  };
  int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < jobs; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  // tasks were generated in report order, so results need no sorting
  report.records = std::move(results);
  return report;
}

namespace {

std::string k_label(const std::optional<int>& k) {
  if (!k) return "all";
  if (*k < 0) return "control";
  return std::to_string(*k);
}

std::string lambda_label(const std::optional<GaussianRational>& l) { return l ? l->to_string() : "-"; }

}  // namespace

std::string render_text(const Report& report) {
  std::string out = "model " + report.model + "\n";
  char buf[160];
  for (const auto& r : report.records) {
    std::snprintf(buf, sizeof buf, "%-5s %-13s k=%-8s lambda=%-12s %9.1f ms  ", std::string(to_string(r.status)).c_str(),
                  r.suite.c_str(), k_label(r.k).c_str(), lambda_label(r.lambda).c_str(), r.wall_ms);
    out += buf;
    out += r.defect + "\n";
  }
  out += "summary: " + std::to_string(report.count(Status::kPass)) + " pass, " +
         std::to_string(report.count(Status::kFail)) + " fail, " + std::to_string(report.count(Status::kError)) +
         " error\n";
  return out;
}

std::string render_json(const Report& report) {
  using Json = nlohmann::ordered_json;
  Json records = Json::array();
  for (const auto& r : report.records) {
    Json j;
    j["check"] = r.suite;
    j["k"] = r.k ? Json(*r.k) : Json(nullptr);
    j["lambda"] = r.lambda ? Json::array({rational_to_string(r.lambda->re()), rational_to_string(r.lambda->im())})
                           : Json(nullptr);
    j["status"] = to_string(r.status);
    j["defect"] = r.defect;
    j["wall_ms"] = r.wall_ms;
    records.push_back(j);
  }
  Json out;
  out["schema"] = "scpn-report/1";
  out["model"] = report.model;
  out["records"] = records;
  out["summary"] = Json{{"pass", report.count(Status::kPass)},
                        {"fail", report.count(Status::kFail)},
                        {"error", report.count(Status::kError)},
                        {"exit_code", report.exit_code()}};
  return out.dump(2) + "\n";
}

}  // namespace scpn

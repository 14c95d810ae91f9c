// holv: exact certification of the holonomy catalog for split-signature
// metrics in dimension seven.
//
//   holv verify        reconstruct each selected metric, compute its
//                      Levi-Civita connection and curvature layers, and
//                      certify the holonomy algebra against the catalog
//   holv algebra-check structural invariants of the ambient 14-dimensional
//                      algebra and its parabolic slice
//   holv berger        curvature-span criterion per catalog algebra
//   holv export        write a case metric (expression grammar) or case file
//
// Exit codes: 0 all selected checks pass, 1 verification failure or an
// inconclusive span, 2 usage/configuration error.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <holv/curvature_space.hpp>
#include <holv/geometry.hpp>
#include <holv/parser.hpp>

using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

struct Options {
  std::string case_id;
  int family = 0;
  bool all = false;
  std::vector<std::string> param_kv;
  int max_order = 4;
  std::string json_path;
  std::string casefile_path;
};

int thread_cap() {
  if (const char* env = std::getenv("HOLV_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

template <class Job, class Fn>
void run_parallel(std::vector<Job>& jobs, Fn&& fn) {
  const int n = std::min<int>(thread_cap(), static_cast<int>(jobs.size()));
  if (n <= 1) {
    for (Job& j : jobs) fn(j);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) fn(jobs[i]);
    });
  for (std::thread& th : pool) th.join();
}

holv::ParamMap parse_param_overrides(const std::vector<std::string>& kvs) {
  holv::ParamMap out;
  for (const std::string& kv : kvs) {
    const std::size_t eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw holv::ConstraintViolation("--param expects name=value, got '" + kv + "'");
    const std::string name = kv.substr(0, eq);
    const std::string value = kv.substr(eq + 1);
    const holv::Expr e = holv::parse_expr(value, {});
    if (!e.is_polynomial())
      throw holv::ConstraintViolation("parameter '" + name + "' must be a constant, got '" +
                                      value + "'");
    const holv::Polynomial p = e.as_polynomial();
    const holv::KScalar v = p.constant_term();
    holv::Polynomial rest = p;
    rest += holv::Polynomial(-v);
    if (!rest.is_zero())
      throw holv::ConstraintViolation("parameter '" + name + "' must be a constant, got '" +
                                      value + "'");
    out[name] = v;
  }
  return out;
}

// Case selection: exactly one of --case, --family, --all (plus --casefile as
// an input for verify).  Output order is deterministic: case id
// lexicographic, then the parameter tuple.
std::vector<holv::CaseRecord> select_cases(const Options& o, bool casefile_is_input) {
  const bool from_file = casefile_is_input && !o.casefile_path.empty();
  const int picked =
      (!o.case_id.empty() ? 1 : 0) + (o.family != 0 ? 1 : 0) + (o.all ? 1 : 0) + (from_file ? 1 : 0);
  if (picked != 1)
    throw holv::ConstraintViolation(std::string("select exactly one of --case, --family, --all") +
                                    (casefile_is_input ? ", --casefile" : ""));
  std::vector<holv::CaseRecord> out;
  if (from_file) {
    out.push_back(holv::load_case_file(o.casefile_path));
    return out;
  }
  if (!o.case_id.empty()) {
    out.push_back(holv::find_case(o.case_id));
    return out;
  }
  for (const holv::CaseRecord& rec : holv::builtin_catalog())
    if (o.all || rec.id.front() == static_cast<char>('0' + o.family)) out.push_back(rec);
  if (out.empty()) throw holv::ConstraintViolation("selection matches no case");
  std::sort(out.begin(), out.end(),
            [](const holv::CaseRecord& a, const holv::CaseRecord& b) { return a.id < b.id; });
  return out;
}

// Instantiations to run for one case: the single override map when --param
// was given, otherwise every catalog instantiation sorted by parameter tuple.
std::vector<holv::ParamMap> instantiations_for(const holv::CaseRecord& rec,
                                               const holv::ParamMap& overrides) {
  if (!overrides.empty()) return {overrides};
  std::vector<holv::ParamMap> insts = rec.instantiations;
  if (insts.empty()) insts.push_back({});
  std::sort(insts.begin(), insts.end(), [](const holv::ParamMap& a, const holv::ParamMap& b) {
    auto tup = [](const holv::ParamMap& m) {
      std::vector<std::pair<std::string, std::string>> t;
      for (const auto& [k, v] : m) t.emplace_back(k, v.str());
      return t;
    };
    return tup(a) < tup(b);
  });
  return insts;
}

std::string inst_label(const holv::ParamMap& m) {
  if (m.empty()) return "";
  std::string out = " [";
  bool first = true;
  for (const auto& [k, v] : m) {
    if (!first) out += ",";
    first = false;
    out += k + "=" + v.str();
  }
  return out + "]";
}

ordered_json params_json(const holv::ParamMap& m) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : m) j[k] = v.str();
  return j;
}

void write_json(const std::string& path, const ordered_json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw holv::CaseFileError("cannot write JSON report '" + path + "'");
  out << j.dump(2) << "\n";
  if (!out) throw holv::CaseFileError("write failed for JSON report '" + path + "'");
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyJob {
  const holv::CaseRecord* rec = nullptr;
  holv::ParamMap inst;
  int max_order = 4;
  holv::HolonomyReport rep;
  std::string error;
  bool config_error = false;
};

void run_verify_job(VerifyJob& job) {
  job.rep.case_id = job.rec->id;
  job.rep.params = job.inst;
  try {
    holv::validate_descriptor(holv::bind_params(job.rec->descriptor, job.inst));
    job.rep = holv::holonomy_span(*job.rec, job.inst, job.max_order);
  } catch (const holv::ConstraintViolation& e) {
    job.error = e.what();
    job.config_error = true;
  } catch (const std::exception& e) {
    job.error = e.what();
  }
}

ordered_json verify_report_json(const VerifyJob& job) {
  const holv::HolonomyReport& r = job.rep;
  ordered_json j;
  j["case_id"] = r.case_id;
  j["params"] = params_json(r.params);
  j["dim_h"] = r.dim_h;
  j["theta_in_h"] = r.theta_in_h;
  j["theta_violations"] = r.theta_violations;
  j["span_in_h"] = r.span_in_h;
  j["span_dim_function_basis"] = r.span_dim_function_basis;
  j["span_dim_at_point"] = r.span_dim_at_point;
  ordered_json pt = ordered_json::array();
  for (const holv::KScalar& c : r.base_point) pt.push_back(c.str());
  j["base_point"] = std::move(pt);
  j["order_reached"] = r.order_reached;
  j["equals_h"] = r.equals_h;
  j["seconds"] = r.seconds;
  j["error"] = job.error.empty() ? ordered_json() : ordered_json(job.error);
  return j;
}

int cmd_verify(const Options& o) {
  const holv::ParamMap overrides = parse_param_overrides(o.param_kv);
  const std::vector<holv::CaseRecord> cases = select_cases(o, /*casefile_is_input=*/true);
  std::vector<VerifyJob> jobs;
  for (const holv::CaseRecord& rec : cases)
    for (const holv::ParamMap& inst : instantiations_for(rec, overrides))
      jobs.push_back(VerifyJob{&rec, inst, o.max_order, {}, "", false});
  run_parallel(jobs, run_verify_job);

  int passed = 0, failed = 0;
  bool config_error = false;
  for (const VerifyJob& job : jobs) {
    const holv::HolonomyReport& r = job.rep;
    std::cout << "case " << r.case_id << inst_label(r.params);
    if (!job.error.empty()) {
      std::cout << (job.config_error ? ": CONFIG ERROR: " : ": FAILED: ") << job.error << "\n";
      config_error = config_error || job.config_error;
      ++failed;
      continue;
    }
    std::cout << ": dim " << r.dim_h << ", theta " << (r.theta_in_h ? "in h" : "NOT in h")
              << ", span " << r.span_dim_at_point << "/" << r.dim_h << " at (";
    for (std::size_t c = 0; c < 7; ++c) std::cout << (c ? "," : "") << r.base_point[c].str();
    std::cout << "), function basis " << r.span_dim_function_basis << ", order "
              << r.order_reached << ", " << (r.equals_h ? "equals h" : "does NOT equal h")
              << "\n";
    for (const std::string& v : r.theta_violations) std::cout << "    " << v << "\n";
    if (r.equals_h)
      ++passed;
    else
      ++failed;
  }
  std::cout << "verified " << jobs.size() << " instantiation(s): " << passed << " passed, "
            << failed << " failed\n";

  if (!o.json_path.empty()) {
    ordered_json j;
    j["command"] = "verify";
    j["max_order"] = o.max_order;
    ordered_json reports = ordered_json::array();
    for (const VerifyJob& job : jobs) reports.push_back(verify_report_json(job));
    j["reports"] = std::move(reports);
    j["ok"] = failed == 0;
    write_json(o.json_path, j);
  }
  if (config_error) return kExitConfig;
  return failed == 0 ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------------------
// algebra-check
// ---------------------------------------------------------------------------

struct AlgebraCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

std::vector<AlgebraCheck> run_algebra_checks() {
  using holv::G2Element;
  using holv::KMat;
  using holv::KScalar;
  std::vector<AlgebraCheck> out;
  std::vector<G2Element> basis;
  for (int i = 1; i <= 14; ++i) basis.push_back(G2Element::basis(i));

  {
    // The 14 basis matrices are linearly independent as 7x7 matrices.
    holv::DenseMatrix<KScalar> rows(14, 49);
    for (int r = 0; r < 14; ++r)
      for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
          rows(r, i * 7 + j) = basis[static_cast<std::size_t>(r)].matrix()(i, j);
    const auto rank = holv::exact_rank(rows);
    out.push_back({"dimension", rank == 14, "matrix rank " + std::to_string(rank) + " of 14"});
  }
  {
    bool ok = true;
    const KMat& eta = holv::eta_matrix();
    for (const G2Element& e : basis) {
      const KMat m = eta * e.matrix() + e.matrix().transpose() * eta;
      for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
          if (!m(i, j).is_zero()) ok = false;
    }
    out.push_back({"eta-skew", ok, "all 14 basis elements"});
  }
  {
    bool ok = true;
    for (const G2Element& e : basis)
      if (!holv::annihilates_omega(e)) ok = false;
    out.push_back({"omega-annihilation", ok, "all 14 basis elements"});
  }
  {
    bool ok = true;
    std::string detail = "all 91 pairs stay in the coefficient pattern";
    try {
      for (int a = 0; a < 14; ++a)
        for (int b = a + 1; b < 14; ++b)
          (void)bracket(basis[static_cast<std::size_t>(a)], basis[static_cast<std::size_t>(b)]);
    } catch (const holv::NotInG2& e) {
      ok = false;
      detail = e.what();
    }
    out.push_back({"bracket-closure", ok, detail});
  }
  {
    bool ok = true;
    for (int a = 0; a < 14 && ok; ++a) {
      for (int b = a + 1; b < 14 && ok; ++b) {
        for (int c = b + 1; c < 14 && ok; ++c) {
          const G2Element t1 = bracket(bracket(basis[static_cast<std::size_t>(a)],
                                               basis[static_cast<std::size_t>(b)]),
                                       basis[static_cast<std::size_t>(c)]);
          const G2Element t2 = bracket(bracket(basis[static_cast<std::size_t>(b)],
                                               basis[static_cast<std::size_t>(c)]),
                                       basis[static_cast<std::size_t>(a)]);
          const G2Element t3 = bracket(bracket(basis[static_cast<std::size_t>(c)],
                                               basis[static_cast<std::size_t>(a)]),
                                       basis[static_cast<std::size_t>(b)]);
          for (std::size_t s = 0; s < 14; ++s)
            if (!(t1.s()[s] + t2.s()[s] + t3.s()[s]).is_zero()) ok = false;
        }
      }
    }
    out.push_back({"jacobi", ok, "all 364 basis triples"});
  }
  {
    const auto [metric, sign] = holv::bryant_metric_from_omega();
    const KMat& eta = holv::eta_matrix();
    bool ok = sign == 1 || sign == -1;
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j)
        if (!(metric(i, j) == eta(i, j))) ok = false;
    out.push_back({"bryant-identity", ok,
                   std::string("global sign ") + (sign >= 0 ? "+" : "") + std::to_string(sign) +
                       ", reference inner product reproduced on all 28 pairs"});
  }
  {
    bool ok = true;
    std::vector<int> p2_indices;
    for (int i = 1; i <= 14; ++i)
      if (i != 3 && i != 5 && i != 7 && i != 13 && i != 14) p2_indices.push_back(i);
    holv::DenseMatrix<KScalar> rows(9, 14);
    for (std::size_t r = 0; r < p2_indices.size(); ++r) {
      const G2Element e = G2Element::basis(p2_indices[r]);
      if (!holv::p2_member(e)) ok = false;
      for (int j = 0; j < 14; ++j)
        rows(static_cast<Eigen::Index>(r), j) = e.s()[static_cast<std::size_t>(j)];
    }
    if (holv::exact_rank(rows) != 9) ok = false;
    for (int a : p2_indices)
      for (int b : p2_indices)
        if (!holv::p2_member(bracket(G2Element::basis(a), G2Element::basis(b)))) ok = false;
    out.push_back({"parabolic-slice", ok, "dimension 9, bracket-closed"});
  }
  return out;
}

int cmd_algebra_check(const Options& o) {
  const std::vector<AlgebraCheck> checks = run_algebra_checks();
  bool all_ok = true;
  for (const AlgebraCheck& c : checks) {
    std::cout << c.name << ": " << (c.ok ? "pass" : "FAIL") << " (" << c.detail << ")\n";
    all_ok = all_ok && c.ok;
  }
  std::cout << (all_ok ? "algebra checks passed\n" : "algebra checks FAILED\n");
  if (!o.json_path.empty()) {
    ordered_json j;
    j["command"] = "algebra-check";
    ordered_json arr = ordered_json::array();
    for (const AlgebraCheck& c : checks) {
      ordered_json cj;
      cj["name"] = c.name;
      cj["ok"] = c.ok;
      cj["detail"] = c.detail;
      arr.push_back(std::move(cj));
    }
    j["checks"] = std::move(arr);
    j["ok"] = all_ok;
    write_json(o.json_path, j);
  }
  return all_ok ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------------------
// berger
// ---------------------------------------------------------------------------

struct BergerJob {
  const holv::CaseRecord* rec = nullptr;
  holv::ParamMap inst;
  int dim_h = 0;
  int dim_span = 0;
  bool berger_ok = false;
  int solution_space_dim = 0;
  std::string error;
  bool config_error = false;
};

void run_berger_job(BergerJob& job) {
  try {
    const auto bound = holv::bind_params(job.rec->descriptor, job.inst);
    holv::validate_descriptor(bound);
    const std::vector<holv::G2Element> gens = holv::generators(bound);
    const holv::BergerSpan bs = holv::berger_span(gens);
    job.dim_h = holv::span_rank(gens);
    job.dim_span = bs.dim;
    job.solution_space_dim = bs.solution_space_dim();
    job.berger_ok = holv::berger_criterion_holds(gens);
  } catch (const holv::ConstraintViolation& e) {
    job.error = e.what();
    job.config_error = true;
  } catch (const std::exception& e) {
    job.error = e.what();
  }
}

int cmd_berger(const Options& o) {
  const holv::ParamMap overrides = parse_param_overrides(o.param_kv);
  const std::vector<holv::CaseRecord> cases = select_cases(o, /*casefile_is_input=*/false);
  std::vector<BergerJob> jobs;
  for (const holv::CaseRecord& rec : cases)
    for (const holv::ParamMap& inst : instantiations_for(rec, overrides))
      jobs.push_back(BergerJob{&rec, inst});
  run_parallel(jobs, run_berger_job);

  bool all_ok = true;
  bool config_error = false;
  for (const BergerJob& job : jobs) {
    std::cout << "case " << job.rec->id << inst_label(job.inst);
    if (!job.error.empty()) {
      std::cout << ": " << (job.config_error ? "CONFIG ERROR: " : "FAILED: ") << job.error
                << "\n";
      all_ok = false;
      config_error = config_error || job.config_error;
      continue;
    }
    std::cout << ": dim " << job.dim_h << ", span " << job.dim_span << ", solution space "
              << job.solution_space_dim << ", berger " << (job.berger_ok ? "pass" : "FAIL")
              << "\n";
    all_ok = all_ok && job.berger_ok;
  }

  if (!o.json_path.empty()) {
    ordered_json j;
    j["command"] = "berger";
    ordered_json arr = ordered_json::array();
    for (const BergerJob& job : jobs) {
      ordered_json cj;
      cj["case_id"] = job.rec->id;
      cj["dim_h"] = job.dim_h;
      cj["dim_span"] = job.dim_span;
      cj["berger_ok"] = job.berger_ok;
      cj["solution_space_dim"] = job.solution_space_dim;
      if (!job.error.empty()) cj["error"] = job.error;
      arr.push_back(std::move(cj));
    }
    j["reports"] = std::move(arr);
    j["ok"] = all_ok;
    write_json(o.json_path, j);
  }
  if (config_error) return kExitConfig;
  return all_ok ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------------------
// export
// ---------------------------------------------------------------------------

int cmd_export(const Options& o, const std::string& what) {
  const holv::ParamMap overrides = parse_param_overrides(o.param_kv);
  if (what == "casefile") {
    if (o.case_id.empty())
      throw holv::ConstraintViolation("export casefile requires --case");
    if (!o.json_path.empty())
      throw holv::ConstraintViolation("export casefile writes the case-file format; use --casefile PATH or stdout");
    holv::CaseRecord rec = holv::find_case(o.case_id);
    if (!overrides.empty()) rec.instantiations = {overrides};
    holv::validate_descriptor(holv::bind_params(rec.descriptor, rec.instantiations.at(0)));
    const std::string text = holv::format_case_file(rec, 0);
    if (o.casefile_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(o.casefile_path, std::ios::binary);
      if (!out) throw holv::CaseFileError("cannot write case file '" + o.casefile_path + "'");
      out << text;
    }
    return kExitOk;
  }

  // what == "metric"
  const std::vector<holv::CaseRecord> cases = select_cases(o, /*casefile_is_input=*/false);
  bool all_ok = true;
  ordered_json arr = ordered_json::array();
  for (const holv::CaseRecord& rec : cases) {
    for (const holv::ParamMap& inst : instantiations_for(rec, overrides)) {
      holv::validate_descriptor(holv::bind_params(rec.descriptor, inst));
      const holv::MetricVerdict v = holv::metric_matrix(rec, inst);
      std::cout << "# case " << rec.id << inst_label(inst) << "\n";
      std::cout << "# symmetric; entries G[i][j] for i <= j\n";
      for (int i = 0; i < 7; ++i)
        for (int j = i; j < 7; ++j)
          std::cout << "G[" << i + 1 << "][" << j + 1 << "] = " << v.G(i, j).str() << "\n";
      std::cout << "# signature (4,3) at " << v.points.size()
                << " admissible points: " << (v.signature_matches ? "yes" : "NO") << "\n";
      all_ok = all_ok && v.signature_matches;
      if (!o.json_path.empty()) {
        ordered_json cj;
        cj["case_id"] = rec.id;
        cj["params"] = params_json(inst);
        ordered_json rows = ordered_json::array();
        for (int i = 0; i < 7; ++i) {
          ordered_json row = ordered_json::array();
          for (int j = 0; j < 7; ++j) row.push_back(v.G(i, j).str());
          rows.push_back(std::move(row));
        }
        cj["metric"] = std::move(rows);
        cj["signature"] = "(4,3)";
        ordered_json pts = ordered_json::array();
        for (std::size_t p = 0; p < v.points.size(); ++p) {
          ordered_json pj;
          ordered_json coords = ordered_json::array();
          for (const holv::KScalar& c : v.points[p]) coords.push_back(c.str());
          pj["point"] = std::move(coords);
          pj["positive"] = static_cast<int>(v.inertias[p].positive);
          pj["negative"] = static_cast<int>(v.inertias[p].negative);
          pj["zero"] = static_cast<int>(v.inertias[p].zero);
          pts.push_back(std::move(pj));
        }
        cj["sample_points"] = std::move(pts);
        cj["signature_matches"] = v.signature_matches;
        arr.push_back(std::move(cj));
      }
    }
  }
  if (!o.json_path.empty()) {
    ordered_json j;
    j["command"] = "export";
    j["what"] = "metric";
    j["reports"] = std::move(arr);
    j["ok"] = all_ok;
    write_json(o.json_path, j);
  }
  return all_ok ? kExitOk : kExitFailure;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact holonomy certification for the split-signature metric catalog in dimension seven"};
  app.require_subcommand(1);
  Options o;
  std::string what;

  auto add_selector = [&](CLI::App* sub) {
    sub->add_option("--case", o.case_id, "case id (e.g. 5b.10)");
    sub->add_option("--family", o.family, "family number 1..5")->check(CLI::Range(1, 5));
    sub->add_flag("--all", o.all, "every catalog case");
    sub->add_option("--param", o.param_kv,
                    "parameter override name=value (repeatable; replaces the catalog instantiations)");
  };

  CLI::App* verify = app.add_subcommand(
      "verify", "reconstruct each selected metric and certify its holonomy algebra");
  add_selector(verify);
  verify->add_option("--max-order", o.max_order, "derivative-order budget (default 4)")
      ->check(CLI::Range(0, 16));
  verify->add_option("--json", o.json_path, "write a JSON report to this path");
  verify->add_option("--casefile", o.casefile_path, "verify a case file instead of builtins");

  CLI::App* algebra = app.add_subcommand(
      "algebra-check", "structural invariants of the ambient algebra and its parabolic slice");
  algebra->add_option("--json", o.json_path, "write a JSON report to this path");

  CLI::App* berger = app.add_subcommand("berger", "curvature-span criterion per catalog algebra");
  add_selector(berger);
  berger->add_option("--json", o.json_path, "write a JSON report to this path");

  CLI::App* exp = app.add_subcommand("export", "write a case metric or a case file");
  exp->add_option("what", what, "metric | casefile")
      ->required()
      ->check(CLI::IsMember({"metric", "casefile"}));
  add_selector(exp);
  exp->add_option("--json", o.json_path, "write a JSON report to this path (metric only)");
  exp->add_option("--casefile", o.casefile_path, "output path for the case file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (app.got_subcommand(verify)) return cmd_verify(o);
    if (app.got_subcommand(algebra)) return cmd_algebra_check(o);
    if (app.got_subcommand(berger)) return cmd_berger(o);
    if (app.got_subcommand(exp)) return cmd_export(o, what);
  } catch (const holv::ConstraintViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const holv::UnknownCase& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const holv::CaseFileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const holv::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitConfig;
}

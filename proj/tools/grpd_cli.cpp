// Command-line front end: enumeration, constructions and verification suites
// with JSON or text reports.
//
// Exit codes: 0 all checks pass, 1 some check failed, 2 usage error,
// 3 resource cap exceeded.

#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "grpd/grpd.hpp"

namespace {

using grpd::Check;
using grpd::Json;

constexpr const char* kSchema = "groupoid-reps/1";

struct Options {
  int ell = 2;
  int d = 2;
  std::string k;  // an integer for gkd, a list k1,k2,... for schur-weyl
  std::string kvec;
  int m = 1;
  int kk = 0;
  bool theorem95 = false;
  std::string out = "text";
  long long cap = grpd::kDefaultCap;
  std::uint64_t seed = 1;
  int jobs = 1;
  std::string lpm = "literal";
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TaskResult {
  std::vector<Check> checks;
  Json data = Json::object();
};

struct Task {
  std::string name;
  std::function<TaskResult()> run;
};

std::vector<int> parse_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("not an integer list: " + s);
    }
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  const auto v = parse_list(s);
  if (v.size() != 1) throw UsageError(what + " must be a single integer, got " + s);
  return v[0];
}

grpd::LpmVariant lpm_variant(const Options& o) {
  return o.lpm == "twisted" ? grpd::LpmVariant::twisted : grpd::LpmVariant::literal;
}

std::string tag(const std::string& cmd, std::initializer_list<std::pair<const char*, int>> params) {
  std::string s = cmd + "(";
  bool first = true;
  for (const auto& [k, v] : params) {
    s += (first ? "" : ",") + std::string(k) + "=" + std::to_string(v);
    first = false;
  }
  return s + ")";
}

TaskResult objects_task(int l, int d, long long cap) {
  TaskResult r;
  r.checks = grpd::groupoid_checks(l, d, cap);
  if (l == 2 && d == 2) r.checks.push_back(grpd::example1_check());
  Json objs = Json::array();
  for (const auto& f : grpd::objects(l, d, cap)) {
    objs.push_back(Json{{"object", grpd::to_json(f)}, {"type", Json(grpd::type_of(f))},
                        {"endomorphisms", grpd::composition_factorial(grpd::type_of(f))}});
  }
  r.data = Json{{"objects", objs}, {"morphisms", grpd::int_pow(l, d) * grpd::factorial(d)}};
  return r;
}

TaskResult simples_task(int l, int d, long long cap) {
  TaskResult r;
  grpd::CompletenessOptions opt;
  opt.cap = cap;
  r.checks = grpd::verify_complete(l, d, opt);
  Json simples = Json::array();
  for (const auto& m : grpd::all_simples(l, d)) {
    simples.push_back(Json{{"label", grpd::to_json(m.label())}, {"block_dim", m.block_dim()},
                           {"blocks", m.objects().size()}, {"total_dim", m.total_dim()}});
  }
  r.data = Json{{"simples", simples}};
  return r;
}

TaskResult iso_task(int l, int d, const Options& o, bool sampled) {
  grpd::IsoOptions opt;
  opt.cap = o.cap;
  opt.seed = o.seed;
  opt.jobs = o.jobs;
  if (sampled) {
    opt.exhaustive_pairs = 0;
    opt.random_pairs = 20'000;
  }
  return TaskResult{grpd::verify_iso(l, d, opt), Json{{"group_order", grpd::wreath_order(l, d)}, {"sampled", sampled}}};
}

TaskResult gelfand_task(int l, int d, long long cap) {
  grpd::GelfandOptions opt;
  opt.cap = cap;
  return TaskResult{grpd::verify_gelfand(l, d, opt), Json::object()};
}

TaskResult branching_task(int l, int d) { return TaskResult{{grpd::branching_check(l, d)}, Json::object()}; }

TaskResult gkd_task(int l, int k, int d, const Options& o) {
  TaskResult r;
  grpd::GkdOptions opt;
  opt.cap = o.cap;
  opt.variant = lpm_variant(o);
  if (l == 2 && k == 2 && d == 2) r.checks.push_back(grpd::example49_check());
  grpd::append(r.checks, grpd::verify_gkd(l, k, d, opt));
  const grpd::QuotientGroupoid q(l, k, d, o.cap);
  Json orbits = Json::array();
  for (std::size_t i = 0; i < q.objects().size(); ++i) {
    const auto& ob = q.objects()[i];
    Json members = Json::array();
    for (const auto& f : ob.orbit) members.push_back(grpd::to_json(f));
    const auto lam = grpd::type_of(ob.representative);
    orbits.push_back(Json{{"orbit", members}, {"stabilizer", grpd::stabilizer_order(lam, k)},
                          {"endomorphisms", q.hom(i, i).size()}});
  }
  Json labels = Json::array();
  if (d >= 1) {
    for (const auto& [p, m] : grpd::gkd_labels(l, k, d)) {
      const grpd::LpmModule mod(q, p, m, opt.variant);
      labels.push_back(Json{{"p", grpd::to_json(p)}, {"m", m}, {"dim", mod.total_dim()}});
    }
  }
  r.data = Json{{"quotient_objects", orbits}, {"quotient_morphisms", q.morphisms().size()}, {"simples", labels}};
  return r;
}

TaskResult schur_weyl_task(const std::vector<int>& kvec, int d, const Options& o) {
  const grpd::TensorSpace t(kvec, d, std::min<long long>(o.cap, grpd::kTensorCap));
  TaskResult r;
  r.checks = grpd::verify_commuting(t);
  grpd::DoubleCentralizerOptions dc;
  dc.seed = o.seed;
  grpd::append(r.checks, grpd::verify_double_centralizer(t, dc));
  grpd::append(r.checks, grpd::kernel_check(t));
  r.data = Json{{"kvec", Json(kvec)}, {"d", d}, {"tensor_dim", t.dim()}};
  return r;
}

TaskResult theorem95_task(const grpd::Theorem95Params& p, const Options& o) {
  return TaskResult{grpd::theorem95_check(p, std::min<long long>(o.cap, grpd::kTensorCap)), Json::object()};
}

TaskResult rook_task(int d, const Options& o) {
  TaskResult r;
  r.checks = grpd::rook_epimorphism_check(d);
  const long long cap = std::min<long long>(o.cap, grpd::kTensorCap);
  for (int n : {d, d + 1}) {
    if (n >= 2 && grpd::int_pow(n, d) <= cap) r.checks.push_back(grpd::rook_tensor_image(d, n, cap));
  }
  r.data = Json{{"rook_order", grpd::rook_order(d)}};
  return r;
}

std::vector<int> divisors(int l) {
  std::vector<int> out;
  for (int k = 1; k <= l; ++k) {
    if (l % k == 0) out.push_back(k);
  }
  return out;
}

/// The default grid: l <= 3, d <= 3 for the per-(l,d) suites, (2,4) with
/// sampled multiplicativity, and the fixed Schur-Weyl and rook instances.
std::vector<Task> all_tasks(const Options& o) {
  std::vector<Task> t;
  for (int l = 1; l <= 3; ++l) {
    for (int d = 0; d <= 3; ++d) {
      t.push_back({tag("objects", {{"ell", l}, {"d", d}}), [=] { return objects_task(l, d, o.cap); }});
    }
  }
  for (int l = 1; l <= 3; ++l) {
    for (int d = 0; d <= 3; ++d) {
      t.push_back({tag("verify-iso", {{"ell", l}, {"d", d}}), [=] { return iso_task(l, d, o, false); }});
    }
  }
  t.push_back({tag("verify-iso", {{"ell", 2}, {"d", 4}}), [=] { return iso_task(2, 4, o, true); }});
  for (int l = 1; l <= 3; ++l) {
    for (int d = 0; d <= 3; ++d) {
      t.push_back({tag("simples", {{"ell", l}, {"d", d}}), [=] { return simples_task(l, d, o.cap); }});
    }
  }
  t.push_back({tag("simples", {{"ell", 2}, {"d", 4}}), [=] { return simples_task(2, 4, o.cap); }});
  for (auto [l, d] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    t.push_back({tag("branching", {{"ell", l}, {"d", d}}), [=] { return branching_task(l, d); }});
  }
  for (int l = 1; l <= 3; ++l) {
    for (int d = 0; d <= 3; ++d) {
      t.push_back({tag("gelfand", {{"ell", l}, {"d", d}}), [=] { return gelfand_task(l, d, o.cap); }});
    }
  }
  for (int l = 1; l <= 3; ++l) {
    for (int k : divisors(l)) {
      for (int d = 0; d <= 3; ++d) {
        t.push_back({tag("gkd", {{"ell", l}, {"k", k}, {"d", d}}), [=] { return gkd_task(l, k, d, o); }});
      }
    }
  }
  const std::vector<std::pair<std::vector<int>, int>> sw{{{2}, 2}, {{2}, 3}, {{1, 1}, 2}, {{1, 1}, 3},
                                                          {{2, 1}, 2}, {{2, 2}, 2}};
  for (const auto& [kv, d] : sw) {
    t.push_back({"schur-weyl(k=" + grpd::kvec_str(kv) + ",d=" + std::to_string(d) + ")",
                 [=] { return schur_weyl_task(kv, d, o); }});
  }
  for (const auto& p : std::vector<grpd::Theorem95Params>{{2, 2, 1, 1}, {2, 2, 2, 2}, {4, 2, 1, 2}}) {
    t.push_back({tag("theorem95", {{"ell", p.ell}, {"k", p.k}, {"m", p.m}, {"d", p.d}}),
                 [=] { return theorem95_task(p, o); }});
  }
  for (int d = 1; d <= 4; ++d) t.push_back({tag("rook-check", {{"d", d}}), [=] { return rook_task(d, o); }});
  return t;
}

struct RunOutcome {
  std::vector<TaskResult> results;
  std::vector<double> seconds;
};

/// Runs tasks on up to `jobs` threads; results keep the task order.
RunOutcome run_tasks(const std::vector<Task>& tasks, int jobs) {
  RunOutcome out;
  out.results.resize(tasks.size());
  out.seconds.resize(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const auto t0 = std::chrono::steady_clock::now();
      try {
        out.results[i] = tasks[i].run();
      } catch (...) {
        errors[i] = std::current_exception();
      }
      out.seconds[i] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  std::vector<std::thread> threads;
  for (int i = 1; i < n; ++i) threads.emplace_back(worker);
  worker();
  for (auto& th : threads) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

Json parameters_json(const std::string& cmd, const Options& o) {
  Json p = Json::object();
  if (cmd != "all" && cmd != "rook-check") p["ell"] = o.ell;
  p["d"] = o.d;
  if (cmd == "gkd") p["k"] = o.k.empty() ? "1" : o.k;
  if (cmd == "schur-weyl") {
    p["k"] = o.kvec.empty() ? o.k : o.kvec;
    p["theorem95"] = o.theorem95;
    if (o.theorem95) {
      p["kk"] = o.kk;
      p["m"] = o.m;
    }
  }
  if (cmd == "gkd" || cmd == "all") p["lpm"] = o.lpm;
  p["cap"] = o.cap;
  p["seed"] = o.seed;
  return p;
}

std::vector<Task> command_tasks(const std::string& cmd, const Options& o) {
  if (o.ell < 1) throw UsageError("--ell must be at least 1");
  if (o.d < 0) throw UsageError("--d must be nonnegative");
  if (o.jobs < 1) throw UsageError("--jobs must be at least 1");
  if (cmd == "objects") return {{tag(cmd, {{"ell", o.ell}, {"d", o.d}}), [=] { return objects_task(o.ell, o.d, o.cap); }}};
  if (cmd == "simples") return {{tag(cmd, {{"ell", o.ell}, {"d", o.d}}), [=] { return simples_task(o.ell, o.d, o.cap); }}};
  if (cmd == "verify-iso") {
    return {{tag(cmd, {{"ell", o.ell}, {"d", o.d}}), [=] { return iso_task(o.ell, o.d, o, false); }}};
  }
  if (cmd == "gelfand") return {{tag(cmd, {{"ell", o.ell}, {"d", o.d}}), [=] { return gelfand_task(o.ell, o.d, o.cap); }}};
  if (cmd == "branching") {
    if (o.d < 1) throw UsageError("branching needs --d >= 1");
    return {{tag(cmd, {{"ell", o.ell}, {"d", o.d}}), [=] { return branching_task(o.ell, o.d); }}};
  }
  if (cmd == "gkd") {
    const int k = o.k.empty() ? 1 : parse_int(o.k, "--k");
    if (k < 1 || o.ell % k != 0) throw UsageError("--k must divide --ell");
    return {{tag(cmd, {{"ell", o.ell}, {"k", k}, {"d", o.d}}), [=] { return gkd_task(o.ell, k, o.d, o); }}};
  }
  if (cmd == "schur-weyl") {
    if (o.theorem95) {
      const int kk = o.kk > 0 ? o.kk : (o.k.empty() ? o.ell : parse_int(o.k, "--k"));
      if (o.ell % kk != 0) throw UsageError("--kk must divide --ell");
      if (o.m < 1) throw UsageError("--m must be positive");
      const grpd::Theorem95Params p{o.ell, kk, o.m, o.d};
      return {{tag("theorem95", {{"ell", o.ell}, {"k", kk}, {"m", o.m}, {"d", o.d}}), [=] { return theorem95_task(p, o); }}};
    }
    const std::string spec = !o.kvec.empty() ? o.kvec : o.k;
    if (spec.empty()) throw UsageError("schur-weyl needs --k k1,k2,... or --kvec");
    const auto kv = parse_list(spec);
    for (int x : kv) {
      if (x < 1) throw UsageError("block sizes must be positive");
    }
    return {{"schur-weyl(k=" + grpd::kvec_str(kv) + ",d=" + std::to_string(o.d) + ")",
             [=] { return schur_weyl_task(kv, o.d, o); }}};
  }
  if (cmd == "rook-check") {
    if (o.d < 1 || o.d > 5) throw UsageError("rook-check needs 1 <= --d <= 5");
    return {{tag(cmd, {{"d", o.d}}), [=] { return rook_task(o.d, o); }}};
  }
  if (cmd == "all") return all_tasks(o);
  throw UsageError("unknown command " + cmd);
}

Json build_report(const std::string& cmd, const Options& o, const std::vector<Task>& tasks, const RunOutcome& run) {
  Json checks = Json::array();
  Json data = Json::object();
  Json timings = Json::object();
  bool pass = true;
  const bool prefix = tasks.size() > 1;
  double total = 0;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    for (const auto& c : run.results[i].checks) {
      Json j = grpd::to_json(c);
      if (prefix) j["name"] = tasks[i].name + "/" + c.name;
      checks.push_back(std::move(j));
      pass = pass && c.pass;
    }
    if (!run.results[i].data.empty()) data[tasks[i].name] = run.results[i].data;
    timings[tasks[i].name] = run.seconds[i];
    total += run.seconds[i];
  }
  timings["total_task_seconds"] = total;
  return Json{{"schema", kSchema}, {"command", cmd},           {"parameters", parameters_json(cmd, o)},
              {"status", pass ? "pass" : "fail"}, {"checks", checks}, {"data", data},
              {"timings", timings}};
}

void print_text(const Json& report) {
  std::cout << report["command"].get<std::string>() << " " << report["parameters"].dump() << "\n";
  for (const auto& [name, d] : report["data"].items()) std::cout << "data " << name << " " << d.dump() << "\n";
  std::size_t passed = 0;
  for (const auto& c : report["checks"]) {
    const bool ok = c["status"] == "pass";
    passed += ok;
    std::cout << (ok ? "PASS " : "FAIL ") << c["name"].get<std::string>();
    if (!ok) std::cout << " " << c["details"].dump();
    std::cout << "\n";
  }
  std::cout << passed << "/" << report["checks"].size() << " checks passed\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Representations of C_l wr S_d and G(l,k,d) through the color groupoid"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "Read flags from a TOML or INI file; command-line flags win");
  Options o;
  app.add_option("--ell,-l", o.ell, "Number of colors l");
  app.add_option("--d,-d", o.d, "Number of strands d");
  app.add_option("--k", o.k, "gkd: the index k; schur-weyl: block sizes k1,k2,...");
  app.add_option("--kvec", o.kvec, "Block sizes k1,k2,... for schur-weyl");
  app.add_option("--m", o.m, "Block size m for theorem 95");
  app.add_option("--kk", o.kk, "The index k for theorem 95");
  app.add_flag("--theorem95", o.theorem95, "schur-weyl: check the G(l,k,d) duality instead");
  app.add_option("--out", o.out, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--cap", o.cap, "Resource cap on enumerated sizes")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Seed for sampled checks");
  app.add_option("--jobs,-j", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--lpm", o.lpm, "L_(p,m) action: literal or twisted")->check(CLI::IsMember({"literal", "twisted"}));
  for (const char* name : {"objects", "simples", "verify-iso", "gelfand", "branching", "gkd", "schur-weyl", "rook-check",
                           "all"}) {
    app.add_subcommand(name, std::string("Run ") + name);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    const auto tasks = command_tasks(cmd, o);
    const auto run = run_tasks(tasks, cmd == "all" ? o.jobs : 1);
    const Json report = build_report(cmd, o, tasks, run);
    if (o.out == "json") {
      std::cout << report.dump(2) << "\n";
    } else {
      print_text(report);
    }
    return report["status"] == "pass" ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const grpd::InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 2;
  } catch (const grpd::ResourceError& e) {
    std::cerr << "resource cap exceeded: " << e.what() << " (raise --cap to proceed)\n";
    return 3;
  }
}

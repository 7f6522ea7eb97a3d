#include "qpres/runner.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "qpres/algio.hpp"
#include "qpres/errors.hpp"
#include "qpres/harness.hpp"
#include "qpres/rng.hpp"

namespace qpres {

namespace {

using nlohmann::ordered_json;

long long dot(const std::vector<int>& a, const std::vector<int>& b) {
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
  return s;
}

std::vector<int> negated(const std::vector<int>& v) {
  std::vector<int> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

void validate_config(const RunConfig& cfg) {
  if (cfg.samples < 1) throw ValidationError("samples", "must be at least 1");
  if (cfg.n_max < 1) throw ValidationError("nmax", "must be at least 1");
  if (cfg.trials < 1) throw ValidationError("trials", "must be at least 1");
  if (cfg.threads < 1) throw ValidationError("threads", "must be at least 1");
  if (cfg.count < 0) throw ValidationError("count", "must be nonnegative");
  for (int x : cfg.dim_cap)
    if (x < 0) throw ValidationError("dimcap", "entries must be nonnegative");
}

std::vector<int> parse_weight(const std::string& s, int nv, const char* field) {
  if (s.empty())
    throw ValidationError(field, std::string("missing --") + field);
  std::vector<int> w = parse_int_list(s, field);
  if (static_cast<int>(w.size()) != nv)
    throw ValidationError(field,
                          "expected " + std::to_string(nv) + " coordinates");
  return w;
}

Representation resolve_module(AlgebraPtr alg, const std::string& name, int nv) {
  if (name.empty()) throw ValidationError("module", "missing --module");
  if (name.rfind("coker:", 0) == 0) {
    std::string rest = name.substr(6);
    size_t colon = rest.rfind(':');
    if (colon == std::string::npos)
      throw ValidationError("module", "expected coker:<weight>:<seed>");
    std::vector<int> w = parse_weight(rest.substr(0, colon), nv, "module");
    uint64_t s = 0;
    try {
      size_t used = 0;
      s = std::stoull(rest.substr(colon + 1), &used);
      if (used != rest.size() - colon - 1) throw std::invalid_argument("tail");
    } catch (const std::exception&) {
      throw ValidationError("module", "bad seed in " + name);
    }
    return cokernel(sample_presentation(alg, w, s));
  }
  if (name.size() < 2) throw ValidationError("module", "unknown module " + name);
  int idx = 0;
  try {
    size_t used = 0;
    idx = std::stoi(name.substr(1), &used);
    if (used != name.size() - 1) throw std::invalid_argument("tail");
  } catch (const std::exception&) {
    throw ValidationError("module", "unknown module " + name);
  }
  if (idx < 1 || idx > nv)
    throw ValidationError("module", "vertex index out of range in " + name);
  if (name[0] == 'S') return rep_simple(alg, idx - 1);
  if (name[0] == 'P') return rep_projective(alg, idx - 1);
  if (name[0] == 'I') return rep_injective(alg, opposite_algebra(*alg), idx - 1);
  throw ValidationError("module", "unknown module " + name);
}

std::vector<int> effective_cap(const RunConfig& cfg, int nv) {
  if (!cfg.dim_cap.empty()) return cfg.dim_cap;
  return std::vector<int>(nv, 2);
}

ordered_json envelope(const std::string& cmd, const AlgebraSpec& spec,
                      const RunConfig& cfg, ordered_json results) {
  ordered_json j;
  j["command"] = cmd;
  j["algebra_hash"] = algebra_hash(spec);
  j["seed"] = cfg.seed;
  j["samples"] = cfg.samples;
  j["results"] = std::move(results);
  return j;
}

std::string text_lines(const ordered_json& results) {
  std::string out;
  for (auto it = results.begin(); it != results.end(); ++it) {
    out += it.key();
    out += ": ";
    out += it.value().is_string() ? it.value().get<std::string>()
                                  : it.value().dump();
    out += "\n";
  }
  return out;
}

std::string verify_text(const HarnessReport& r) {
  std::string out = "harness: " + r.name + "\nnote: " + r.note + "\n";
  for (const auto& c : r.cases) {
    out += c.pass ? "[PASS] " : "[FAIL] ";
    out += c.case_id;
    if (!c.pass && !c.witness.is_null()) out += "  witness: " + c.witness.dump();
    out += "\n";
  }
  out += "passed: " + std::to_string(r.cases_pass) + "/" +
         std::to_string(r.cases_pass + r.cases_fail) + "\n";
  return out;
}

RunResult run_verify(const AlgebraSpec& spec, const RunConfig& cfg) {
  if (cfg.harness_arg.empty())
    throw ValidationError("harness", "verify needs a harness name");
  HarnessParams params;
  if (cfg.algebra_arg.rfind("builtin:", 0) == 0)
    params = fixture_params(cfg.algebra_arg.substr(8));
  if (!cfg.dim_cap.empty()) params.dim_cap = cfg.dim_cap;
  params.samples = cfg.samples;
  params.n_max = cfg.n_max;
  params.trials = cfg.trials;
  params.threads = cfg.threads;
  params.count = cfg.count;
  if (cfg.field_override) params.small_char = cfg.field_override;
  HarnessReport rep = run_harness(spec, cfg.harness_arg, params, cfg.seed);
  RunResult rr;
  rr.exit_code = rep.ok() ? 0 : 1;
  rr.output = cfg.json
                  ? envelope("verify", spec, cfg, report_to_json(rep)).dump(2) + "\n"
                  : verify_text(rep);
  return rr;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& s, const char* field) {
  if (s.empty()) throw ValidationError(field, "empty value");
  std::vector<int> out;
  size_t start = 0;
  for (;;) {
    size_t comma = s.find(',', start);
    std::string tok = s.substr(start, comma == std::string::npos
                                          ? std::string::npos
                                          : comma - start);
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size() || tok.empty()) throw std::invalid_argument("tail");
      out.push_back(v);
    } catch (const std::exception&) {
      throw ValidationError(field, "bad integer '" + tok + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

RunResult run_command(const std::string& command, const RunConfig& cfg) {
  RunResult rr;
  try {
    validate_config(cfg);
    if (cfg.algebra_arg.empty())
      throw ValidationError("algebra", "missing --algebra");
    AlgebraSpec spec = resolve_algebra_arg(cfg.algebra_arg, cfg.field_override);
    if (command == "verify") return run_verify(spec, cfg);

    AlgebraPtr alg = build_algebra(spec);
    int nv = static_cast<int>(spec.vertices.size());
    ordered_json results;
    if (command == "hom") {
      std::vector<int> w = parse_weight(cfg.weight, nv, "weight");
      Representation m = resolve_module(alg, cfg.module_name, nv);
      HomEPair he = hom_e_generic(alg, w, m, cfg.samples, cfg.seed);
      results = {{"weight", w}, {"module", cfg.module_name},
                 {"hom", he.hom}, {"e", he.e}};
    } else if (command == "epair") {
      std::vector<int> w = parse_weight(cfg.weight, nv, "weight");
      std::vector<int> h = parse_weight(cfg.eta, nv, "eta");
      int e = e_generic_pair(alg, w, h, cfg.samples, cfg.seed);
      results = {{"weight", w}, {"eta", h}, {"e", e}};
    } else if (command == "coker") {
      std::vector<int> w = parse_weight(cfg.weight, nv, "weight");
      Presentation d = sample_presentation(alg, w, cfg.seed);
      Representation m = cokernel(d);
      results = {{"weight", w}, {"neg", d.neg}, {"pos", d.pos},
                 {"dims", m.dims}};
    } else if (command == "fpoly") {
      Representation m = resolve_module(alg, cfg.module_name, nv);
      auto sub = submodule_dimvectors(m);
      results = {{"module", cfg.module_name},
                 {"dims", m.dims},
                 {"submodule_count", sub.size()},
                 {"submodules", sub}};
      if (!cfg.weight.empty()) {
        std::vector<int> w = parse_weight(cfg.weight, nv, "weight");
        results["weight"] = w;
        results["f_value"] = trop_eval(sub, w);
        results["t_value"] = trop_eval_dual(sub, m.dims, negated(w));
        results["pairing"] = dot(w, m.dims);
      }
    } else if (command == "candecomp") {
      std::vector<int> w = parse_weight(cfg.weight, nv, "weight");
      Decomposition dec =
          canonical_decomposition(alg, w, cfg.samples, cfg.seed, cfg.trials);
      results = {{"weight", w},
                 {"summands", dec.summands},
                 {"agree", {dec.agree_num, dec.agree_den}},
                 {"samples", dec.samples}};
    } else if (command == "classify") {
      std::vector<int> w = parse_weight(cfg.weight, nv, "weight");
      WeightClass wc = classify_weight(alg, w, cfg.samples, cfg.seed);
      results = {{"weight", w}, {"tag", to_string(wc.tag)},
                 {"witness", wc.witness}};
    } else if (command == "membership") {
      std::vector<int> w = parse_weight(cfg.weight, nv, "weight");
      Representation m = resolve_module(alg, cfg.module_name, nv);
      MembershipFlags f = membership(m, w);
      results = {{"weight", w}, {"module", cfg.module_name},
                 {"in_t", f.in_t}, {"in_tbar", f.in_tbar},
                 {"in_fbar", f.in_fbar}, {"in_f", f.in_f}, {"in_w", f.in_w}};
    } else if (command == "tfcheck") {
      std::vector<int> th = parse_weight(cfg.weight, nv, "weight");
      std::vector<int> et = parse_weight(cfg.eta, nv, "eta");
      TestSet ts = build_testset(alg, effective_cap(cfg, nv), cfg.count,
                                 derive_seed(cfg.seed, "testset"), cfg.exhaustive);
      TfResult tf = tf_equivalent(th, et, ts);
      results = {{"theta", th}, {"eta", et},
                 {"modules", ts.modules.size()},
                 {"equivalent", tf.equivalent},
                 {"module", tf.module_name}, {"flag", tf.flag_name}};
    } else if (command == "indset") {
      std::vector<int> th = parse_weight(cfg.weight, nv, "weight");
      IndSet is = ind_set(alg, th, cfg.samples, cfg.seed);
      results = {{"theta", th}, {"weights", is.weights}};
    } else if (command == "testset") {
      TestSet ts = build_testset(alg, effective_cap(cfg, nv), cfg.count,
                                 derive_seed(cfg.seed, "testset"), cfg.exhaustive);
      auto mods = ordered_json::array();
      for (const auto& tm : ts.modules)
        mods.push_back({{"name", tm.name}, {"tag", tm.tag},
                        {"dims", tm.rep.dims}});
      results = {{"count", ts.modules.size()}, {"modules", std::move(mods)}};
    } else {
      throw ValidationError("command", "unknown command " + command);
    }
    rr.output = cfg.json ? envelope(command, spec, cfg, std::move(results)).dump(2) + "\n"
                         : text_lines(results);
    rr.exit_code = 0;
  } catch (const Error& e) {
    rr.exit_code = 2;
    rr.output = cfg.json ? ordered_json{{"error", e.what()}}.dump(2) + "\n"
                         : std::string("error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    rr.exit_code = 2;
    rr.output = cfg.json ? ordered_json{{"error", e.what()}}.dump(2) + "\n"
                         : std::string("error: ") + e.what() + "\n";
  }
  return rr;
}

}  // namespace qpres

#include "topoq/cli.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "topoq/error.hpp"

namespace topoq::cli {

namespace {

constexpr std::array<std::string_view, 7> kCommands = {"dj",  "gdj", "grover", "ggrover",
                                                       "hsp", "irreps", "verify"};

Json error_doc(const std::string& kind, const std::string& detail) {
  return Json{{"error", Json{{"kind", kind}, {"detail", detail}}}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string members_text(const std::vector<std::size_t>& members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(members[i]);
  }
  return out + "}";
}

const Json& require(const std::optional<Json>& field, const JobSpec& job, const char* name) {
  if (!field) throw ValidationError("command " + job.command + " needs \"" + name + "\"");
  return *field;
}

Json header(const JobSpec& job) {
  Json j{{"command", job.command}, {"seed", job.seed}, {"tol", job.tol}};
  if (job.trials) j["trials"] = *job.trials;
  return j;
}

// dj and grover take functions into {0, 1}; a group, if given, must be Z_2.
FunctionTable binary_function(const JobSpec& job) {
  if (!job.group.is_null() && io::parse_group(job.group).order() != 2) {
    throw ValidationError("command " + job.command + " runs over a group of order 2");
  }
  const auto image = io::parse_indices(require(job.function, job, "function"), "function");
  if (image.empty()) throw ValidationError("function must have a nonempty domain");
  return FunctionTable(FiniteSet(image.size()), FiniteSet(2), image);
}

FunctionTable group_function(const JobSpec& job, const FiniteGroup& g) {
  const auto image = io::parse_indices(require(job.function, job, "function"), "function");
  if (image.empty()) throw ValidationError("function must have a nonempty domain");
  return FunctionTable(FiniteSet(image.size()), g.as_set(), image);
}

std::optional<std::vector<Complex>> parse_weights(const JobSpec& job) {
  if (!job.weights) return std::nullopt;
  if (!job.weights->is_array()) throw ValidationError("weights must be an array");
  std::vector<Complex> w;
  for (const auto& v : *job.weights) w.push_back(io::parse_complex(v));
  return w;
}

Json run_dj(const JobSpec& job) {
  const FunctionTable f = binary_function(job);
  const DJResult r = deutsch_jozsa(f, job.tol);
  Json out = header(job);
  out["success_probability"] = r.success_probability;
  out["verdict"] = to_string(r.verdict);
  out["constant"] = is_constant(f);
  out["balanced"] = is_balanced(f, job.tol);
  return out;
}

Json run_grover(const JobSpec& job) {
  const Distribution d = grover_single_shot(binary_function(job), job.tol);
  Json out = header(job);
  out["outcomes"] = io::distribution_json(d)["outcomes"];
  return out;
}

struct GeneralizedInputs {
  IrrepSet irreps;
  FunctionTable f;
  ProjectorFamily p;
  std::optional<std::vector<Complex>> weights;
};

GeneralizedInputs generalized_inputs(const JobSpec& job) {
  const FiniteGroup g = io::parse_group(job.group);
  FunctionTable f = group_function(job, g);
  IrrepSet irreps = irreps_with_retry(g, job.seed);
  ProjectorFamily p = io::parse_projectors(require(job.projectors, job, "projectors"), irreps);
  p.validate(irreps, job.tol);
  return {std::move(irreps), std::move(f), std::move(p), parse_weights(job)};
}

Json run_gdj(const JobSpec& job) {
  const auto in = generalized_inputs(job);
  const DJResult r = generalized_deutsch_jozsa(in.f, in.irreps, in.p, in.weights, job.tol);
  Json out = header(job);
  out["irrep_seed"] = in.irreps.seed;
  out["success_probability"] = r.success_probability;
  out["verdict"] = to_string(r.verdict);
  out["P_constant"] = is_P_constant(in.f, in.irreps, in.p, job.tol);
  out["P_balanced"] = is_P_balanced(in.f, in.irreps, in.p, job.tol);
  return out;
}

Json run_ggrover(const JobSpec& job) {
  const auto in = generalized_inputs(job);
  const Distribution d = generalized_grover(in.f, in.irreps, in.p, in.weights, job.tol);
  Json out = header(job);
  out["irrep_seed"] = in.irreps.seed;
  out["outcomes"] = io::distribution_json(d)["outcomes"];
  out["balanced_elements"] = balanced_elements(in.f, in.irreps, in.p, job.tol);
  return out;
}

Json irrep_summary(const IrrepSet& irreps) {
  Json list = Json::array();
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    Json character = Json::array();
    for (Complex c : irreps[i].character()) character.push_back(io::complex_json(c));
    list.push_back(Json{{"index", i}, {"dim", irreps[i].dim()}, {"character", character}});
  }
  return list;
}

Json run_hsp(const JobSpec& job) {
  const FiniteGroup g = io::parse_group(job.group);
  const auto image = io::parse_indices(require(job.function, job, "function"), "function");
  if (image.empty()) throw ValidationError("function must have a nonempty domain");
  const HSPInstance inst = infer_hsp_instance(g, FunctionTable::from_image(image));
  const IrrepSet irreps = irreps_with_retry(g, job.seed);
  const Distribution d = hsp_distribution(inst, irreps);

  const std::size_t trials = job.trials.value_or(kDefaultHspTrials);
  const auto counts = sample(d, job.seed, trials);
  std::vector<std::size_t> observed;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] > 0) observed.push_back(d.outcomes[i].label);
  }
  const Subgroup rebuilt = hsp_reconstruct(g, irreps, observed, job.tol);

  Json out = header(job);
  out["trials"] = trials;
  out["irrep_seed"] = irreps.seed;
  out["irreps"] = irrep_summary(irreps);
  out["outcomes"] = io::distribution_json(d)["outcomes"];
  out["counts"] = counts;
  out["observed"] = observed;
  out["reconstructed"] = rebuilt.members();
  out["hidden"] = inst.hidden.members();
  out["recovered"] = rebuilt == inst.hidden;
  return out;
}

Json run_irreps(const JobSpec& job) {
  const FiniteGroup g = io::parse_group(job.group);
  const IrrepSet irreps = irreps_with_retry(g, job.seed);
  Json out = header(job);
  out["irrep_seed"] = irreps.seed;
  out["order"] = g.order();
  const Json body = io::irreps_json(irreps);
  for (const auto& [key, value] : body.items()) out[key] = value;
  return out;
}

// Check names are "<family>/<instance>"; a family passes when all its checks do.
Json report_json(const Report& r) {
  Json checks = Json::array();
  Json summary = Json::object();
  for (const auto& c : r.checks) {
    Json residual = std::isfinite(c.residual) ? Json(c.residual) : Json(nullptr);
    checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"residual", residual}});
    const std::string family = c.name.substr(0, c.name.find('/'));
    const bool ok = c.pass && (!summary.contains(family) || summary[family] == "pass");
    summary[family] = ok ? "pass" : "fail";
  }
  return Json{{"summary", summary}, {"checks", checks}, {"all_pass", r.all_pass()}};
}

struct JobResult {
  Json doc;
  bool verification_failed = false;
};

JobResult run_verify(const JobSpec& job) {
  const FiniteGroup g = io::parse_group(job.group);
  const IrrepSet irreps = irreps_with_retry(g, job.seed);
  const Report r = verify_suite(g, irreps, job.tol);
  Json out = header(job);
  out["irrep_seed"] = irreps.seed;
  out["order"] = g.order();
  out["dims"] = irreps.dims();
  const Json body = report_json(r);
  for (const auto& [key, value] : body.items()) out[key] = value;
  return {out, !r.all_pass()};
}

JobResult dispatch(const JobSpec& job) {
  if (job.command == "dj") return {run_dj(job)};
  if (job.command == "gdj") return {run_gdj(job)};
  if (job.command == "grover") return {run_grover(job)};
  if (job.command == "ggrover") return {run_ggrover(job)};
  if (job.command == "hsp") return {run_hsp(job)};
  if (job.command == "irreps") return {run_irreps(job)};
  if (job.command == "verify") return run_verify(job);
  throw ValidationError("unknown command \"" + job.command + "\"");
}

RunOutput failure(int code, const std::string& kind, const std::string& detail) {
  return {code, {}, dump(error_doc(kind, detail))};
}

}  // namespace

bool is_command(std::string_view command) {
  return std::find(kCommands.begin(), kCommands.end(), command) != kCommands.end();
}

JobSpec parse_job(std::string_view command, const Json& doc, const Overrides& overrides) {
  if (!doc.is_object()) throw ValidationError("job spec must be a JSON object");
  JobSpec job;
  job.command = std::string(command);
  if (doc.contains("command")) {
    if (!doc["command"].is_string() || doc["command"].get<std::string>() != command) {
      throw ValidationError("spec \"command\" does not match " + std::string(command));
    }
  }
  if (!is_command(job.command)) throw ValidationError("unknown command \"" + job.command + "\"");

  const bool grouped = job.command != "dj" && job.command != "grover";
  if (doc.contains("group")) {
    job.group = doc["group"];
  } else if (grouped) {
    throw ValidationError("command " + job.command + " needs \"group\"");
  }
  for (const auto& [key, value] : doc.items()) {
    static constexpr std::array<std::string_view, 8> kKnown = {
        "command", "group", "function", "projectors", "weights", "seed", "trials", "tol"};
    if (std::find(kKnown.begin(), kKnown.end(), key) == kKnown.end()) {
      throw ValidationError("unknown field \"" + key + "\"");
    }
  }
  if (doc.contains("function")) job.function = doc["function"];
  if (doc.contains("projectors")) job.projectors = doc["projectors"];
  if (doc.contains("weights")) job.weights = doc["weights"];
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) throw ValidationError("seed must be a non-negative integer");
    job.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("trials")) {
    if (!doc["trials"].is_number_unsigned() || doc["trials"].get<std::size_t>() == 0) {
      throw ValidationError("trials must be a positive integer");
    }
    job.trials = doc["trials"].get<std::size_t>();
  }
  if (doc.contains("tol")) {
    if (!doc["tol"].is_number()) throw ValidationError("tol must be a number");
    job.tol = doc["tol"].get<double>();
  }
  if (overrides.seed) job.seed = *overrides.seed;
  if (overrides.trials) job.trials = *overrides.trials;
  if (overrides.tol) job.tol = *overrides.tol;
  if (job.trials && *job.trials == 0) throw ValidationError("trials must be a positive integer");
  if (!std::isfinite(job.tol) || job.tol <= 0.0) throw ValidationError("tol must be positive");

  const bool needs_function = job.command != "irreps" && job.command != "verify";
  if (needs_function && !job.function) {
    throw ValidationError("command " + job.command + " needs \"function\"");
  }
  const bool needs_projectors = job.command == "gdj" || job.command == "ggrover";
  if (needs_projectors && !job.projectors) {
    throw ValidationError("command " + job.command + " needs \"projectors\"");
  }
  return job;
}

RunOutput run(const JobSpec& job) {
  try {
    const JobResult o = dispatch(job);
    return {o.verification_failed ? 2 : 0, dump(o.doc), {}};
  } catch (const InputError& e) {
    return failure(1, e.kind(), e.detail());
  } catch (const InternalError& e) {
    return failure(2, e.kind(), e.detail());
  } catch (const Json::exception& e) {
    return failure(1, "ValidationError", e.what());
  } catch (const std::exception& e) {
    return failure(2, "Internal", e.what());
  }
}

RunOutput run_text(std::string_view command, std::string_view spec_text,
                   const Overrides& overrides) {
  Json doc;
  try {
    doc = Json::parse(spec_text);
  } catch (const Json::parse_error& e) {
    return failure(1, "SyntaxError", e.what());
  }
  try {
    return run(parse_job(command, doc, overrides));
  } catch (const InputError& e) {
    return failure(1, e.kind(), e.detail());
  } catch (const Json::exception& e) {
    return failure(1, "ValidationError", e.what());
  }
}

IrrepSet irreps_with_retry(const FiniteGroup& g, std::uint64_t seed) {
  for (std::size_t attempt = 0;; ++attempt) {
    try {
      return compute_irreps(g, seed + attempt);
    } catch (const DecompositionFailed&) {
      if (attempt + 1 == kIrrepSeedAttempts) throw;
    }
  }
}

Report verify_suite(const FiniteGroup& g, const IrrepSet& irreps, double tol) {
  Report r;
  auto add = [&](std::string name, double residual) {
    r.checks.push_back({std::move(name), residual <= tol, residual});
  };

  const FiniteSet s(std::min(g.order(), kVerifySetCap));
  for (const auto& c : verify_classical_structure(multiply(s), unit(s), tol).checks) {
    add("classical/" + c.name, c.residual);
  }
  for (const auto& c : verify_spider_instances(s, tol).checks) add("spider/" + c.name, c.residual);

  std::size_t dim_squares = 0;
  for (std::size_t d : irreps.dims()) dim_squares += d * d;
  add("irreps/sum_dim_squared", static_cast<double>(dim_squares > g.order()
                                                        ? dim_squares - g.order()
                                                        : g.order() - dim_squares));
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    add("homomorphism/" + std::to_string(i), representation_residual(irreps[i]));
  }
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    add("repnorm/" + std::to_string(i), repnorm_residual(irreps[i]));
  }
  add("mdecomp/all", mdecomp_residual(g, irreps.irreps));
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    const auto& rho = irreps[i];
    add("copyonleg/" + std::to_string(i),
        copy_on_leg_residual(g, rep_as_linear_map(rho), rho.dim()));
  }
  for (const auto& h : normal_subgroups(g)) {
    for (std::size_t i = 0; i < irreps.size(); ++i) {
      const std::string name = "classification/H" + members_text(h.members()) + "/" +
                               std::to_string(i);
      try {
        const auto c = classify_irrep_vs_normal_subgroup(irreps[i], h, tol);
        const char* arm =
            c.arm == Classification::Arm::FactorsThrough ? " factors" : " annihilated";
        add(name + arm, c.residual);
      } catch (const Inconsistent&) {
        add(name + " neither", std::numeric_limits<double>::infinity());
      }
    }
  }
  return r;
}

}  // namespace topoq::cli

#include "topoq/protocols.hpp"

#include <cmath>
#include <cstdio>

#include "topoq/error.hpp"

namespace topoq {

namespace {

std::string real_text(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// copy on the first register, f on its second leg, then the group action on
// the target register; the input is (uniform (x) target).
std::string oracle_text(std::size_t control, std::size_t target, const std::string& target_input) {
  const std::string c = std::to_string(control);
  const std::string t = std::to_string(target);
  const std::string k = real_text(1.0 / std::sqrt(static_cast<double>(control)));
  return "(seq (par (id " + c + ") (gen m))\n"
         "  (seq (par (par (id " + c + ") (gen f)) (id " + t + "))\n"
         "    (seq (par (gen copy) (id " + t + "))\n"
         "      (par (par (gen u) (scalar " + k + " 0)) (gen " + target_input + ")))))";
}

Transcription make(std::string text, Environment env) {
  Diagram d = parse(text);
  return {std::move(text), std::move(d), std::move(env)};
}

Environment oracle_env(const FunctionTable& f, const FiniteGroup& target) {
  Environment env;
  env.bind("u", unit(f.dom()));
  env.bind("copy", copy(f.dom()));
  env.bind("f", linearize(f));
  env.bind("m", group_multiplication_map(target));
  return env;
}

}  // namespace

Transcription dj_transcription(const FunctionTable& f, const FiniteGroup& g, const LinearMap& phi) {
  Environment env = oracle_env(f, g);
  env.bind("phi", phi);
  return make(oracle_text(f.dom().size, g.order(), "phi"), std::move(env));
}

Transcription grover_transcription(const FunctionTable& f, const FiniteGroup& g,
                                   const LinearMap& phi) {
  Environment env = oracle_env(f, g);
  env.bind("phi", phi);
  env.bind("D", diffusion_operator(f.dom().size));
  const std::string text = "(seq (par (gen D) (id " + std::to_string(g.order()) + "))\n" +
                           oracle_text(f.dom().size, g.order(), "phi") + ")";
  return make(text, std::move(env));
}

Transcription hsp_transcription(const HSPInstance& inst) {
  validate_hsp_instance(inst);
  const std::size_t ns = inst.oracle.cod().size;
  Environment env = oracle_env(inst.oracle, group_cyclic(ns));
  env.bind("e", LinearMap::basis_state(ns, 0));
  return make(oracle_text(inst.group.order(), ns, "e"), std::move(env));
}

}  // namespace topoq

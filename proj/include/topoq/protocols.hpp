#pragma once

// The three protocol summary diagrams written in the diagram language, with
// the environments that bind their generators. Evaluating one of these gives
// the pre-measurement state that the algorithms module computes directly.

#include <string>

#include "topoq/algorithms.hpp"
#include "topoq/diagram.hpp"

namespace topoq {

struct Transcription {
  std::string text;
  Diagram diagram;
  Environment env;

  LinearMap evaluate() const { return topoq::evaluate(diagram, env); }
};

/// Oracle after copy on the uniform superposition of S, with `phi` on G.
/// Generators: u, copy, f, m, phi.
Transcription dj_transcription(const FunctionTable& f, const FiniteGroup& g, const LinearMap& phi);

/// The DJ diagram followed by the diffusion operator D on S.
Transcription grover_transcription(const FunctionTable& f, const FiniteGroup& g,
                                   const LinearMap& phi);

/// Uniform superposition on G with |0> on S, then the coset oracle into the
/// cyclic group on S. Generators: u, copy, f, m, e.
Transcription hsp_transcription(const HSPInstance& inst);

}  // namespace topoq

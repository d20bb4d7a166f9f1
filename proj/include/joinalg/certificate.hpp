#ifndef JOINALG_CERTIFICATE_HPP
#define JOINALG_CERTIFICATE_HPP

#include <string>

#include "joinalg/io.hpp"

namespace joinalg {

enum ExitCode : int {
  kExitPass = 0,
  kExitAxiomFailure = 1,
  kExitMalformed = 2,
  kExitInfeasible = 3,
  kExitRefused = 4,
};

/// A certificate is a JSON object:
///   command, scenario, tool {name, version}, input (inlined), options,
///   verdicts {name: bool}, results {name: value}, dimensions, checks,
///   matrices (sparse triples), status, exit_code, timing {seconds}.
/// Every verdict must hold for status "pass"; results are reported values.
/// Everything except "timing" is a pure function of the input.

/// Axiom suite of an algebra, hopf, comodule, group or gset document.
Json run_check(const Json& document);
/// Strong connection for a comodule document (or a scenario naming one).
Json run_solve_connection(const Json& document, bool require_unital);
/// Scenario operations: fusion, equivariant-fusion, theorem-main, pullback.
Json run_fusion(const Json& scenario);
/// Scenario operations: is-free, discrete-join, gauged-join-iso,
/// fun-of-join-vs-fusion, diagonal-join-freeness.
Json run_classical(const Json& scenario);

/// Recomputes every verdict from the embedded input and matrices without
/// calling the connection solver. The result has "reproduced" (bool),
/// "mismatches" (names), and the replayed "verdicts".
Json replay_certificate(const Json& certificate);

/// Adds {"timing": {"seconds": s}}.
void stamp_timing(Json& certificate, double seconds);
/// Copy without the timing field; equal dumps mean identical certificates.
Json without_timing(const Json& certificate);
int exit_code_of(const Json& certificate);

/// Human-readable summary.
std::string render_text(const Json& certificate);

}  // namespace joinalg

#endif  // JOINALG_CERTIFICATE_HPP

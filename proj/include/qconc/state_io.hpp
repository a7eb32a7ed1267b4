#pragma once

#include <string>

#include "qconc/qstate.hpp"
#include "qconc/tolerances.hpp"

namespace qconc {

/// Parses the state document format:
///   { "dims": [2, 2], "matrix": [[[re, im], ...], ...] }
/// with one matrix row per basis state and one [re, im] pair per entry.
/// Syntax errors report "name:line:column"; semantic errors name the field,
/// and the parsed state must satisfy every density-matrix invariant.
MultipartiteState parse_state_json(const std::string& text,
                                   const std::string& name = "<input>",
                                   const Tolerances& tol = {});

/// parse_state_json over the contents of a file.
MultipartiteState load_state_file(const std::string& path,
                                  const Tolerances& tol = {});

/// Serializes a state into the document format above.
std::string state_to_json(const MultipartiteState& s);

}  // namespace qconc

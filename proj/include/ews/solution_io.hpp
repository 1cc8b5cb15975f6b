#pragma once

#include <string>

#include "ews/ball_solver.hpp"

namespace ews::solution_io {

/// Serialize a solution to the stable JSON document: params, incident,
/// scatterer, N, then coefficient tables as [n, m, re, im] rows.
std::string to_json(const ball::MultipoleSolution& sol);

/// Parse a document produced by to_json. Throws std::runtime_error with a
/// field diagnostic on malformed input.
ball::MultipoleSolution from_json(const std::string& text);

void save(const ball::MultipoleSolution& sol, const std::string& path);
ball::MultipoleSolution load(const std::string& path);

}  // namespace ews::solution_io

#pragma once

// JSON documents exchanged by the command-line tool.
//
// Code:            {"q":2,"M":1,"N":3,"ell":2,"L":[1,1,1,0,0,1],"queries":[[1],[1,2],[2]]}
//   L is the MN x ell encoder flattened row-major; queries are 1-based column indices.
// Fitting matrix:  {"q":2,"N":3,"rank":2,"A":[...]} with A flattened row-major.

#include "ldic/index_code.hpp"

#include <string>
#include <string_view>

namespace ldic {

/// Single-line JSON with fields in the order q, M, N, ell, L, queries, plus a trailing newline.
std::string code_to_json(const IndexCode& code);

/// Throws ParseError on malformed JSON or missing fields and StructuralError on
/// inconsistent shapes (e.g. L length != M*N*ell).
IndexCode code_from_json(std::string_view text);

std::string fitting_matrix_to_json(const FittingMatrix& a);

} // namespace ldic

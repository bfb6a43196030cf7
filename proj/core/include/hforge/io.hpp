#pragma once

#include <iosfwd>
#include <string>

#include "hforge/core.hpp"

namespace hforge {

/// Matrix files are JSON, in one of two shapes.
///
/// Rectangular (lossless doubles, 17 significant digits):
///   {"n": 3, "entries": [[[re,im], ...], ...]}
///
/// Phase form (exact, for Butson-type matrices; entry = exp(2*pi*i*k/q)):
///   {"n": 3, "q": 3, "log_entries": [[0,0,0],[0,1,2],[0,2,1]]}
///
/// Writers emit the phase form whenever every entry is within 1e-12 of a
/// q-th root of unity for some q <= phase_q_max; readers accept both.
std::string matrix_to_json(const Matrix& m, long phase_q_max = 72);

Matrix matrix_from_json(const std::string& text);

void save_matrix(const Matrix& m, const std::string& path, long phase_q_max = 72);
Matrix load_matrix(const std::string& path);
Matrix load_matrix(std::istream& in);

}  // namespace hforge

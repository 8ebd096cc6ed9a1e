#pragma once

#include <iosfwd>
#include <string>

#include "coh/states.hpp"

namespace coh {

/// Plain-text state format: line 1 holds d, then d lines of d
/// whitespace-separated complex entries written `re,im`.
ComplexMatrix read_state_matrix(std::istream& in);
ComplexMatrix read_state_file(const std::string& path);

void write_state_matrix(std::ostream& out, const ComplexMatrix& m);
void write_state_file(const std::string& path, const ComplexMatrix& m);

/// Parse + validate with the relaxed I/O-boundary tolerance (1e-8).
DensityMatrix load_density(const std::string& path, double tol = 1e-8);

}  // namespace coh

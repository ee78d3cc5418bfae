#pragma once

#include "qa/uplus.hpp"

#include <iosfwd>
#include <string>

namespace qa {

// Runs the qa command line; returns the process exit code
// (0 ok, 2 usage or domain error, 3 inconclusive or not computable).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// "E0*E1 - q^-2*E1*E0", "(q + q^-1)*E1", "3*E0*E0"
AlgElement parse_element(const std::string& text, int size);

} // namespace qa

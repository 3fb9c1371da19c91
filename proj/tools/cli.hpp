#pragma once

#include <iosfwd>

namespace topvert::cli {

// Runs one command line; returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace topvert::cli

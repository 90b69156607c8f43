#ifndef HILL_CLI_HPP
#define HILL_CLI_HPP

#include <complex>
#include <string>
#include <vector>

namespace hill::cli {

/// Parses a complex literal of the form "a+bi" (also "a", "bi", "i", "-i")
/// with decimal real and imaginary parts.  Throws ParseError otherwise.
std::complex<double> parse_complex(const std::string& text);

/// Dispatches one subcommand.  Returns the process exit code:
/// 0 pass/success, 1 verification failure, 2 usage or IO error.
int run(const std::vector<std::string>& args);
int run(int argc, const char* const* argv);

}  // namespace hill::cli

#endif

#ifndef TRINOTOOL_CLI_HPP
#define TRINOTOOL_CLI_HPP

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace trinotool {

inline constexpr const char* kToolVersion = "0.1.0";

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 on a domain error and 2 on
/// a usage error.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "3", "-1.5", "2i", "-i", "1+2i", "1e-3-4.5i". Throws std::invalid_argument.
std::complex<double> parse_complex(std::string_view s);

} // namespace trinotool

#endif

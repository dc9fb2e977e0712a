#ifndef PUE_CLI_HPP
#define PUE_CLI_HPP

#include "pue/linear_code.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pue::cli {

enum ExitCode : int {
    kSuccess = 0,
    kViolation = 1,
    kUsageError = 2,
    kBudgetExceeded = 3,
};

/// Matrix file: header "q n k", then k rows of n symbol codes. Blank lines are
/// ignored. Throws ParseError (with line/column) or RankDeficient.
GeneratorMatrix parse_matrix(std::istream& in);
GeneratorMatrix read_matrix_file(const std::string& path);
std::string format_matrix(const GeneratorMatrix& g);

/// Family "C", "D" or "E". `v` defaults to all ones for D and E.
LinearCode construct(const std::string& family, std::size_t n, std::size_t k, unsigned q,
                     const std::optional<std::vector<unsigned>>& v);

struct AnalyzeOutput {
    std::string report;
    std::string csv;  // p, p_ue, general_bound, full_support_bound, improvement
};

AnalyzeOutput analyze(const LinearCode& code, std::size_t grid_points = 101);

/// Full command line: analyze | construct | verify | simulate | bounds.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pue::cli

#endif  // PUE_CLI_HPP

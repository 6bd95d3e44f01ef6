#pragma once

#include "adet/matrix.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace adet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Everything goes to out
/// and err; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "2,1;2,2;3,1" -> {(2,1), (2,2), (3,1)}. Throws ParseError.
std::vector<std::pair<int, int>> parse_cases(std::string_view text);

/// Square matrix from CSV text, one row per line, entries "p/q".
/// Throws ParseError, or SizeMismatch when the matrix is not square.
RatMatrix parse_matrix_csv(std::string_view text);

struct CaseResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  int max_l = -1;                          // -1: suite default
  int max_n = -1;                          // -1: suite default
  std::vector<std::pair<int, int>> cases;  // empty: suite default
  int cap = 10;
  bool paper_variant = false;
};

/// Names accepted by run_suite, in display order.
const std::vector<std::string>& suite_names();

/// Throws UnknownSuite.
std::vector<CaseResult> run_suite(const std::string& name, const VerifyOptions& opts);

/// Characteristic polynomial det(t I - m), in the variable of PolyQ.
PolyQ characteristic_polynomial(const RatMatrix& m);
/// Exact diagonalizability over the algebraic closure of Q.
bool is_diagonalizable(const RatMatrix& m);

} // namespace adet::cli

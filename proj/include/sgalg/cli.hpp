#pragma once

// Command-line front end. `run` never exits the process; it returns the
// exit code: 0 success, 2 invalid input, 3 failed verification, 4 a cap or
// size limit was hit.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sgalg/error.hpp"
#include "sgalg/linalg.hpp"

namespace sgalg {

struct SemigroupInput {
  std::vector<IntegerVector> generators;  // columns
  std::optional<std::vector<std::size_t>> E;
  std::uint64_t field_char = 0;
  std::string order = "a-graded-revlex";
  std::size_t q_cap = 1'000'000;
  // Optional weight rows refining the tie-break (JSON input only).
  std::vector<std::vector<std::int64_t>> tie_break;
};

// "8,11,18" is three generators of dimension 1; "6,1;6,3" is two columns
// of dimension 2. Throws Error(ParseError).
SemigroupInput parse_inline(const std::string& text);

// {"generators": [[...], ...], "E": [...], "tie_break": [[...], ...]}.
// Throws Error(ParseError) with line and column.
SemigroupInput parse_json(const std::string& text);

int exit_code_for(ErrorCode code);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sgalg

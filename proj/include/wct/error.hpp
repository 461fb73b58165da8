#pragma once

#include <stdexcept>
#include <string>

namespace wct {

// Every failure raised by the library carries a stable machine-readable code
// (e.g. "graph6.bad_character") next to the human message. The CLI forwards
// both as a JSON diagnostic.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

namespace errc {
inline constexpr const char* graph6_malformed_header = "graph6.malformed_header";
inline constexpr const char* graph6_bad_character = "graph6.bad_character";
inline constexpr const char* graph6_trailing_garbage = "graph6.trailing_garbage";
inline constexpr const char* graph6_truncated = "graph6.truncated";
inline constexpr const char* graph6_too_many_vertices = "graph6.too_many_vertices";
inline constexpr const char* invalid_argument = "invalid_argument";
inline constexpr const char* precondition = "precondition";
inline constexpr const char* empty_result = "empty_result";
inline constexpr const char* cap_exceeded = "cap_exceeded";
inline constexpr const char* not_adjacent = "not_adjacent";
inline constexpr const char* not_independent = "not_independent";
inline constexpr const char* overlapping_parts = "overlapping_parts";
inline constexpr const char* phi_cascade = "phi_cascade";
inline constexpr const char* edge_condition = "edge_condition";
inline constexpr const char* not_maximal = "not_maximal";
inline constexpr const char* already_maximal = "already_maximal";
inline constexpr const char* bound_not_attained = "bound_not_attained";
inline constexpr const char* malformed = "malformed";
inline constexpr const char* invariant_violation = "invariant_violation";
inline constexpr const char* io = "io";
}  // namespace errc

}  // namespace wct

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace braid3 {

// Single exception type, discriminated by a stable machine-readable code.
// Codes in use:
//   syntax_error, mixed_alphabet, empty_word, not_a_knot,
//   normalization_error, exact_division_error, non_integral_a2,
//   genus_too_small, inconsistent_bounds, io_error, internal_error
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(message),
        code_(std::move(code)),
        position_(position) {}

  const std::string& code() const noexcept { return code_; }

  // 1-based byte offset into the input text, when the error points at one.
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  std::string code_;
  std::optional<std::size_t> position_;
};

}  // namespace braid3

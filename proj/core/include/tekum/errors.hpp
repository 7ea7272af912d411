#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tekum {

/// Error categories raised by the library. The CLI maps these onto exit codes.
enum class errc {
    invalid_character,
    out_of_range,
    length_mismatch,
    odd_length,
    unsupported_length,
    not_representable,
    special_input,
    special_only,
    bad_width,
    width_too_large,
    domain_error,
    io_error,
};

class error : public std::runtime_error {
  public:
    static constexpr std::size_t no_position = static_cast<std::size_t>(-1);

    error(errc code, std::string message, std::size_t position = no_position)
        : std::runtime_error(std::move(message)), code_(code), position_(position) {}

    errc code() const noexcept { return code_; }

    /// Offending input position for invalid_character, no_position otherwise.
    std::size_t position() const noexcept { return position_; }

  private:
    errc code_;
    std::size_t position_;
};

} // namespace tekum

#ifndef SBRAUER_ERROR_HPP
#define SBRAUER_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace sbrauer {

/// Raised when a textual element (cycles, window notation, diagram line)
/// cannot be read. Carries the offending input and the byte offset of the
/// token at fault so that front ends can point at it.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::string const& what, std::string input, std::size_t position)
      : std::invalid_argument(what), input_(std::move(input)), position_(position) {}

  std::string const& input() const noexcept { return input_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string input_;
  std::size_t position_;
};

}  // namespace sbrauer

#endif

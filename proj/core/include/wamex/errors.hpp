#pragma once

#include <stdexcept>
#include <string>

namespace wamex {

/// Input text could not be parsed. `position` is a byte offset into the
/// offending literal when known, or npos.
class ParseError : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit ParseError(std::string message, std::size_t position = npos)
      : std::runtime_error(position == npos
                               ? message
                               : message + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A construction whose termination depends on the monoid having finitely
/// many prefixes of the target exceeded its state budget. Raised for
/// targets with infinitely many prefixes (e.g. the infinite element of the
/// extended natural monoid) and, conservatively, for anything that blows
/// past the configured bound.
class NonTerminating : public std::runtime_error {
 public:
  explicit NonTerminating(std::string message, std::size_t budget = 0)
      : std::runtime_error(std::move(message)), budget_(budget) {}

  std::size_t budget() const { return budget_; }

 private:
  std::size_t budget_;
};

}  // namespace wamex

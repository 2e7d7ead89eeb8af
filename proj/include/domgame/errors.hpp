#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace domgame {

/// Malformed graph6 input; `offset` is the 0-based byte that failed.
class FormatError : public std::runtime_error {
public:
  FormatError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }
private:
  std::size_t offset_;
};

/// Malformed edge-list input; `line` is 1-based.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what + " at line " + std::to_string(line)), line_(line) {}
  std::size_t line() const { return line_; }
private:
  std::size_t line_;
};

/// Operation called outside its precondition.
class ContractError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A configured size guard (memo cap, tree cap, census order guard) tripped.
class ResourceGuardError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace domgame

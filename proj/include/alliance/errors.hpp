#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace alliance {

/// Malformed graph6 / edge-list input. `position` is a byte offset for graph6
/// and a 1-based line number for edge lists.
class ParseError : public std::runtime_error
{
public:
  ParseError(const std::string & what, std::size_t position)
    : std::runtime_error(what), position_(position)
  {
  }

  auto position() const -> std::size_t { return position_; }

private:
  std::size_t position_;
};

/// The requested alliance kind admits no set at all on this graph
/// (connected-global kinds on a disconnected graph).
class InfeasibleError : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

} // namespace alliance

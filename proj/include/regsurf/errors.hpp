#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace regsurf {

/// Malformed textual input (graph6, edge lists, ideal/complex files, field specs).
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what, long byte_offset = -1)
      : std::runtime_error(byte_offset >= 0 ? what + " (byte " + std::to_string(byte_offset) + ")"
                                            : what),
        offset_(byte_offset) {}
  long byte_offset() const { return offset_; }

 private:
  long offset_;
};

/// A configured budget (subset count, search nodes, wall clock) ran out.
/// Distinguished from a negative answer everywhere it can occur.
class budget_error : public std::runtime_error {
 public:
  budget_error(const std::string& what, std::uint64_t processed)
      : std::runtime_error(what), processed_(processed) {}
  std::uint64_t processed() const { return processed_; }

 private:
  std::uint64_t processed_;
};

}  // namespace regsurf

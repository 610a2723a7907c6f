#ifndef TRISECT_DSL_HPP
#define TRISECT_DSL_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "trisect/trisection.hpp"

namespace trisect {

/// Syntax or validation error in a trisection document, with 1-based
/// position information.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Parses the line-oriented trisection format:
///
///   trisection v1
///   name <string>              # optional
///   genus <int>
///   k <int>
///   map <1|2|3>                # three blocks, each listing generator
///     a1 -> <word|1>           # images in index order plus an optional
///     b1 -> <word|1>           # cut line
///     cuts: <word>, <word>, ...
///   target: <word>, <word>, ...   # optional relators of the target
///   target-gens: <int>         # optional generator count, default genus
///
/// '#' starts a comment anywhere. Structural validity (ranks, counts,
/// g >= k) is enforced here; the mathematical conditions are verify's job.
GroupTrisection parse_trisection(std::string_view text);

/// Canonical serialization: fixed key order, sectors 1..3, generators in
/// index order, canonical word tokens, LF newlines, no trailing
/// whitespace. Byte-identical across runs.
std::string serialize_trisection(const GroupTrisection& t);

}  // namespace trisect

#endif  // TRISECT_DSL_HPP

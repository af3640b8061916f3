#ifndef LATMORPH_ERRORS_HPP
#define LATMORPH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace latmorph {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Yale text contains a letter run that no alphabet symbol matches.
struct UntokenizableRun : Error {
  std::size_t position;
  UntokenizableRun(const std::string& what, std::size_t pos)
      : Error(what), position(pos) {}
};

// A syllable violates the (C1) V (C2) shape.
struct RoleViolation : Error {
  explicit RoleViolation(const std::string& what) : Error(what) {}
};

// Phoneme roles do not form one of the four diphone patterns.
struct IllegalPattern : Error {
  explicit IllegalPattern(const std::string& what) : Error(what) {}
};

struct EmptyInput : Error {
  explicit EmptyInput(const std::string& what) : Error(what) {}
};

struct NodeOutOfRange : Error {
  explicit NodeOutOfRange(const std::string& what) : Error(what) {}
};

struct UnsortedStream : Error {
  explicit UnsortedStream(const std::string& what) : Error(what) {}
};

// File-format error; line is 1-based, 0 when not line-specific.
struct ParseError : Error {
  int line;
  ParseError(const std::string& what, int line_no) : Error(what), line(line_no) {}
};

struct UnknownTag : ParseError {
  UnknownTag(const std::string& what, int line_no) : ParseError(what, line_no) {}
};

struct UnknownPhonSymbol : ParseError {
  UnknownPhonSymbol(const std::string& what, int line_no) : ParseError(what, line_no) {}
};

struct UntokenizableHeader : ParseError {
  UntokenizableHeader(const std::string& what, int line_no) : ParseError(what, line_no) {}
};

}  // namespace latmorph

#endif

#pragma once

#include <stdexcept>
#include <string>

namespace qblock {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

class DuplicateEdge : public ParseError {
 public:
  using ParseError::ParseError;
};

class SelfLoop : public ParseError {
 public:
  using ParseError::ParseError;
};

#define QBLOCK_DEFINE_ERROR(Name) \
  class Name : public Error {     \
   public:                        \
    using Error::Error;           \
  }

QBLOCK_DEFINE_ERROR(UnknownVertex);
QBLOCK_DEFINE_ERROR(NotConnected);
QBLOCK_DEFINE_ERROR(UnknownNode);
QBLOCK_DEFINE_ERROR(NotBiconnected);
QBLOCK_DEFINE_ERROR(NotOuterplanarBlock);
QBLOCK_DEFINE_ERROR(TooLarge);
QBLOCK_DEFINE_ERROR(UnsupportedClass);
QBLOCK_DEFINE_ERROR(UnsupportedBlock);
QBLOCK_DEFINE_ERROR(ClassRefused);
QBLOCK_DEFINE_ERROR(EmptyList);
QBLOCK_DEFINE_ERROR(BadOuter);
QBLOCK_DEFINE_ERROR(OrbitMismatch);

#undef QBLOCK_DEFINE_ERROR

// Raised when classical orbits and 2-WL vertex classes disagree, so the quantum
// orbits of an atom cannot be pinned down.
class OrbitGap : public Error {
 public:
  OrbitGap(std::string aut, std::string wl)
      : Error("orbit gap: automorphism orbits " + aut + " strictly refine WL classes " + wl),
        aut_(std::move(aut)),
        wl_(std::move(wl)) {}

  const std::string& aut_orbits() const noexcept { return aut_; }
  const std::string& wl_classes() const noexcept { return wl_; }

 private:
  std::string aut_;
  std::string wl_;
};

}  // namespace qblock

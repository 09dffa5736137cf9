#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace herencode {

// Malformed serialized graph text. offset is the byte where parsing gave up.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// A value violates a structural invariant (e.g. an edge inside one part).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Encoded word cannot be decoded; position is the symbol/bit index.
class MalformedWordError : public std::runtime_error {
 public:
  MalformedWordError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class SchemeUnavailableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CertificateInvalidError : public std::runtime_error {
 public:
  CertificateInvalidError(const std::string& what, unsigned vertex)
      : std::runtime_error(what), vertex_(vertex) {}
  unsigned vertex() const noexcept { return vertex_; }

 private:
  unsigned vertex_;
};

}  // namespace herencode

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mop {

// Base of every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CycleError : public Error {
 public:
  using Error::Error;
};

class UnknownElementError : public Error {
 public:
  explicit UnknownElementError(const std::string& id)
      : Error("unknown element '" + id + "'"), element(id) {}
  std::string element;
};

class DuplicateElementError : public Error {
 public:
  explicit DuplicateElementError(const std::string& id)
      : Error("duplicate element '" + id + "'"), element(id) {}
  std::string element;
};

class MarkingNotOrderPreserving : public Error {
 public:
  MarkingNotOrderPreserving(std::string lower_id, std::string upper_id)
      : Error("marking is not order-preserving: " + lower_id + " < " + upper_id +
              " but the mark of " + lower_id + " exceeds the mark of " + upper_id),
        lower(std::move(lower_id)),
        upper(std::move(upper_id)) {}
  std::string lower;
  std::string upper;
};

class NotACoverError : public Error {
 public:
  using Error::Error;
};

class NotStrictError : public Error {
 public:
  using Error::Error;
};

class NotCompatibleError : public Error {
 public:
  using Error::Error;
};

class NotInPolyhedronError : public Error {
 public:
  using Error::Error;
};

class SizeLimitError : public Error {
 public:
  using Error::Error;
};

class NotAFacePartitionError : public Error {
 public:
  using Error::Error;
};

class NotPointedError : public Error {
 public:
  using Error::Error;
};

class EmptyMarkingError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line_no, std::size_t column_no)
      : Error("line " + std::to_string(line_no) + ", column " + std::to_string(column_no) +
              ": " + message),
        line(line_no),
        column(column_no) {}
  std::size_t line;
  std::size_t column;
};

}  // namespace mop

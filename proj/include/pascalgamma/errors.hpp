#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pascalgamma {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// algebra-series
struct NotAUnit : Error { using Error::Error; };
struct CompositionDomain : Error { using Error::Error; };
struct ReversionDomain : Error { using Error::Error; };
struct ExpDomain : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// riordan-triangles
struct OrderTooLow : Error { using Error::Error; };
struct UnsupportedKind : Error { using Error::Error; };
struct InvalidSpec : Error { using Error::Error; };

// gamma-engine
struct IndexError : Error { using Error::Error; };

struct NotReciprocal : Error {
  NotReciprocal(std::size_t row, const std::string& what)
      : Error(what), row_(row) {}
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

// transforms-cf
struct FieldRequired : Error { using Error::Error; };
struct InsufficientDepth : Error { using Error::Error; };
struct NotJFraction : Error { using Error::Error; };

}  // namespace pascalgamma

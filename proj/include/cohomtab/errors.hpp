#pragma once

#include <stdexcept>
#include <string>

namespace cohomtab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A table position (i, d) was requested that neither the window nor the
// tail metadata covers.
class OutOfWindow : public Error {
 public:
  OutOfWindow(int row, int degree)
      : Error("position (" + std::to_string(row) + "," + std::to_string(degree) +
              ") is outside the table window and not covered by a tail"),
        row_(row),
        degree_(degree) {}
  OutOfWindow(int row, int degree, const std::string& what)
      : Error(what), row_(row), degree_(degree) {}

  int row() const noexcept { return row_; }
  int degree() const noexcept { return degree_; }

 private:
  int row_;
  int degree_;
};

// The decomposition needs a position the window does not cover.
class WindowExhausted : public OutOfWindow {
 public:
  WindowExhausted(int row, int degree, const std::string& why)
      : OutOfWindow(row, degree,
                    "window exhausted at (" + std::to_string(row) + "," +
                        std::to_string(degree) + "): " + why) {}
};

class UnboundedRow : public Error {
 public:
  explicit UnboundedRow(int row)
      : Error("row " + std::to_string(row) +
              " has no known support supremum (nonzero at the window edge "
              "without tail metadata)"),
        row_(row) {}
  int row() const noexcept { return row_; }

 private:
  int row_;
};

class NotPolynomial : public Error {
 public:
  using Error::Error;
};

class IndexRange : public Error {
 public:
  using Error::Error;
};

class UnsupportedWindow : public Error {
 public:
  using Error::Error;
};

}  // namespace cohomtab

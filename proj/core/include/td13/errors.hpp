#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace td13 {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedLabel : public Error {
 public:
  using Error::Error;
};

class MalformedPath : public Error {
 public:
  using Error::Error;
};

/// "0" and "01" are not the v2/v3 corner of any rhombus.
class RootEdgeVertex : public Error {
 public:
  using Error::Error;
};

class NotAnEdge : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Graph input errors.
class InputError : public Error {
 public:
  using Error::Error;
};

class BadOrder : public InputError {
 public:
  using InputError::InputError;
};

class DuplicateEdge : public InputError {
 public:
  using InputError::InputError;
};

class CrossingChords : public InputError {
 public:
  CrossingChords(std::string what, int a, int b, int c, int d)
      : InputError(std::move(what)), first_{a, b}, second_{c, d} {}

  std::pair<int, int> first() const { return first_; }
  std::pair<int, int> second() const { return second_; }

 private:
  std::pair<int, int> first_;
  std::pair<int, int> second_;
};

class TooSmall : public InputError {
 public:
  using InputError::InputError;
};

class BaseEdgeNotOnOuterFace : public InputError {
 public:
  using InputError::InputError;
};

class RetryBudgetExhausted : public Error {
 public:
  RetryBudgetExhausted(std::string what, std::string failing_check, double min_separation)
      : Error(std::move(what)),
        failing_check_(std::move(failing_check)),
        min_separation_(min_separation) {}

  const std::string& failing_check() const { return failing_check_; }
  double min_separation() const { return min_separation_; }

 private:
  std::string failing_check_;
  double min_separation_;
};

/// An edge length that matches none of the predicted values a, a|x_i - 1|.
class UnexpectedLength : public Error {
 public:
  UnexpectedLength(std::string what, double length) : Error(std::move(what)), length_(length) {}
  double length() const { return length_; }

 private:
  double length_;
};

}  // namespace td13

#ifndef FROBDIAM_ERRORS_HPP
#define FROBDIAM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frobdiam
{

class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// Group order, degree or conductor beyond the configured limits.
class DeskScaleExceeded : public Error
{
public:
  using Error::Error;
};

class InvalidPermutation : public Error
{
public:
  using Error::Error;
};

class ConductorOverflow : public Error
{
public:
  using Error::Error;
};

class ArithmeticOverflow : public Error
{
public:
  using Error::Error;
};

class NotCoprime : public Error
{
public:
  using Error::Error;
};

class NotRational : public Error
{
public:
  using Error::Error;
};

// Raised when a computed object fails one of its own consistency checks.
class InternalInconsistency : public Error
{
public:
  using Error::Error;
};

class NotProper : public Error
{
public:
  using Error::Error;
};

class InvalidSpec : public Error
{
public:
  using Error::Error;
};

class ParseError : public Error
{
public:
  ParseError(std::string const &what, std::size_t line, std::size_t column)
  : Error(what + " (line " + std::to_string(line) + ", column " +
          std::to_string(column) + ")"),
    _line(line), _column(column)
  {}

  std::size_t line() const { return _line; }
  std::size_t column() const { return _column; }

private:
  std::size_t _line;
  std::size_t _column;
};

} // namespace frobdiam

#endif // FROBDIAM_ERRORS_HPP

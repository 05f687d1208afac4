#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cqda {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
  public:
    SyntaxError(std::string const& message, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          m_line(line),
          m_column(column)
    {}

    std::size_t line() const { return m_line; }
    std::size_t column() const { return m_column; }

  private:
    std::size_t m_line;
    std::size_t m_column;
};

class SelfJoinError : public Error {
    using Error::Error;
};

class RepeatedVariableError : public Error {
    using Error::Error;
};

class UnknownRelation : public Error {
    using Error::Error;
};

class ArityMismatch : public Error {
    using Error::Error;
};

class InvalidDatabase : public Error {
    using Error::Error;
};

class InvalidQuery : public Error {
    using Error::Error;
};

class InvalidOrder : public Error {
    using Error::Error;
};

class OutOfRange : public Error {
    using Error::Error;
};

/// An enumeration exceeded its configured state cap.
class BudgetExceeded : public Error {
    using Error::Error;
};

class VertexNotFound : public Error {
    using Error::Error;
};

class Uncoverable : public Error {
    using Error::Error;
};

class NotAPrefix : public Error {
    using Error::Error;
};

class NotFreeConnex : public Error {
    using Error::Error;
};

class CycleDetected : public Error {
    using Error::Error;
};

class RankOutOfDomain : public Error {
    using Error::Error;
};

class TooLarge : public Error {
    using Error::Error;
};

class Unsatisfiable : public Error {
    using Error::Error;
};

class InvalidCircuit : public Error {
    using Error::Error;
};

}  // namespace cqda

#ifndef PUE_ERRORS_HPP
#define PUE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pue {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotAPrimePower : public Error { public: using Error::Error; };
class DivisionByZero : public Error { public: using Error::Error; };
class RankDeficient : public Error { public: using Error::Error; };
class BudgetExceeded : public Error { public: using Error::Error; };
class NonIntegerResult : public Error { public: using Error::Error; };
class DimensionMismatch : public Error { public: using Error::Error; };
class DomainError : public Error { public: using Error::Error; };
class ParameterError : public Error { public: using Error::Error; };
class NotFullSupport : public Error { public: using Error::Error; };

/// Malformed matrix file. Line and column are 1-based; column 0 means the whole line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("line " + std::to_string(line) + (column ? ", column " + std::to_string(column) : std::string())
                + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace pue

#endif  // PUE_ERRORS_HPP

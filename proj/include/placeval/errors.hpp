#pragma once

#include <stdexcept>
#include <string>

namespace placeval {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed file content. Coordinates are 1-based file positions.
struct ParseError : Error {
    int row = 0;
    int col = 0;
    ParseError(const std::string& msg, int row_, int col_)
        : Error(msg + " (row " + std::to_string(row_) + ", col " + std::to_string(col_) + ")"),
          row(row_), col(col_) {}
};

// Structurally valid input that violates a data invariant.
struct ValidationError : Error {
    int year = 0;
    std::string unit;
    explicit ValidationError(const std::string& msg) : Error(msg) {}
    ValidationError(const std::string& msg, int year_, std::string unit_)
        : Error(msg + " (year " + std::to_string(year_) + ", unit " + unit_ + ")"),
          year(year_), unit(std::move(unit_)) {}
};

// Value outside the mathematical domain of an operation.
struct DomainError : Error {
    int year = 0;
    std::string unit;
    std::string column;
    DomainError(const std::string& msg, int year_, std::string unit_, std::string column_)
        : Error(msg + " (year " + std::to_string(year_) + ", unit " + unit_ + ", column " +
                column_ + ")"),
          year(year_), unit(std::move(unit_)), column(std::move(column_)) {}
};

// Caller passed arguments violating a precondition.
struct ArgumentError : Error {
    explicit ArgumentError(const std::string& msg) : Error(msg) {}
};

// Design matrix is rank deficient.
struct RankError : Error {
    explicit RankError(const std::string& msg) : Error(msg) {}
};

// Control-group search produced no usable model.
struct SelectionError : Error {
    explicit SelectionError(const std::string& msg) : Error(msg) {}
};

// I/O failure while reading or writing a file.
struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace placeval

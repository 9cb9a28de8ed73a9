#ifndef MDSI_ERRORS_HPP
#define MDSI_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mdsi {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File could not be opened or read.
class IoError : public Error {
public:
    using Error::Error;
};

/// File content is not a decodable image.
class DecodeError : public Error {
public:
    using Error::Error;
};

/// Two images or planes that must share dimensions do not.
class ShapeMismatch : public Error {
public:
    using Error::Error;
};

/// An operation would produce an empty grid.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A reduction was asked to pool zero samples.
class EmptyInput : public Error {
public:
    using Error::Error;
};

/// Paired vectors of different lengths.
class LengthMismatch : public Error {
public:
    using Error::Error;
};

/// Input carries no usable signal (constant vector, zero variance).
class DegenerateInput : public Error {
public:
    using Error::Error;
};

/// Curve fit produced no finite solution from any restart.
class FitDiverged : public Error {
public:
    using Error::Error;
};

/// Manifest line could not be parsed; line() is 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Manifest header lacks a required column.
class MissingColumn : public Error {
public:
    using Error::Error;
};

/// Grouping requested on entries without a distortion label.
class MissingLabel : public Error {
public:
    using Error::Error;
};

} // namespace mdsi

#endif

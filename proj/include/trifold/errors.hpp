#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trifold {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Layer arithmetic produced a sum outside the two admissible values.
class MalformedLayer : public Error {
public:
    using Error::Error;
};

class OutOfRegion : public Error {
public:
    using Error::Error;
};

class IncompatibleSequences : public Error {
public:
    using Error::Error;
};

class OrientationMismatch : public Error {
public:
    using Error::Error;
};

class SeamConflict : public Error {
public:
    using Error::Error;
};

class NotTriangular : public Error {
public:
    using Error::Error;
};

/// The tiling window is not a valid folding tiling.
class Inconsistent : public Error {
public:
    using Error::Error;
};

/// The window does not carry enough local information.
class Undecidable : public Error {
public:
    using Error::Error;
};

class WindowTooSmall : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace trifold

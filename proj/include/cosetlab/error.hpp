#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cosetlab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegreeMismatch : public Error {
public:
    using Error::Error;
};

class OrderMismatch : public Error {
public:
    using Error::Error;
};

class MemoryCapExceeded : public Error {
public:
    using Error::Error;
};

// Raised when a class or decomposition outgrows its element cap.
class CapExceeded : public Error {
public:
    CapExceeded(const std::string& what, std::size_t reached)
        : Error(what + " (reached " + std::to_string(reached) + ")"), reached_(reached) {}
    std::size_t reached() const { return reached_; }

private:
    std::size_t reached_;
};

class NotInGroup : public Error {
public:
    using Error::Error;
};

class Unsupported : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class GatedDataMissing : public Error {
public:
    using Error::Error;
};

class ChecksumMismatch : public Error {
public:
    using Error::Error;
};

class VerificationFailure : public Error {
public:
    using Error::Error;
};

}  // namespace cosetlab

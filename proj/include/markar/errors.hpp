#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace markar {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SingularMatrix : public Error {
public:
    SingularMatrix() : Error("matrix is singular") {}
};

class DegenerateAxis : public Error {
public:
    DegenerateAxis() : Error("rotation axis has zero length") {}
};

class DegenerateVector : public Error {
public:
    DegenerateVector() : Error("cannot normalize a zero-length vector") {}
};

class NonPositiveScale : public Error {
public:
    NonPositiveScale() : Error("scale factor must be positive") {}
};

class OutOfRange : public Error {
public:
    using Error::Error;
};

class QueueFull : public Error {
public:
    QueueFull() : Error("input event queue is full") {}
};

class InvalidEvent : public Error {
public:
    using Error::Error;
};

class NoPoseYet : public Error {
public:
    NoPoseYet() : Error("inspection mode needs a visible marker pose first") {}
};

class EmptyModel : public Error {
public:
    EmptyModel() : Error("model contains no faces") {}
};

class UnknownPart : public Error {
public:
    explicit UnknownPart(const std::string& name) : Error("unknown part: " + name) {}
};

class OutOfViewport : public Error {
public:
    OutOfViewport() : Error("screen point lies outside the viewport") {}
};

// Malformed input file or line. `line` is 1-based; 0 when the error is not
// tied to a particular line (e.g. unreadable file).
class ParseError : public Error {
public:
    ParseError(std::string source, std::size_t line, const std::string& what)
        : Error(source + (line ? ":" + std::to_string(line) : std::string()) + ": " + what),
          source_(std::move(source)),
          line_(line) {}

    const std::string& source() const noexcept { return source_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::string source_;
    std::size_t line_;
};

}  // namespace markar

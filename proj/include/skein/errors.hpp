#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skein {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Two values built over different triangulations were combined.
class ContextMismatch : public Error {
public:
    ContextMismatch() : Error("colorings belong to different triangulations") {}
};

/// Residues with different moduli were combined.
class ModulusMismatch : public Error {
public:
    ModulusMismatch() : Error("residues have different moduli") {}
};

/// Curve tracing was requested on a triangulation with a folded triangle.
class FoldedUnsupported : public Error {
public:
    explicit FoldedUnsupported(int triangle)
        : Error("triangle " + std::to_string(triangle) +
                " is folded; arc tracing is not defined for folded triangles"),
          triangle_(triangle) {}
    int triangle() const { return triangle_; }

private:
    int triangle_;
};

/// Malformed input file; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

} // namespace skein

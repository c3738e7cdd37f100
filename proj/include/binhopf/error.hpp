#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace binhopf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal vertex of a supposedly full binary tree has the wrong arity.
class MalformedTree : public Error {
public:
    using Error::Error;
};

/// A contraction input has a vertex with more than two children.
class NonBinaryInput : public Error {
public:
    using Error::Error;
};

class BadLabel : public Error {
public:
    using Error::Error;
};

/// A leaf, edge or component index is out of range.
class BadIndex : public Error {
public:
    using Error::Error;
};

/// A computation was refused because its size exceeds the configured bound.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

/// Text input does not match the tree / forest / combination grammar.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position)
    {
    }

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace binhopf

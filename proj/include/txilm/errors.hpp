#pragma once

#include <stdexcept>
#include <string>

namespace txilm {

/** Base class for every error raised by the library. */
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/** A caller passed a value outside an operation's domain. */
class InvalidInput : public Error {
public:
    using Error::Error;
};

/** Range query with lower >= upper. */
class InvalidRange : public Error {
public:
    using Error::Error;
};

/** Block content violates a block invariant (e.g. duplicate txids). */
class InvalidBlock : public Error {
public:
    using Error::Error;
};

/** Compact block or wire bytes that cannot be interpreted. */
class MalformedBlock : public Error {
public:
    using Error::Error;
};

} // namespace txilm

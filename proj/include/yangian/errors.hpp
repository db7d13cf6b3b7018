#pragma once

#include <stdexcept>
#include <string>

namespace yangian {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An arithmetic step that has no meaning, e.g. division by the zero Scalar.
class AlgebraError : public Error {
public:
    using Error::Error;
};

/// A computation needed a generator mode above the configured bound.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// A commutator needed during straightening is absent from the table.
class IncompletePresentation : public Error {
public:
    using Error::Error;
};

class NotNilpotent : public Error {
public:
    using Error::Error;
};

class SeriesError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace yangian

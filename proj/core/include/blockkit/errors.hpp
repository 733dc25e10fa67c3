#pragma once

#include <stdexcept>
#include <string>

namespace blockkit {

// Data-level failure: unreadable file, malformed row, broken referential
// integrity. Maps to CLI exit code 3.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A required schema field is missing or the schema itself is malformed.
class SchemaError : public DataError {
public:
    using DataError::DataError;
};

// Identifier or ground-truth bookkeeping is inconsistent (duplicate ids,
// missing id/entity columns).
class IntegrityError : public DataError {
public:
    using DataError::DataError;
};

// A row or value could not be parsed; message names the offending line.
class ParseError : public DataError {
public:
    using DataError::DataError;
};

// Invalid parameter or parameter combination. Maps to CLI exit code 4.
class ParamError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace blockkit

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jamesgeo {

enum class ErrorKind {
    InvalidInput,
    Precondition,
    Resource,
    UnsupportedInstance,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Base class for every error raised by the library. The kind is stable and
/// is what the command-line tool reports in its machine-readable error object.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class InvalidInput : public Error {
public:
    explicit InvalidInput(const std::string& what) : Error(ErrorKind::InvalidInput, what) {}
};

class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(ErrorKind::Precondition, what) {}
};

class ResourceError : public Error {
public:
    explicit ResourceError(const std::string& what) : Error(ErrorKind::Resource, what) {}
};

class UnsupportedInstance : public Error {
public:
    explicit UnsupportedInstance(const std::string& what)
        : Error(ErrorKind::UnsupportedInstance, what) {}
};

}  // namespace jamesgeo

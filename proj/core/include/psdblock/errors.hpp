#pragma once

#include <stdexcept>
#include <string>

namespace psdblock {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class NotSquareError : public Error {
public:
    explicit NotSquareError(const std::string& what) : Error(what) {}
};

class DimensionMismatchError : public Error {
public:
    explicit DimensionMismatchError(const std::string& what) : Error(what) {}
};

/// Caller passed a genuinely non-Hermitian matrix to hermitize().
class HermitianResidueError : public Error {
public:
    explicit HermitianResidueError(const std::string& what) : Error(what) {}
};

class NotPsdError : public Error {
public:
    explicit NotPsdError(const std::string& what) : Error(what) {}
};

class NotPdError : public Error {
public:
    explicit NotPdError(const std::string& what) : Error(what) {}
};

class EigensolverError : public Error {
public:
    explicit EigensolverError(const std::string& what) : Error(what) {}
};

class SvdError : public Error {
public:
    explicit SvdError(const std::string& what) : Error(what) {}
};

class InvalidArgumentError : public Error {
public:
    explicit InvalidArgumentError(const std::string& what) : Error(what) {}
};

class CommutationError : public Error {
public:
    explicit CommutationError(const std::string& what) : Error(what) {}
};

class SingularBlockError : public Error {
public:
    explicit SingularBlockError(const std::string& what) : Error(what) {}
};

class SearchExhaustedError : public Error {
public:
    explicit SearchExhaustedError(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace psdblock

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mgnef {

/** Base class for every error raised by the library. */
class Error : public std::runtime_error
{
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class NonSquareError : public Error
{
public:
    explicit NonSquareError(const std::string& what = "matrix is not square") : Error(what) {}
};

class IndexOutOfRangeError : public Error
{
public:
    explicit IndexOutOfRangeError(const std::string& what) : Error(what) {}
};

class GenusMismatchError : public Error
{
public:
    explicit GenusMismatchError(const std::string& what = "objects live on different genera") : Error(what) {}
};

/** Raised for g < 3 wherever the basis {lambda, delta_0, ...} is needed. */
class UnsupportedGenusError : public Error
{
public:
    explicit UnsupportedGenusError(const std::string& what) : Error(what) {}
};

class NegativeCoefficientError : public Error
{
public:
    explicit NegativeCoefficientError(const std::string& what) : Error(what) {}
};

class NotPointedError : public Error
{
public:
    explicit NotPointedError(const std::string& what = "cone has a nonzero lineality space") : Error(what) {}
};

class DimensionLimitExceededError : public Error
{
public:
    explicit DimensionLimitExceededError(const std::string& what) : Error(what) {}
};

class NotMemberError : public Error
{
public:
    explicit NotMemberError(const std::string& what) : Error(what) {}
};

class ModelMismatchError : public Error
{
public:
    explicit ModelMismatchError(const std::string& what) : Error(what) {}
};

/** Parse failure; position is a 0-based character offset into the input. */
class ParseError : public Error
{
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

} // namespace mgnef

#pragma once

#include <stdexcept>
#include <string>

namespace bspline {

/// Base class of every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Parameter outside the evaluable domain, or non-finite.
class DomainError : public Error
{
public:
    using Error::Error;
};

/// Knot vector is not non-decreasing, too short, or inconsistent with the degree.
class InvalidKnots : public Error
{
public:
    using Error::Error;
};

/// Operation needs a span of positive width.
class DegenerateSpan : public Error
{
public:
    using Error::Error;
};

class SizeError : public Error
{
public:
    using Error::Error;
};

class IndexError : public Error
{
public:
    using Error::Error;
};

class DegreeTooLarge : public Error
{
public:
    using Error::Error;
};

/// Malformed argument that does not fit any of the categories above.
class InvalidArgument : public Error
{
public:
    using Error::Error;
};

} // namespace bspline

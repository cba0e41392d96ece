#pragma once

#include <stdexcept>
#include <string>

namespace arcmodel {

// Base class for domain errors. The CLI maps these to exit code 1 and
// syntax/parse failures (ParseError) to exit code 2.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class DegenerateArc : public Error {
  public:
    using Error::Error;
};

class InvalidArc : public Error {
  public:
    using Error::Error;
};

class NoMorphism : public Error {
  public:
    using Error::Error;
};

class NoExtension : public Error {
  public:
    using Error::Error;
};

class NotSaturated : public Error {
  public:
    using Error::Error;
};

class NotMinimal : public Error {
  public:
    using Error::Error;
};

class EmptySet : public Error {
  public:
    using Error::Error;
};

class OverlappingBlocks : public Error {
  public:
    using Error::Error;
};

class CrossingBlocks : public Error {
  public:
    using Error::Error;
};

class ResourceLimit : public Error {
  public:
    using Error::Error;
};

class WindowTooSmall : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    using Error::Error;
};

} // namespace arcmodel

#pragma once

#include <stdexcept>
#include <string>

namespace exotic {

/// Base of every error the library raises on purpose.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Invalid input or an unsatisfiable request (CLI exit code 1).
class DomainError : public Error {
  public:
    using Error::Error;
};

/// A computed result contradicts a proven identity; always an implementation bug (CLI exit code 2).
class InternalError : public Error {
  public:
    using Error::Error;
};

/// A partition that should be of the form lambda ∪ lambda is not.
class NotDoubled : public DomainError {
  public:
    using DomainError::DomainError;
};

/// The adapted-filtration search exhausted its closure depth.
class NotFound : public DomainError {
  public:
    using DomainError::DomainError;
};

/// More than one adapted filtration was found.
class NotUnique : public InternalError {
  public:
    using InternalError::InternalError;
};

/// An orbit representative failed to classify back to its bipartition.
class SelfCheckFailed : public InternalError {
  public:
    using InternalError::InternalError;
};

} // namespace exotic

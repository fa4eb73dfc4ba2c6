#ifndef QSL2Q_ERRORS_HPP
#define QSL2Q_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qsl2q {

// Base for all library errors so callers can catch the whole family at once.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NonFiniteError : public Error {
 public:
  using Error::Error;
};

class NonHermitianError : public Error {
 public:
  using Error::Error;
};

class NotPsdError : public Error {
 public:
  using Error::Error;
};

class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

class OutOfDomainError : public Error {
 public:
  using Error::Error;
};

class NegativeVarianceError : public Error {
 public:
  using Error::Error;
};

class NegativeRadicandError : public Error {
 public:
  using Error::Error;
};

class UnorderedEigenvaluesError : public Error {
 public:
  using Error::Error;
};

class StationaryError : public Error {
 public:
  using Error::Error;
};

class BothDegenerateError : public Error {
 public:
  using Error::Error;
};

class InsufficientSamplesError : public Error {
 public:
  using Error::Error;
};

}  // namespace qsl2q

#endif  // QSL2Q_ERRORS_HPP

#pragma once

#include <stdexcept>
#include <string>

namespace refdist {

/// Bad or inconsistent input data. The CLI maps these to exit status 1.
class InputError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A computation that cannot produce a meaningful answer. Exit status 2.
class NumericalError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class DegenerateSymmetricError : public NumericalError
{
public:
  using NumericalError::NumericalError;
};

class LeftSkewUnsupportedError : public NumericalError
{
public:
  using NumericalError::NumericalError;
};

class EmptyHistogramError : public InputError
{
public:
  using InputError::InputError;
};

class InitError : public NumericalError
{
public:
  using NumericalError::NumericalError;
};

class BandwidthError : public NumericalError
{
public:
  using NumericalError::NumericalError;
};

class RangeError : public InputError
{
public:
  using InputError::InputError;
};

class SupportError : public NumericalError
{
public:
  using NumericalError::NumericalError;
};

class InsufficientDataError : public InputError
{
public:
  using InputError::InputError;
};

class MissingPredictionError : public InputError
{
public:
  using InputError::InputError;
};

class EmptyCohortError : public NumericalError
{
public:
  using NumericalError::NumericalError;
};

} // namespace refdist

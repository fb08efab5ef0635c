#pragma once

#include <stdexcept>
#include <string>

namespace hardychain {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Flat table has the wrong number of entries for the scenario.
struct WrongLength : Error {
  using Error::Error;
};

/// A probability entry is negative beyond the clamping band.
struct NegativeEntry : Error {
  using Error::Error;
};

/// A setting-pair block does not sum to one within tolerance.
struct NotNormalized : Error {
  using Error::Error;
};

/// Setting index outside 0..K.
struct SettingOutOfRange : Error {
  using Error::Error;
};

/// Numeric argument outside the operation's domain.
struct DomainError : Error {
  using Error::Error;
};

/// Requested size exceeds the enumeration or exact-arithmetic budget.
struct BudgetExceeded : Error {
  using Error::Error;
};

/// An evaluation denominator is too close to zero.
struct PoleError : Error {
  using Error::Error;
};

/// Sampling requested with zero shots.
struct ZeroShots : Error {
  using Error::Error;
};

/// The certificate construction did not reduce to zero; indicates a bug.
struct DerivationFailed : Error {
  using Error::Error;
};

}  // namespace hardychain

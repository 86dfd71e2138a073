#pragma once

#include <stdexcept>
#include <string>

namespace rackregen {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Config document does not match the schema (missing field, wrong type).
class SchemaError : public Error {
 public:
  using Error::Error;
};

// Config parses but violates an invariant; the message names it.
class InvalidConfig : public Error {
 public:
  using Error::Error;
};

class NotTwoRack : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class EmptyIncome : public Error {
 public:
  using Error::Error;
};

class EmptyCoeffList : public Error {
 public:
  using Error::Error;
};

// beta_e below the MBR knee: no feasible alpha exists there.
class BelowMbr : public Error {
 public:
  using Error::Error;
};

class InvalidModelParams : public Error {
 public:
  using Error::Error;
};

// A closed-form cross-check that is required to hold did not.
class ClosedFormMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionUnmet : public Error {
 public:
  using Error::Error;
};

class InvalidScenario : public Error {
 public:
  using Error::Error;
};

class Disconnected : public Error {
 public:
  using Error::Error;
};

class EnumerationTooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace rackregen

// Error taxonomy shared by the whole library.  Every throw site picks one of
// the named clauses below; the CLI maps the clause name into its structured
// stderr output, so the names are part of the wire format and must not drift.
#pragma once

#include <stdexcept>
#include <string>

namespace cyclotome {

enum class Errc {
  NotPrime,
  SizeBudgetExceeded,
  DivisionByZero,
  MixedFields,
  ZeroElement,
  InvalidSubfield,
  NotCoprime,
  EvenModulus,
  OutOfRange,
  SearchBudgetExceeded,
  NotCosetClosed,
  NotSquareField,
  LengthMismatch,
  FieldMismatch,
  ZeroCode,
  NotSubcode,
  DualNotContained,
  NotHermitianSelfOrthogonal,
  OrderNotOdd,
  NoSplitting,
  LemmaFiveExcluded,
  InvalidParameters,
  PreconditionFailed,
  Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code),
        detail_(std::move(detail)) {}

  Errc code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

[[noreturn]] inline void fail(Errc code, std::string detail) {
  throw Error(code, std::move(detail));
}

}  // namespace cyclotome

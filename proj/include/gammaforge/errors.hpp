#ifndef GAMMAFORGE_ERRORS_HPP
#define GAMMAFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gammaforge {

// Every failure mode the library can report. The CLI maps each kind to a
// machine-readable string, so additions here must be mirrored in errcName().
enum class Errc {
  RingMismatch,
  ModulusInvalid,
  NotIntegral,
  NotPrime,
  UnsupportedRing,
  BasisMismatch,
  EmptyIndex,
  SpecMismatch,
  NotInAugmentationIdeal,
  NotDegreeOne,
  ImageNotInIdeal,
  EmptyQuotientBasis,
  BudgetExceeded,
  PartitionInvalid,
  NotHomogeneous,
  KernelNotStable,
  AlgebraMismatch,
  ExtensionMismatch,
  NotRationalAlgebra,
  MalformedInput,
  UsageError,
  Count_  // sentinel, keep last
};

const char* errcName(Errc kind) noexcept;

class Error : public std::runtime_error {
public:
  Error(Errc kind, const std::string& detail)
      : std::runtime_error(std::string(errcName(kind)) + ": " + detail),
        kind_(kind),
        detail_(detail) {}

  Errc kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

private:
  Errc kind_;
  std::string detail_;
};

[[noreturn]] inline void fail(Errc kind, const std::string& detail) {
  throw Error(kind, detail);
}

}  // namespace gammaforge

#endif

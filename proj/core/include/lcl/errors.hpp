#pragma once

#include <stdexcept>
#include <string>

namespace lcl {

enum class Errc {
  DanglingReference,
  OpenFaceWalk,
  PinchedFace,
  OverusedEdge,
  DuplicateCoordinate,
  UnknownFace,
  UnknownPoint,
  SubsetNotContained,
  NotLcl,
  NonContiguousNeighborhood,
  CliqueBudgetExceeded,
  SizeCapExceeded,
  PreconditionFailed,
  NotAManifold,
  TooSmall,
  DensityTooFine,
  UnresolvableCollision,
  BadMagic,
  TruncatedData,
  ValueOutOfRange,
  BadFormat,
  PipelineInvariantBroken,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace lcl

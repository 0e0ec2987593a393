#include "lcl/errors.hpp"

namespace lcl {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DanglingReference: return "DanglingReference";
    case Errc::OpenFaceWalk: return "OpenFaceWalk";
    case Errc::PinchedFace: return "PinchedFace";
    case Errc::OverusedEdge: return "OverusedEdge";
    case Errc::DuplicateCoordinate: return "DuplicateCoordinate";
    case Errc::UnknownFace: return "UnknownFace";
    case Errc::UnknownPoint: return "UnknownPoint";
    case Errc::SubsetNotContained: return "SubsetNotContained";
    case Errc::NotLcl: return "NotLcl";
    case Errc::NonContiguousNeighborhood: return "NonContiguousNeighborhood";
    case Errc::CliqueBudgetExceeded: return "CliqueBudgetExceeded";
    case Errc::SizeCapExceeded: return "SizeCapExceeded";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::NotAManifold: return "NotAManifold";
    case Errc::TooSmall: return "TooSmall";
    case Errc::DensityTooFine: return "DensityTooFine";
    case Errc::UnresolvableCollision: return "UnresolvableCollision";
    case Errc::BadMagic: return "BadMagic";
    case Errc::TruncatedData: return "TruncatedData";
    case Errc::ValueOutOfRange: return "ValueOutOfRange";
    case Errc::BadFormat: return "BadFormat";
    case Errc::PipelineInvariantBroken: return "PipelineInvariantBroken";
  }
  return "UnknownError";
}

}  // namespace lcl

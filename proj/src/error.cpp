#include "sefe/error.hpp"

namespace sefe {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPlanarInput: return "NonPlanarInput";
    case ErrorCode::MalformedEdge: return "MalformedEdge";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::CommonGraphNotCycles: return "CommonGraphNotCycles";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::NotACutvertex: return "NotACutvertex";
    case ErrorCode::NotBiconnected: return "NotBiconnected";
    case ErrorCode::NotVirtual: return "NotVirtual";
    case ErrorCode::CycleNotInBlock: return "CycleNotInBlock";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::EdgeNotExclusive: return "EdgeNotExclusive";
    case ErrorCode::SameComponent: return "SameComponent";
    case ErrorCode::UnionDisconnected: return "UnionDisconnected";
    case ErrorCode::PreprocessingRequired: return "PreprocessingRequired";
    case ErrorCode::ConstraintViolation: return "ConstraintViolation";
    case ErrorCode::CycleFamilyMismatch: return "CycleFamilyMismatch";
    case ErrorCode::EmbeddingConflict: return "EmbeddingConflict";
    case ErrorCode::CycleNotEmbedded: return "CycleNotEmbedded";
    case ErrorCode::UnsupportedComponent: return "UnsupportedComponent";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

}  // namespace sefe

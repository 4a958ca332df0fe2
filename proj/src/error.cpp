#include "chordarea/error.hpp"

namespace chordarea {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::DegenerateInput: return "DegenerateInput";
        case ErrorCode::PointOnCurve: return "PointOnCurve";
        case ErrorCode::LineHitsCurve: return "LineHitsCurve";
        case ErrorCode::PointOnSurface: return "PointOnSurface";
        case ErrorCode::RayDegenerate: return "RayDegenerate";
        case ErrorCode::InsufficientSamples: return "InsufficientSamples";
        case ErrorCode::OpenMesh: return "OpenMesh";
        case ErrorCode::NoAntipode: return "NoAntipode";
        case ErrorCode::AsymmetricRadial: return "AsymmetricRadial";
        case ErrorCode::NotConvex: return "NotConvex";
        case ErrorCode::NonPositiveInput: return "NonPositiveInput";
        case ErrorCode::InvalidSpec: return "InvalidSpec";
        case ErrorCode::AntipodeMismatch: return "AntipodeMismatch";
        case ErrorCode::MissingCalibration: return "MissingCalibration";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace chordarea

#pragma once

#include <stdexcept>
#include <string>

namespace chb {

// Base class for every domain error thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Ball-model input lies on or outside the unit sphere.
struct BallBoundary : Error {
    explicit BallBoundary(const std::string& msg) : Error(msg) {}
};

// Chart tangents are numerically dependent (normal undefined).
struct DegenerateChart : Error {
    explicit DegenerateChart(const std::string& msg) : Error(msg) {}
};

// Shape operator fails to be positive definite with the inward normal.
struct ConvexityViolation : Error {
    explicit ConvexityViolation(const std::string& msg) : Error(msg) {}
};

// Query point sits on the hypersurface itself.
struct OnSurface : Error {
    explicit OnSurface(const std::string& msg) : Error(msg) {}
};

// Billiard input is not in the exterior component.
struct NotExterior : Error {
    explicit NotExterior(const std::string& msg) : Error(msg) {}
};

// Newton multistart exhausted without meeting the residual target.
struct NoConvergence : Error {
    explicit NoConvergence(const std::string& msg) : Error(msg) {}
};

// Inversion converged to a tangency parameter below t_min.
struct TooCloseToSurface : Error {
    explicit TooCloseToSurface(const std::string& msg) : Error(msg) {}
};

// |det D_{-t}| too small to form H_t.
struct SingularDt : Error {
    explicit SingularDt(const std::string& msg) : Error(msg) {}
};

// 2D oracle input lies inside the disc.
struct InsideDisc : Error {
    explicit InsideDisc(const std::string& msg) : Error(msg) {}
};

// Adaptive ODE integration could not meet its tolerance.
struct StepFailure : Error {
    explicit StepFailure(const std::string& msg) : Error(msg) {}
};

// Malformed or inconsistent scene description.
struct SceneFormat : Error {
    explicit SceneFormat(const std::string& msg) : Error(msg) {}
};

}  // namespace chb

#pragma once

// Central registry of numerical tolerances and finite-difference steps.
// Every pinned threshold used by the library and its verification suite
// lives here so a change is visible in one place.

namespace chb::tol {

// --- geometric representation invariants -------------------------------
inline constexpr double kPointNormalization = 1e-12;  // |<z,z>+1| after construction
inline constexpr double kHorizontality      = 1e-12;  // |<base,vec>| for tangent vectors
inline constexpr double kPointEquality      = 1e-9;   // default distance for "same point"
inline constexpr double kDegenerateLog      = 1e-12;  // log returns zero below this distance
inline constexpr double kBallBoundary       = 1e-12;  // |b|^2 must stay below 1 - this

// --- hypersurface / scene ----------------------------------------------
inline constexpr double kSurfaceBand        = 1e-10;  // OnSurface detection width
inline constexpr double kConvexityEigen     = 1e-8;   // shape eigenvalues must exceed this
inline constexpr double kChartCondition     = 1e8;    // DegenerateChart above this cond number
inline constexpr double kFrameFallback      = 1e-6;   // adapted-frame reference rejection norm
inline constexpr double kShapeStep          = 1e-4;   // FD step for graph shape operator

// --- billiard inversion (Newton) ----------------------------------------
inline constexpr double kNewtonResidual     = 1e-11;  // convergence: |log_q F| below this
inline constexpr int    kNewtonMaxIter      = 50;
inline constexpr int    kMultistartCount    = 20;
inline constexpr double kTangencyTMin       = 1e-6;   // below this: TooCloseToSurface
inline constexpr double kSingularDt         = 1e-12;  // |det D_{-t}| floor for H_t

// --- finite-difference oracles ------------------------------------------
// Metric Hessian stencil; two Richardson levels push the truncation to O(h^6).
inline constexpr double kMetricStep         = 1e-3;
// First-derivative steps for Christoffel symbols and their derivatives are
// larger: the input already carries FD noise, and dividing by a small step
// would amplify it past the curvature tolerances.
inline constexpr double kGammaStep          = 1e-2;
inline constexpr double kCurvatureStep      = 2e-2;
inline constexpr double kJacobianStep       = 1e-5;   // fd Jacobians of F and B
inline constexpr double kOdeTolerance       = 1e-10;  // adaptive RK tolerance
// Jacobi-equation residual stencil: fourth-order, five points. h = 2e-3
// balances truncation against cancellation for fields as large as cosh(6).
inline constexpr double kJacobiStencilStep  = 2e-3;
inline constexpr double kVariationStep      = 1e-4;   // geodesic-variation derivatives

// --- dynamics -------------------------------------------------------------
inline constexpr double kPeriodicResidual   = 1e-10;  // fixed-point acceptance for B^k
inline constexpr double kPeriodicStep       = 1e-6;   // FD step for the B^k Jacobian
inline constexpr double kAreaDerivativeStep = 1e-5;   // d/ds of the cone edge field
inline constexpr int    kAreaQuadratureN    = 32;     // Gauss-Legendre points per axis

}  // namespace chb::tol

#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "mediagov/params.hpp"
#include "mediagov/payoff.hpp"
#include "mediagov/replicator.hpp"

namespace mediagov {

using Matrix4 = std::array<std::array<double, 4>, 4>;
using Eigenvalues4 = std::array<std::complex<double>, 4>;

/// Jacobian of the selection dynamics in coordinates (x1, x2, x3, y), with
/// x4 = 1 - x1 - x2 - x3 substituted before differentiation. Closed form
/// (the payoff block is affine in the state, so this is exact).
///
/// Stability analysis defaults to the Textbook form: the PaperExact form
/// linearises to a structural zero eigenvalue at every corner (along the
/// dominant user coordinate, and along y at y = 1), so corner stability
/// under it is decided by centre-manifold terms that a linear analysis
/// cannot see. The Textbook corner spectrum consists of the invasion payoff
/// differences and reproduces the known closed-form stability conditions.
Matrix4 jacobian(const PopulationState& s, const GameParams& p,
                 DynamicsForm form = DynamicsForm::Textbook);

/// Central finite-difference Jacobian of the same map; validation twin of
/// jacobian().
Matrix4 jacobian_fd(const PopulationState& s, const GameParams& p,
                    DynamicsForm form = DynamicsForm::Textbook, double fd_step = 1e-6);

/// Eigenvalues of a dense 4x4 real matrix, sorted by (real, imag) descending.
Eigenvalues4 eigenvalues(const Matrix4& m);

enum class Stability { Stable, Unstable, NonHyperbolic };

std::string_view to_string(Stability s);

/// Local stability report for one homogeneous corner.
/// closed_form_check is present only for the two corners with known
/// closed-form conditions, and only when the linearisation is hyperbolic:
///   (AllD, Unsafe): stable iff c_c > 0, c_u > 0, c_i + c_u (1-q) > 0
///   (AllC, Safe):   stable iff c_c < 0, b_u > 0, c_i + b_u (1-q) > 0
/// It records whether the eigenvalue classification agrees with the
/// condition.
struct EquilibriumReport {
  UserStrategy user = UserStrategy::AllD;
  CreatorStrategy creator = CreatorStrategy::Unsafe;
  PopulationState state;
  Eigenvalues4 eigs{};
  Stability classification = Stability::NonHyperbolic;
  std::optional<bool> closed_form_check;
};

/// Classification tolerance: Stable iff all Re(lambda) < -tol, Unstable iff
/// some Re(lambda) > +tol, NonHyperbolic otherwise.
inline constexpr double kHyperbolicTolerance = 1e-9;

bool defection_stability_condition(const GameParams& p);
bool cooperation_stability_condition(const GameParams& p);

EquilibriumReport classify_corner(UserStrategy u, CreatorStrategy c, const GameParams& p,
                                  DynamicsForm form = DynamicsForm::Textbook,
                                  double tol = kHyperbolicTolerance);

/// All 8 corners, user index major, creator index minor.
std::vector<EquilibriumReport> corner_census(const GameParams& p,
                                             DynamicsForm form = DynamicsForm::Textbook,
                                             double tol = kHyperbolicTolerance);

}  // namespace mediagov

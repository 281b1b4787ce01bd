#include "mediagov/equilibria.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace mediagov {

namespace {

// pi_i(y) = A_i y + B_i for the four user strategies.
void user_payoff_coeffs(const GameParams& p, double A[4], double B[4]) {
  A[0] = 0.0;
  B[0] = 0.0;
  A[1] = 0.5 * (p.b_u + p.c_u);
  B[1] = -0.5 * p.c_u;
  A[2] = p.q * p.b_u + (1.0 - p.q) * p.c_u;
  B[2] = -((1.0 - p.q) * p.c_u + p.c_i);
  A[3] = p.b_u + p.c_u;
  B[3] = -p.c_u;
}

// pi_C - pi_D = sum_j G_j x_j.
void creator_gap_coeffs(const GameParams& p, double G[4]) {
  G[0] = -p.c_c;
  G[1] = -p.c_c;
  G[2] = (2.0 * p.q - 1.0) * p.b_c - p.c_c;
  G[3] = -p.c_c;
}

}  // namespace

Matrix4 jacobian(const PopulationState& s, const GameParams& p, DynamicsForm form) {
  const double x1 = s.x[0], x2 = s.x[1], x3 = s.x[2], y = s.y;
  const double x4 = 1.0 - x1 - x2 - x3;
  const double x[4] = {x1, x2, x3, x4};
  double A[4], B[4], G[4];
  user_payoff_coeffs(p, A, B);
  creator_gap_coeffs(p, G);

  double pi[4], bar = 0.0, bar_dy = 0.0, gap = 0.0;
  for (int i = 0; i < 4; ++i) {
    pi[i] = A[i] * y + B[i];
    bar += x[i] * pi[i];
    bar_dy += x[i] * A[i];
    gap += G[i] * x[i];
  }

  Matrix4 j{};
  if (form == DynamicsForm::Textbook) {
    for (int i = 0; i < 3; ++i) {
      for (int col = 0; col < 3; ++col) {
        double v = -x[i] * (pi[col] - pi[3]);
        if (i == col) v += pi[i] - bar;
        j[i][col] = v;
      }
      j[i][3] = x[i] * (A[i] - bar_dy);
    }
    for (int col = 0; col < 3; ++col) j[3][col] = y * (1.0 - y) * (G[col] - G[3]);
    j[3][3] = (1.0 - 2.0 * y) * gap;
  } else {
    for (int i = 0; i < 3; ++i) {
      const double w = x[i] * (1.0 - x[i]);
      for (int col = 0; col < 3; ++col) {
        double v = -w * (pi[col] - pi[3]);
        if (i == col) v += (1.0 - 2.0 * x[i]) * (pi[i] - bar);
        j[i][col] = v;
      }
      j[i][3] = w * (A[i] - bar_dy);
    }
    const double om_y = 1.0 - y;
    for (int col = 0; col < 3; ++col) j[3][col] = y * om_y * om_y * (G[col] - G[3]);
    j[3][3] = (1.0 - 3.0 * y) * om_y * gap;
  }
  return j;
}

Matrix4 jacobian_fd(const PopulationState& s, const GameParams& p, DynamicsForm form,
                    double fd_step) {
  Matrix4 j{};
  for (int col = 0; col < 4; ++col) {
    PopulationState hi = s, lo = s;
    if (col < 3) {
      hi.x[col] += fd_step;
      lo.x[col] -= fd_step;
    } else {
      hi.y += fd_step;
      lo.y -= fd_step;
    }
    const auto f_hi = derivatives(hi, p, form);
    const auto f_lo = derivatives(lo, p, form);
    for (int row = 0; row < 4; ++row) {
      j[row][col] = (f_hi[row] - f_lo[row]) / (2.0 * fd_step);
    }
  }
  return j;
}

Eigenvalues4 eigenvalues(const Matrix4& m) {
  Eigen::Matrix4d em;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) em(r, c) = m[r][c];
  }
  Eigen::EigenSolver<Eigen::Matrix4d> solver(em, /*computeEigenvectors=*/false);
  Eigenvalues4 out;
  for (int i = 0; i < 4; ++i) out[i] = solver.eigenvalues()(i);
  std::sort(out.begin(), out.end(), [](const std::complex<double>& a, const std::complex<double>& b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  return out;
}

std::string_view to_string(Stability s) {
  switch (s) {
    case Stability::Stable: return "stable";
    case Stability::Unstable: return "unstable";
    case Stability::NonHyperbolic: return "non_hyperbolic";
  }
  return "?";
}

bool defection_stability_condition(const GameParams& p) {
  return p.c_c > 0.0 && p.c_u > 0.0 && p.c_i + p.c_u * (1.0 - p.q) > 0.0;
}

bool cooperation_stability_condition(const GameParams& p) {
  return p.c_c < 0.0 && p.b_u > 0.0 && p.c_i + p.b_u * (1.0 - p.q) > 0.0;
}

EquilibriumReport classify_corner(UserStrategy u, CreatorStrategy c, const GameParams& p,
                                  DynamicsForm form, double tol) {
  EquilibriumReport r;
  r.user = u;
  r.creator = c;
  r.state = corner_state(u, c);
  r.eigs = eigenvalues(jacobian(r.state, p, form));

  bool any_positive = false, any_center = false;
  for (const auto& e : r.eigs) {
    if (e.real() > tol) any_positive = true;
    else if (e.real() >= -tol) any_center = true;
  }
  if (any_positive) r.classification = Stability::Unstable;
  else if (any_center) r.classification = Stability::NonHyperbolic;
  else r.classification = Stability::Stable;

  const bool is_defection_corner = u == UserStrategy::AllD && c == CreatorStrategy::Unsafe;
  const bool is_cooperation_corner = u == UserStrategy::AllC && c == CreatorStrategy::Safe;
  if ((is_defection_corner || is_cooperation_corner) &&
      r.classification != Stability::NonHyperbolic) {
    const bool condition = is_defection_corner ? defection_stability_condition(p)
                                               : cooperation_stability_condition(p);
    r.closed_form_check = (r.classification == Stability::Stable) == condition;
  }
  return r;
}

std::vector<EquilibriumReport> corner_census(const GameParams& p, DynamicsForm form,
                                             double tol) {
  std::vector<EquilibriumReport> out;
  out.reserve(8);
  for (UserStrategy u : kAllUserStrategies) {
    for (CreatorStrategy c : kAllCreatorStrategies) {
      out.push_back(classify_corner(u, c, p, form, tol));
    }
  }
  return out;
}

}  // namespace mediagov

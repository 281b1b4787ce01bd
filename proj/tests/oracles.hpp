// Independent oracles, hand-coded from the game definition and kept free of
// any include of the implementation's formulas: the payoff matrix written
// out cell by cell, and the selection-dynamics right-hand side rebuilt on
// top of it. Tests compare the library against these.
#pragma once

#include <array>
#include <cmath>
#include <cstdint>

#include "mediagov/params.hpp"
#include "mediagov/payoff.hpp"
#include "mediagov/replicator.hpp"
#include "mediagov/rng.hpp"

namespace oracle {

struct Cell {
  double user;
  double creator;
};

// rows: creator 0=Unsafe 1=Safe; cols: user 0=AllD 1=BMedia 2=GMedia 3=AllC
inline std::array<std::array<Cell, 4>, 2> payoff_matrix(const mediagov::GameParams& p) {
  std::array<std::array<Cell, 4>, 2> m{};
  m[0][0] = {0.0, 0.0};
  m[0][1] = {-0.5 * p.c_u, 0.5 * p.b_c};
  m[0][2] = {-(1.0 - p.q) * p.c_u - p.c_i, (1.0 - p.q) * p.b_c};
  m[0][3] = {-p.c_u, p.b_c};
  m[1][0] = {0.0, -p.c_c};
  m[1][1] = {0.5 * p.b_u, 0.5 * p.b_c - p.c_c};
  m[1][2] = {p.q * p.b_u - p.c_i, p.q * p.b_c - p.c_c};
  m[1][3] = {p.b_u, p.b_c - p.c_c};
  return m;
}

// Selection dynamics rebuilt from the payoff matrix: expected payoffs are
// the creator-frequency (resp. user-frequency) weighted matrix entries.
inline std::array<double, 4> rhs(const mediagov::PopulationState& s,
                                 const mediagov::GameParams& p, mediagov::DynamicsForm form) {
  const auto m = payoff_matrix(p);
  const double y = s.y;
  const double x[4] = {s.x[0], s.x[1], s.x[2], 1.0 - s.x[0] - s.x[1] - s.x[2]};

  double pi_user[4];
  for (int u = 0; u < 4; ++u) pi_user[u] = (1.0 - y) * m[0][u].user + y * m[1][u].user;
  double bar_user = 0.0;
  for (int u = 0; u < 4; ++u) bar_user += x[u] * pi_user[u];

  double pi_d = 0.0, pi_c = 0.0;
  for (int u = 0; u < 4; ++u) {
    pi_d += x[u] * m[0][u].creator;
    pi_c += x[u] * m[1][u].creator;
  }

  std::array<double, 4> out{};
  if (form == mediagov::DynamicsForm::PaperExact) {
    for (int i = 0; i < 3; ++i) out[i] = x[i] * (1.0 - x[i]) * (pi_user[i] - bar_user);
    const double bar_creator = y * pi_c + (1.0 - y) * pi_d;
    out[3] = y * (1.0 - y) * (pi_c - bar_creator);
  } else {
    for (int i = 0; i < 3; ++i) out[i] = x[i] * (pi_user[i] - bar_user);
    out[3] = y * (1.0 - y) * (pi_c - pi_d);
  }
  return out;
}

inline mediagov::GameParams random_params(mediagov::Rng& rng) {
  mediagov::GameParams p;
  p.b_u = 2.0 * rng.uniform01();
  p.c_u = 2.0 * rng.uniform01();
  p.b_c = 2.0 * rng.uniform01();
  p.c_c = 2.0 * rng.uniform01() - 1.0;  // either sign
  p.c_i = 2.0 * rng.uniform01();
  p.q = rng.uniform01();
  return p;
}

inline mediagov::PopulationState random_state(mediagov::Rng& rng) {
  // Dirichlet-ish via exponential spacings
  double e[4];
  double sum = 0.0;
  for (double& v : e) {
    v = -std::log(1.0 - rng.uniform01());
    sum += v;
  }
  mediagov::PopulationState s;
  for (int i = 0; i < 4; ++i) s.x[i] = e[i] / sum;
  s.y = rng.uniform01();
  return s;
}

}  // namespace oracle

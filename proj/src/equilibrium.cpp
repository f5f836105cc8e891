#include "gifting/equilibrium.hpp"

#include <algorithm>
#include <limits>

namespace gifting {

namespace {

bool same_joint(const JointAction& a, const JointAction& b) { return a == b; }

/// Best payoff player can reach by unilaterally deviating from `joint`.
double best_deviation_payoff(const NormalFormGame& game, int player,
                             JointAction joint) {
  double best = -std::numeric_limits<double>::infinity();
  const int own = joint[player];
  for (int a = 0; a < game.action_counts[player]; ++a) {
    if (a == own) continue;
    joint[player] = a;
    best = std::max(best, game.payoffs[player][game.joint_index(joint)]);
  }
  joint[player] = own;
  return best;
}

}  // namespace

bool PneSet::contains(const JointAction& joint) const {
  for (const auto& p : profiles)
    if (same_joint(p.actions, joint)) return true;
  return false;
}

std::vector<JointAction> PneSet::joint_actions() const {
  std::vector<JointAction> out;
  out.reserve(profiles.size());
  for (const auto& p : profiles) out.push_back(p.actions);
  return out;
}

PneSet enumerate_pne(const NormalFormGame& game, double tol) {
  game.validate();
  PneSet out;
  const long n = game.num_joint_actions();
  for (long idx = 0; idx < n; ++idx) {
    JointAction joint = game.joint_from_index(idx);
    bool is_pne = true;
    for (int i = 0; i < game.num_players && is_pne; ++i) {
      const double own = game.payoffs[i][idx];
      if (game.action_counts[i] > 1 &&
          best_deviation_payoff(game, i, joint) > own + tol)
        is_pne = false;
    }
    if (!is_pne) continue;
    PneProfile p;
    p.actions = joint;
    p.total_payoff = 0;
    for (int i = 0; i < game.num_players; ++i)
      p.total_payoff += game.payoffs[i][idx];
    out.profiles.push_back(std::move(p));
  }
  return out;
}

bool is_strictly_dominated(const NormalFormGame& game, int player, int action_a,
                           int action_b, double tol) {
  if (player < 0 || player >= game.num_players)
    throw std::invalid_argument("player index out of range");
  if (action_a < 0 || action_a >= game.action_counts[player] || action_b < 0 ||
      action_b >= game.action_counts[player])
    throw std::invalid_argument("action index out of range");

  // Iterate over all opponent profiles with an odometer.
  JointAction joint(game.num_players, 0);
  while (true) {
    joint[player] = action_a;
    const double pay_a = game.payoffs[player][game.joint_index(joint)];
    joint[player] = action_b;
    const double pay_b = game.payoffs[player][game.joint_index(joint)];
    if (!(pay_b > pay_a + tol)) return false;

    int i = game.num_players - 1;
    for (; i >= 0; --i) {
      if (i == player) continue;
      if (++joint[i] < game.action_counts[i]) break;
      joint[i] = 0;
    }
    if (i < 0) break;
  }
  return true;
}

double nash_product(const NormalFormGame& game, const JointAction& profile,
                    double tol) {
  if (game.num_players != 2)
    throw std::invalid_argument("nash product is defined for 2-player games");
  const PneSet pne = enumerate_pne(game, tol);
  if (!pne.contains(profile))
    throw std::invalid_argument("profile " + game.profile_name(profile) +
                                " is not a pure Nash equilibrium");
  double product = 1;
  for (int i = 0; i < 2; ++i) {
    const double own = game.payoffs[i][game.joint_index(profile)];
    if (game.action_counts[i] < 2) continue;  // no deviation exists
    product *= own - best_deviation_payoff(game, i, profile);
  }
  return product;
}

PneSet classify_equilibria(const NormalFormGame& game, double tol) {
  PneSet pne = enumerate_pne(game, tol);
  if (pne.profiles.empty()) return pne;

  double max_total = -std::numeric_limits<double>::infinity();
  for (const auto& p : pne.profiles) max_total = std::max(max_total, p.total_payoff);
  for (auto& p : pne.profiles) p.prosocial = p.total_payoff >= max_total - tol;

  // Payoff dominance: weakly better for every player against every other
  // PNE, strictly better for at least one (player, profile) pair.
  for (auto& p : pne.profiles) {
    const long p_idx = game.joint_index(p.actions);
    bool weakly_best = true;
    bool strict_somewhere = false;
    for (const auto& q : pne.profiles) {
      if (same_joint(p.actions, q.actions)) continue;
      const long q_idx = game.joint_index(q.actions);
      for (int i = 0; i < game.num_players; ++i) {
        const double dp = game.payoffs[i][p_idx] - game.payoffs[i][q_idx];
        if (dp < -tol) weakly_best = false;
        if (dp > tol) strict_somewhere = true;
      }
    }
    p.payoff_dominant = weakly_best && strict_somewhere;
  }

  if (game.num_players == 2) {
    for (auto& p : pne.profiles) p.nash_product = nash_product(game, p.actions, tol);
    // Risk dominance: strictly larger Nash product than every other PNE.
    for (auto& p : pne.profiles) {
      bool strictly_largest = pne.profiles.size() > 1;
      for (const auto& q : pne.profiles) {
        if (same_joint(p.actions, q.actions)) continue;
        if (!(*p.nash_product > *q.nash_product + tol)) strictly_largest = false;
      }
      p.risk_dominant = strictly_largest;
    }
  }
  return pne;
}

GiftMappingCheck verify_gift_pne_mapping(const NormalFormGame& game,
                                         const GiftSet& gifts, double tol) {
  const GiftedGame gifted = extend_with_gifting(game, gifts);
  GiftMappingCheck check;
  check.base_pne = enumerate_pne(game, tol);
  check.extended_pne = enumerate_pne(gifted.extended, tol);
  check.ok = true;

  // Every extended PNE must be the zero-gift lifting of some base PNE.
  for (const auto& p : check.extended_pne.profiles) {
    const VectorXd g = gifted.gift_vector(p.actions);
    if (g.cwiseAbs().maxCoeff() != 0 ||
        !check.base_pne.contains(gifted.base_joint(p.actions))) {
      check.ok = false;
      check.witness = p.actions;
      return check;
    }
  }
  // Every base PNE must lift to an extended PNE.
  for (const auto& p : check.base_pne.profiles) {
    const JointAction lifted = gifted.lift_zero_gift(p.actions);
    if (!check.extended_pne.contains(lifted)) {
      check.ok = false;
      check.witness = lifted;
      return check;
    }
  }
  return check;
}

}  // namespace gifting

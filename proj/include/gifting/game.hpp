#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gifting/common.hpp"

namespace gifting {

// ---------------------------------------------------------------------------
// Normal-form games
// ---------------------------------------------------------------------------

/// An N-player normal-form game with dense per-player payoff tensors.
/// Joint actions are indexed row-major with player 0 varying slowest.
struct NormalFormGame {
  int num_players = 0;
  std::vector<int> action_counts;
  /// payoffs[i][joint_index] is player i's payoff.
  std::vector<VectorXd> payoffs;
  /// Optional action names, one vector per player (may be empty).
  std::vector<std::vector<std::string>> action_labels;

  long num_joint_actions() const {
    long n = 1;
    for (int c : action_counts) n *= c;
    return n;
  }

  long joint_index(const JointAction& joint) const;
  JointAction joint_from_index(long index) const;

  /// Throws constraint_error if tensor shapes or finiteness are violated.
  void validate() const;

  std::string action_name(int player, int action) const;
  std::string profile_name(const JointAction& joint) const;
};

/// Player payoffs (mu_1(s), ..., mu_N(s)) for one joint action.
VectorXd payoff_of(const NormalFormGame& game, const JointAction& joint);

// ---------------------------------------------------------------------------
// Coordination games
// ---------------------------------------------------------------------------

enum class CoordinationKind { PureCoordination, BachOrStravinsky, Assurance, StagHunt };

std::string to_string(CoordinationKind kind);

/// Payoff entries of a 2x2 two-player game:
///   row player: a = (1,1), b = (1,2), c = (2,1), d = (2,2)
///   col player: A = (1,1), B = (1,2), C = (2,1), D = (2,2)
struct CoordinationParams {
  double a, b, c, d;
  double A, B, C, D;

  static CoordinationParams pure_coordination();
  static CoordinationParams bach_or_stravinsky();
  static CoordinationParams assurance();
  /// Stag Hunt with risk parameter r (payoff for hunting alone): a=A=2,
  /// b=C=r, c=B=1, d=D=1. Requires r to keep (Forage,Forage) risk-dominant.
  static CoordinationParams stag_hunt(double r);

  /// Throws constraint_error naming the first violated coordination
  /// condition (a>c, A>B, d>b, D>C).
  void validate_coordination() const;
  /// Validates the defining inequalities of the given sub-class.
  void validate_kind(CoordinationKind kind) const;

  NormalFormGame to_game(const std::vector<std::string>& labels = {}) const;
};

/// The paper's default 2-player coordination games. `r` is required for
/// StagHunt and ignored otherwise.
NormalFormGame make_coordination_game(CoordinationKind kind,
                                      std::optional<double> r = std::nullopt);

// ---------------------------------------------------------------------------
// Zero-sum gifting
// ---------------------------------------------------------------------------

/// Finite nonnegative gift amounts per player; every set contains 0.
/// Values are kept sorted ascending, so gift index 0 is always "no gift".
struct GiftSet {
  std::vector<std::vector<double>> values;

  /// {0, gamma} for every player (gamma == 0 collapses to {0}).
  static GiftSet uniform(int num_players, double gamma);

  void validate() const;
  int num_players() const { return static_cast<int>(values.size()); }
};

/// Reward transfers sigma_i(g) = -g_i + sum_{j != i} g_j / (N-1).
/// The entries sum to zero.
VectorXd gift_transfer(const VectorXd& gifts);

/// A base game extended with gifting actions. Extended action indices are
/// gift-major: ext = gift_index * |S_i| + base_action, so the ungifted
/// actions keep their original indices 0..|S_i|-1.
struct GiftedGame {
  NormalFormGame base;
  GiftSet gifts;
  NormalFormGame extended;

  int base_action(int player, int ext_action) const {
    return ext_action % base.action_counts[player];
  }
  int gift_index(int player, int ext_action) const {
    return ext_action / base.action_counts[player];
  }
  double gift_value(int player, int ext_action) const {
    return gifts.values[player][gift_index(player, ext_action)];
  }

  JointAction base_joint(const JointAction& ext_joint) const;
  VectorXd gift_vector(const JointAction& ext_joint) const;
  /// Extended profile with the given base actions and zero gifts.
  JointAction lift_zero_gift(const JointAction& base_joint) const;
};

GiftedGame extend_with_gifting(const NormalFormGame& game, const GiftSet& gifts);

// ---------------------------------------------------------------------------
// Graph games
// ---------------------------------------------------------------------------

/// N agents on an undirected graph; every edge plays the same symmetric
/// 2-player stage game and each agent receives the mean stage payoff over
/// its neighbors.
struct GraphGame {
  int num_agents = 0;
  std::vector<std::pair<int, int>> edges;
  CoordinationParams stage;
  std::vector<std::string> stage_labels;

  void validate() const;
  NormalFormGame to_normal_form() const;
};

std::vector<std::pair<int, int>> fully_connected_edges(int num_agents);

/// Stag Hunt on a graph: agent i's payoff under joint action s is the mean
/// of mu(s_i, s_j) over neighbors j.
NormalFormGame make_graph_stag_hunt(int num_agents,
                                    const std::vector<std::pair<int, int>>& edges,
                                    double r);

// ---------------------------------------------------------------------------
// Repeated games
// ---------------------------------------------------------------------------

struct RepeatedStepResult {
  VectorXd rewards;
  std::vector<int> next_observations;
  bool done = false;
};

/// A stage game played for exactly `horizon` steps. Each agent observes one
/// categorical symbol per opponent: 0 for the distinguished start symbol
/// (before any action), 1 + a after the opponent played action a. For more
/// than one opponent the symbols combine in mixed radix.
struct RepeatedGame {
  NormalFormGame stage;
  int horizon = 10;

  void validate() const;

  /// Number of distinct observation symbols for one agent.
  long observation_count(int agent) const;
  /// The all-start observation at t = 0.
  int initial_observation(int agent) const { return 0; }
  int observation_after(int agent, const JointAction& joint) const;
};

/// Advances the repeated game one step. Throws std::logic_error when t is
/// at or beyond the horizon.
RepeatedStepResult repeated_step(const RepeatedGame& env, int t,
                                 const JointAction& joint);

}  // namespace gifting

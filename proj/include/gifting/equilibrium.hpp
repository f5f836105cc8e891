#pragma once

#include <optional>
#include <vector>

#include "gifting/game.hpp"

namespace gifting {

/// Absolute tolerance for payoff comparisons in equilibrium checks.
constexpr double kPayoffTol = 1e-9;

struct PneProfile {
  JointAction actions;
  double total_payoff = 0;
  /// Product of both players' deviation losses; 2-player games only.
  std::optional<double> nash_product;
  bool prosocial = false;
  bool payoff_dominant = false;
  bool risk_dominant = false;
};

/// All weak pure-strategy Nash equilibria of a game, sorted by joint index.
struct PneSet {
  std::vector<PneProfile> profiles;

  bool contains(const JointAction& joint) const;
  std::vector<JointAction> joint_actions() const;
};

/// Exhaustive enumeration: a profile is kept iff no player gains more than
/// kPayoffTol by any unilateral deviation.
PneSet enumerate_pne(const NormalFormGame& game, double tol = kPayoffTol);

/// True iff action_b gives the player strictly more than action_a against
/// every opponent profile.
bool is_strictly_dominated(const NormalFormGame& game, int player, int action_a,
                           int action_b, double tol = kPayoffTol);

/// Product over both players of the deviation loss at a PNE profile. For
/// players with more than two actions, the minimum loss over deviations is
/// used (coincides with the unique loss in the 2x2 case).
double nash_product(const NormalFormGame& game, const JointAction& profile,
                    double tol = kPayoffTol);

/// enumerate_pne plus flags: prosocial (maximum total payoff among PNE,
/// ties allowed), payoff-dominant (weakly best for all players against every
/// other PNE, strictly better somewhere), and for 2-player games
/// risk-dominant (strictly largest Nash product).
PneSet classify_equilibria(const NormalFormGame& game, double tol = kPayoffTol);

struct GiftMappingCheck {
  bool ok = false;
  /// A profile violating the mapping, when ok is false: either a PNE of the
  /// extended game outside the zero-gift image, or a missing image profile.
  std::optional<JointAction> witness;
  PneSet base_pne;
  PneSet extended_pne;
};

/// Checks that PNE of the gifted game are exactly the zero-gift liftings of
/// the base game's PNE (brute force on both games).
GiftMappingCheck verify_gift_pne_mapping(const NormalFormGame& game,
                                         const GiftSet& gifts,
                                         double tol = kPayoffTol);

}  // namespace gifting

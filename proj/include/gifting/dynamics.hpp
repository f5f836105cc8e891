#pragma once

#include <optional>
#include <vector>

#include "gifting/equilibrium.hpp"
#include "gifting/game.hpp"

namespace gifting {

/// Softmax logits of one player, one entry per (extended) action.
using PolicyLogits = VectorXd;
/// Concatenated logits of all players; the state z of the gradient flow.
using SystemState = VectorXd;

enum class Integrator { Euler, Rk4 };

struct FlowConfig {
  double step_size = 0.1;
  long max_steps = 200000;
  /// Probability p* a player must place on one action to count as committed.
  double convergence_threshold = 0.999;
  Integrator integrator = Integrator::Euler;

  void validate() const;
};

/// Numerically stabilized softmax; entries sum to 1.
VectorXd softmax_policy(const PolicyLogits& logits);

/// Exact expected payoff per player under independent softmax policies,
/// by full summation over joint actions.
VectorXd expected_payoff(const NormalFormGame& game,
                         const std::vector<PolicyLogits>& logits);

/// Closed-form gradient of each player's expected payoff with respect to
/// its own logits: grad_j = pi_j * (q_j - sum_k pi_k q_k), with q_j the
/// expected payoff of action j against the others' policies.
std::vector<VectorXd> exact_gradient(const NormalFormGame& game,
                                     const std::vector<PolicyLogits>& logits);

/// The autonomous system zdot = f(z) for a 2-player game, with payoff
/// matrices precomputed for the integration loop.
class TwoPlayerFlow {
 public:
  explicit TwoPlayerFlow(const NormalFormGame& game);

  int actions1() const { return n1_; }
  int actions2() const { return n2_; }
  int dim() const { return n1_ + n2_; }

  /// Writes f(z) into dz and the two policies into pi1/pi2. All outputs are
  /// resized as needed; no other state is touched.
  void eval(const SystemState& z, VectorXd& dz, VectorXd& pi1, VectorXd& pi2) const;

 private:
  MatrixXd m1_, m2_;
  int n1_ = 0, n2_ = 0;
};

/// Committed-equilibrium classification targets, precomputed once per game.
struct PneClassifier {
  struct Entry {
    int action1 = 0;
    int action2 = 0;
    bool prosocial = false;
  };
  std::vector<Entry> entries;

  static PneClassifier from_game(const NormalFormGame& game);
  /// Index of the PNE both players are committed to, or -1.
  int match(const VectorXd& pi1, const VectorXd& pi2, double threshold) const;
};

struct IntegrationResult {
  long steps = 0;
  SystemState terminal;
  /// The PNE the policies committed to, if any.
  std::optional<JointAction> profile;
  bool prosocial = false;

  bool converged() const { return profile.has_value(); }
};

/// Returns the PNE whose components every player selects with probability
/// at least `threshold`, else nullopt.
std::optional<JointAction> classify_terminal(const NormalFormGame& game,
                                             const std::vector<PolicyLogits>& logits,
                                             double threshold);

/// Advances z0 under zdot = f(z) until a PNE classification succeeds or
/// max_steps is reached. Throws numerical_error (with the step index) if the
/// state becomes non-finite.
IntegrationResult integrate(const NormalFormGame& game, const SystemState& z0,
                            const FlowConfig& config);
IntegrationResult integrate(const TwoPlayerFlow& flow, const PneClassifier& pne,
                            const SystemState& z0, const FlowConfig& config);

/// Fraction of gift-parameter samples reaching the prosocial equilibrium,
/// per (x1-x2, y1-y2) cell.
struct BasinGrid {
  VectorXd x_centers;
  VectorXd y_centers;
  ArrayXXd prosocial_fraction;   // row i = x cell, col j = y cell
  ArrayXXd unconverged_fraction;
  ArrayXXd failed_fraction;
  long samples_per_cell = 1;

  double aggregate_prosocial() const { return prosocial_fraction.mean(); }
  double aggregate_unconverged() const { return unconverged_fraction.mean(); }
  double aggregate_failed() const { return failed_fraction.mean(); }
};

struct BasinPair {
  BasinGrid ungifted;
  BasinGrid gifted;
};

/// Integrates from every cell of a resolution x resolution grid of
/// (x1-x2, y1-y2) values in [-3,3], with x2 = y2 = 0 as the reference. The
/// gifted grid additionally sweeps the four gift-logit offsets over
/// `gift_samples` evenly spaced values in [-3,3] each; the ungifted grid is
/// binary. Cells hitting numerical errors are recorded, not fatal.
BasinPair basin_sweep(const GiftedGame& game, int resolution, int gift_samples,
                      const FlowConfig& config, int workers = 0);

struct FrequencyTable {
  std::vector<double> r_values;
  std::vector<double> gamma_values;
  ArrayXXd frequency;    // rows = r, cols = gamma
  ArrayXXd unconverged;  // rows = r, cols = gamma
  VectorXd baseline;     // ungifted aggregate per r
};

/// Aggregate prosocial frequency of the gifted Stag Hunt over a grid of
/// risk values r and gift values gamma, plus the ungifted baseline per r.
FrequencyTable frequency_sweep(const std::vector<double>& r_values,
                               const std::vector<double>& gamma_values,
                               int resolution, int gift_samples,
                               const FlowConfig& config, int workers = 0);

/// Normalized flow directions over a grid of (x1-x2, y1-y2) points with the
/// gift-logit offsets held fixed. For an ungifted 2-action game,
/// gift_offsets must be empty; for a gifted game it holds
/// (x3-x2, x4-x2, y3-y2, y4-y2).
struct PhasePortrait {
  VectorXd xs;
  VectorXd ys;
  ArrayXXd u;  // direction along x1-x2, unit normalized; zero at stationary points
  ArrayXXd v;  // direction along y1-y2
  VectorXd gift_offsets;
};

PhasePortrait phase_portrait(const NormalFormGame& game, const VectorXd& gift_offsets,
                             const VectorXd& xs, const VectorXd& ys);

}  // namespace gifting

#include "gifting/game.hpp"

#include <cmath>
#include <sstream>

namespace gifting {

namespace {

std::string format_value(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// NormalFormGame

long NormalFormGame::joint_index(const JointAction& joint) const {
  if (static_cast<int>(joint.size()) != num_players)
    throw std::invalid_argument("joint action has wrong number of players");
  long idx = 0;
  for (int i = 0; i < num_players; ++i) {
    if (joint[i] < 0 || joint[i] >= action_counts[i])
      throw std::invalid_argument("action index " + std::to_string(joint[i]) +
                                  " out of range for player " + std::to_string(i));
    idx = idx * action_counts[i] + joint[i];
  }
  return idx;
}

JointAction NormalFormGame::joint_from_index(long index) const {
  JointAction joint(num_players);
  for (int i = num_players - 1; i >= 0; --i) {
    joint[i] = static_cast<int>(index % action_counts[i]);
    index /= action_counts[i];
  }
  return joint;
}

void NormalFormGame::validate() const {
  if (num_players < 1) throw constraint_error("game must have at least one player");
  if (static_cast<int>(action_counts.size()) != num_players)
    throw constraint_error("action_counts size does not match num_players");
  for (int c : action_counts)
    if (c < 1) throw constraint_error("every player needs at least one action");
  if (static_cast<int>(payoffs.size()) != num_players)
    throw constraint_error("payoffs size does not match num_players");
  const long n = num_joint_actions();
  for (int i = 0; i < num_players; ++i) {
    if (payoffs[i].size() != n)
      throw constraint_error("payoff tensor of player " + std::to_string(i) +
                             " has " + std::to_string(payoffs[i].size()) +
                             " entries, expected " + std::to_string(n));
    if (!payoffs[i].allFinite())
      throw constraint_error("payoff tensor of player " + std::to_string(i) +
                             " contains non-finite values");
  }
  if (!action_labels.empty()) {
    if (static_cast<int>(action_labels.size()) != num_players)
      throw constraint_error("action_labels size does not match num_players");
    for (int i = 0; i < num_players; ++i)
      if (static_cast<int>(action_labels[i].size()) != action_counts[i])
        throw constraint_error("action_labels of player " + std::to_string(i) +
                               " do not match its action count");
  }
}

std::string NormalFormGame::action_name(int player, int action) const {
  if (!action_labels.empty() && action < static_cast<int>(action_labels[player].size()))
    return action_labels[player][action];
  return "a" + std::to_string(action);
}

std::string NormalFormGame::profile_name(const JointAction& joint) const {
  std::string out = "(";
  for (int i = 0; i < num_players; ++i) {
    if (i) out += ", ";
    out += action_name(i, joint[i]);
  }
  return out + ")";
}

VectorXd payoff_of(const NormalFormGame& game, const JointAction& joint) {
  const long idx = game.joint_index(joint);
  VectorXd out(game.num_players);
  for (int i = 0; i < game.num_players; ++i) out[i] = game.payoffs[i][idx];
  return out;
}

// ---------------------------------------------------------------------------
// Coordination games

std::string to_string(CoordinationKind kind) {
  switch (kind) {
    case CoordinationKind::PureCoordination: return "pure-coordination";
    case CoordinationKind::BachOrStravinsky: return "bos";
    case CoordinationKind::Assurance: return "assurance";
    case CoordinationKind::StagHunt: return "stag-hunt";
  }
  return "?";
}

CoordinationParams CoordinationParams::pure_coordination() {
  return CoordinationParams{1, 0, 0, 1, 1, 0, 0, 1};
}

CoordinationParams CoordinationParams::bach_or_stravinsky() {
  return CoordinationParams{2, 0, 0, 1, 1, 0, 0, 2};
}

CoordinationParams CoordinationParams::assurance() {
  return CoordinationParams{2, 0, 0, 1, 2, 0, 0, 1};
}

CoordinationParams CoordinationParams::stag_hunt(double r) {
  CoordinationParams p{2, r, 1, 1, 2, 1, r, 1};
  p.validate_kind(CoordinationKind::StagHunt);
  return p;
}

void CoordinationParams::validate_coordination() const {
  auto require = [](bool ok, const std::string& cond) {
    if (!ok) throw constraint_error("coordination condition violated: " + cond);
  };
  require(a > c, "a > c (a=" + format_value(a) + ", c=" + format_value(c) + ")");
  require(A > B, "A > B (A=" + format_value(A) + ", B=" + format_value(B) + ")");
  require(d > b, "d > b (d=" + format_value(d) + ", b=" + format_value(b) + ")");
  require(D > C, "D > C (D=" + format_value(D) + ", C=" + format_value(C) + ")");
}

void CoordinationParams::validate_kind(CoordinationKind kind) const {
  validate_coordination();
  auto require = [&](bool ok, const std::string& cond) {
    if (!ok)
      throw constraint_error(to_string(kind) + " condition violated: " + cond);
  };
  switch (kind) {
    case CoordinationKind::PureCoordination:
      require(b == B && B == c && c == C, "b = B = c = C");
      require(a == d && A == D, "a = d and A = D");
      require(b < std::min(a, A), "off-diagonal payoff < min(a, A)");
      break;
    case CoordinationKind::BachOrStravinsky:
      require(b == B && B == c && c == C, "b = B = c = C");
      require(a > d && A < D, "a > d and A < D");
      require(b < std::min(a, A), "off-diagonal payoff < min(a, A)");
      break;
    case CoordinationKind::Assurance:
      require(b == B && B == c && c == C, "b = B = c = C");
      require(a > d && A > D, "a > d and A > D");
      require(b < std::min(a, A), "off-diagonal payoff < min(a, A)");
      break;
    case CoordinationKind::StagHunt:
      require(a > d && A > D, "a > d and A > D");
      require(a == A && d == D && c == B && C == b, "a=A, d=D, c=B, C=b=r");
      require(a - c < d - b,
              "a - c < d - r (a-c=" + format_value(a - c) +
                  ", d-r=" + format_value(d - b) + ")");
      break;
  }
}

NormalFormGame CoordinationParams::to_game(const std::vector<std::string>& labels) const {
  NormalFormGame g;
  g.num_players = 2;
  g.action_counts = {2, 2};
  g.payoffs.resize(2);
  g.payoffs[0] = (VectorXd(4) << a, b, c, d).finished();
  g.payoffs[1] = (VectorXd(4) << A, B, C, D).finished();
  std::vector<std::string> names =
      labels.empty() ? std::vector<std::string>{"A1", "A2"} : labels;
  g.action_labels = {names, names};
  g.validate();
  return g;
}

NormalFormGame make_coordination_game(CoordinationKind kind, std::optional<double> r) {
  CoordinationParams params{};
  std::vector<std::string> labels;
  switch (kind) {
    case CoordinationKind::PureCoordination:
      params = CoordinationParams::pure_coordination();
      break;
    case CoordinationKind::BachOrStravinsky:
      params = CoordinationParams::bach_or_stravinsky();
      labels = {"Bach", "Stravinsky"};
      break;
    case CoordinationKind::Assurance:
      params = CoordinationParams::assurance();
      break;
    case CoordinationKind::StagHunt:
      if (!r) throw std::invalid_argument("stag hunt requires the risk parameter r");
      params = CoordinationParams::stag_hunt(*r);
      labels = {"Hunt", "Forage"};
      break;
  }
  params.validate_kind(kind);
  return params.to_game(labels);
}

// ---------------------------------------------------------------------------
// Gifting

GiftSet GiftSet::uniform(int num_players, double gamma) {
  if (num_players < 1) throw std::invalid_argument("need at least one player");
  if (gamma < 0) throw std::invalid_argument("gift value must be nonnegative");
  GiftSet gs;
  std::vector<double> per_player = gamma > 0 ? std::vector<double>{0.0, gamma}
                                             : std::vector<double>{0.0};
  gs.values.assign(num_players, per_player);
  return gs;
}

void GiftSet::validate() const {
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto& v = values[i];
    if (v.empty())
      throw std::invalid_argument("gift set of player " + std::to_string(i) +
                                  " is empty");
    bool has_zero = false;
    double prev = -1;
    for (double g : v) {
      if (!(g >= 0))
        throw std::invalid_argument("gift set of player " + std::to_string(i) +
                                    " contains a negative value");
      if (g == 0) has_zero = true;
      if (g <= prev)
        throw std::invalid_argument("gift set of player " + std::to_string(i) +
                                    " must be sorted ascending and distinct");
      prev = g;
    }
    if (!has_zero)
      throw std::invalid_argument("gift set of player " + std::to_string(i) +
                                  " does not contain 0");
  }
}

VectorXd gift_transfer(const VectorXd& gifts) {
  const int n = static_cast<int>(gifts.size());
  if (n < 2) throw std::invalid_argument("gift transfer needs at least 2 players");
  double total = 0;
  for (int i = 0; i < n; ++i) {
    if (!(gifts[i] >= 0)) throw std::invalid_argument("gifts must be nonnegative");
    total += gifts[i];
  }
  VectorXd sigma(n);
  for (int i = 0; i < n; ++i)
    sigma[i] = -gifts[i] + (total - gifts[i]) / (n - 1);
  return sigma;
}

JointAction GiftedGame::base_joint(const JointAction& ext_joint) const {
  JointAction out(ext_joint.size());
  for (std::size_t i = 0; i < ext_joint.size(); ++i)
    out[i] = base_action(static_cast<int>(i), ext_joint[i]);
  return out;
}

VectorXd GiftedGame::gift_vector(const JointAction& ext_joint) const {
  VectorXd g(ext_joint.size());
  for (std::size_t i = 0; i < ext_joint.size(); ++i)
    g[static_cast<long>(i)] = gift_value(static_cast<int>(i), ext_joint[i]);
  return g;
}

JointAction GiftedGame::lift_zero_gift(const JointAction& joint) const {
  // Gift index 0 is the zero gift, so extended index == base index.
  return joint;
}

GiftedGame extend_with_gifting(const NormalFormGame& game, const GiftSet& gifts) {
  game.validate();
  gifts.validate();
  if (gifts.num_players() != game.num_players)
    throw std::invalid_argument("gift set has wrong number of players");
  if (game.num_players < 2)
    throw std::invalid_argument("gifting needs at least 2 players");

  GiftedGame gg;
  gg.base = game;
  gg.gifts = gifts;

  NormalFormGame& ext = gg.extended;
  ext.num_players = game.num_players;
  ext.action_counts.resize(game.num_players);
  for (int i = 0; i < game.num_players; ++i)
    ext.action_counts[i] =
        game.action_counts[i] * static_cast<int>(gifts.values[i].size());

  ext.action_labels.resize(game.num_players);
  for (int i = 0; i < game.num_players; ++i) {
    for (std::size_t gi = 0; gi < gifts.values[i].size(); ++gi) {
      for (int a = 0; a < game.action_counts[i]; ++a) {
        std::string name = game.action_name(i, a);
        if (gifts.values[i][gi] > 0)
          name += "+gift" + format_value(gifts.values[i][gi]);
        ext.action_labels[i].push_back(name);
      }
    }
  }

  const long n_ext = ext.num_joint_actions();
  ext.payoffs.assign(game.num_players, VectorXd(n_ext));
  JointAction ext_joint(game.num_players);
  VectorXd g(game.num_players);
  JointAction base_joint(game.num_players);
  for (long idx = 0; idx < n_ext; ++idx) {
    long rest = idx;
    for (int i = game.num_players - 1; i >= 0; --i) {
      ext_joint[i] = static_cast<int>(rest % ext.action_counts[i]);
      rest /= ext.action_counts[i];
    }
    for (int i = 0; i < game.num_players; ++i) {
      base_joint[i] = ext_joint[i] % game.action_counts[i];
      g[i] = gifts.values[i][ext_joint[i] / game.action_counts[i]];
    }
    const VectorXd sigma = gift_transfer(g);
    const long base_idx = game.joint_index(base_joint);
    for (int i = 0; i < game.num_players; ++i)
      ext.payoffs[i][idx] = game.payoffs[i][base_idx] + sigma[i];
  }
  ext.validate();
  return gg;
}

// ---------------------------------------------------------------------------
// Graph games

std::vector<std::pair<int, int>> fully_connected_edges(int num_agents) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < num_agents; ++i)
    for (int j = i + 1; j < num_agents; ++j) edges.emplace_back(i, j);
  return edges;
}

void GraphGame::validate() const {
  if (num_agents < 2) throw std::invalid_argument("graph game needs at least 2 agents");
  std::vector<int> degree(num_agents, 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= num_agents || v < 0 || v >= num_agents)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop edge");
    ++degree[u];
    ++degree[v];
  }
  for (int i = 0; i < num_agents; ++i)
    if (degree[i] == 0)
      throw std::invalid_argument("agent " + std::to_string(i) + " has no neighbor");
  stage.validate_coordination();
}

NormalFormGame GraphGame::to_normal_form() const {
  validate();
  NormalFormGame g;
  g.num_players = num_agents;
  g.action_counts.assign(num_agents, 2);
  std::vector<std::string> names =
      stage_labels.empty() ? std::vector<std::string>{"A1", "A2"} : stage_labels;
  g.action_labels.assign(num_agents, names);

  std::vector<int> degree(num_agents, 0);
  for (const auto& [u, v] : edges) {
    ++degree[u];
    ++degree[v];
  }

  // Row-player stage payoff mu(own, other).
  const double stage_payoff[2][2] = {{stage.a, stage.b}, {stage.c, stage.d}};

  const long n = g.num_joint_actions();
  g.payoffs.assign(num_agents, VectorXd::Zero(n));
  for (long idx = 0; idx < n; ++idx) {
    const JointAction joint = g.joint_from_index(idx);
    for (const auto& [u, v] : edges) {
      g.payoffs[u][idx] += stage_payoff[joint[u]][joint[v]];
      g.payoffs[v][idx] += stage_payoff[joint[v]][joint[u]];
    }
    for (int i = 0; i < num_agents; ++i) g.payoffs[i][idx] /= degree[i];
  }
  g.validate();
  return g;
}

NormalFormGame make_graph_stag_hunt(int num_agents,
                                    const std::vector<std::pair<int, int>>& edges,
                                    double r) {
  GraphGame gg;
  gg.num_agents = num_agents;
  gg.edges = edges;
  gg.stage = CoordinationParams::stag_hunt(r);
  gg.stage_labels = {"Hunt", "Forage"};
  return gg.to_normal_form();
}

// ---------------------------------------------------------------------------
// Repeated games

void RepeatedGame::validate() const {
  stage.validate();
  if (horizon < 1) throw std::invalid_argument("horizon must be positive");
}

long RepeatedGame::observation_count(int agent) const {
  long n = 1;
  for (int j = 0; j < stage.num_players; ++j)
    if (j != agent) n *= stage.action_counts[j] + 1;
  return n;
}

int RepeatedGame::observation_after(int agent, const JointAction& joint) const {
  long obs = 0;
  for (int j = 0; j < stage.num_players; ++j) {
    if (j == agent) continue;
    obs = obs * (stage.action_counts[j] + 1) + (1 + joint[j]);
  }
  return static_cast<int>(obs);
}

RepeatedStepResult repeated_step(const RepeatedGame& env, int t,
                                 const JointAction& joint) {
  if (t < 0 || t >= env.horizon)
    throw std::logic_error("step index " + std::to_string(t) +
                           " outside horizon " + std::to_string(env.horizon));
  RepeatedStepResult out;
  out.rewards = payoff_of(env.stage, joint);
  out.next_observations.resize(env.stage.num_players);
  for (int i = 0; i < env.stage.num_players; ++i)
    out.next_observations[i] = env.observation_after(i, joint);
  out.done = (t == env.horizon - 1);
  return out;
}

}  // namespace gifting

#include "isa/algorithm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace isa {

std::string to_string(SignMode mode) {
  return mode == SignMode::Attract ? "attract" : "literal";
}

SignMode parse_sign_mode(const std::string& text) {
  if (text == "attract") return SignMode::Attract;
  if (text == "literal") return SignMode::Literal;
  throw std::invalid_argument("unknown sign mode '" + text + "' (expected attract or literal)");
}

void IsaParams::validate() const {
  if (!(rho >= 0.0 && rho <= 100.0)) {
    std::ostringstream msg;
    msg << "rho must lie in [0, 100], got " << rho;
    throw std::invalid_argument(msg.str());
  }
  if (population_size < 2) throw std::invalid_argument("population size must be at least 2");
  if (iterations == 0) throw std::invalid_argument("iterations must be positive");
  if (!(epsilon_r > 0.0)) throw std::invalid_argument("epsilon_r must be positive");
}

std::vector<double> normalized_powers(std::span<const double> fitnesses, Direction direction) {
  const std::size_t n = fitnesses.size();
  std::vector<double> powers(n);
  if (n == 0) return powers;
  const auto [lo, hi] = std::minmax_element(fitnesses.begin(), fitnesses.end());
  const double best = direction == Direction::Minimise ? *lo : *hi;
  const double worst = direction == Direction::Minimise ? *hi : *lo;
  if (best == worst) {
    std::fill(powers.begin(), powers.end(), 1.0 / static_cast<double>(n));
    return powers;
  }
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    powers[i] = (fitnesses[i] - worst) / (best - worst);
    total += powers[i];
  }
  for (double& p : powers) p /= total;
  return powers;
}

double sound_intensity_sq(double power, double squared_distance, double epsilon_r) {
  const double area = 4.0 * std::numbers::pi * (squared_distance + epsilon_r);
  return power / (area * area);
}

double sound_intensity(double power, double distance, double epsilon_r) {
  return sound_intensity_sq(power, distance * distance, epsilon_r);
}

namespace {

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    sum += d * d;
  }
  return sum;
}

// `row[k]` is the squared distance from agent i to agent k.
std::size_t loudest_neighbour(std::size_t i, std::span<const double> row,
                              std::span<const double> powers, double epsilon_r,
                              std::uint64_t& evaluations) {
  std::size_t target = i == 0 ? 1 : 0;
  double loudest = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < powers.size(); ++k) {
    if (k == i) continue;
    const double intensity = sound_intensity_sq(powers[k], row[k], epsilon_r);
    ++evaluations;
    if (intensity > loudest) {
      loudest = intensity;
      target = k;
    }
  }
  return target;
}

void require_same_length(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    std::ostringstream msg;
    msg << what << ": length mismatch (" << a << " vs " << b << ")";
    throw std::invalid_argument(msg.str());
  }
}

} // namespace

std::size_t select_target(std::size_t i, std::span<const std::vector<double>> positions,
                          std::span<const double> powers, double epsilon_r) {
  const std::size_t n = positions.size();
  if (n < 2) throw std::invalid_argument("select_target needs at least two agents");
  require_same_length(n, powers.size(), "select_target");
  if (i >= n) throw std::out_of_range("select_target: agent index out of range");
  std::vector<double> row(n, 0.0);
  for (std::size_t k = 0; k < n; ++k)
    if (k != i) row[k] = squared_distance(positions[i], positions[k]);
  std::uint64_t unused = 0;
  return loudest_neighbour(i, row, powers, epsilon_r, unused);
}

std::pair<double, double> shift_positive(double fitness_i, double fitness_j) {
  if (fitness_i > 0.0 && fitness_j > 0.0) return {fitness_i, fitness_j};
  const double shift = -std::min(fitness_i, fitness_j) + 1.0;
  return {fitness_i + shift, fitness_j + shift};
}

double attraction_percentage(double fitness_i, double fitness_j, Direction direction, double rho,
                             double u) {
  const double numerator = direction == Direction::Minimise ? fitness_j : fitness_i;
  return (numerator / std::max(fitness_i, fitness_j) + u) * rho;
}

std::vector<double> displacement(std::span<const double> from, std::span<const double> target,
                                 double percentage, SignMode mode) {
  require_same_length(from.size(), target.size(), "displacement");
  std::vector<double> out(from.size());
  for (std::size_t k = 0; k < from.size(); ++k) {
    const double diff = mode == SignMode::Attract ? target[k] - from[k] : from[k] - target[k];
    out[k] = diff * percentage / 100.0;
  }
  return out;
}

std::vector<double> update_movement(std::span<const double> previous,
                                    std::span<const double> displacement, double u) {
  require_same_length(previous.size(), displacement.size(), "update_movement");
  std::vector<double> out(previous.size());
  for (std::size_t k = 0; k < previous.size(); ++k) out[k] = previous[k] * u + displacement[k];
  return out;
}

std::vector<double> step_position(std::span<const double> position,
                                  std::span<const double> movement) {
  require_same_length(position.size(), movement.size(), "step_position");
  std::vector<double> out(position.size());
  for (std::size_t k = 0; k < position.size(); ++k) out[k] = position[k] + movement[k];
  return out;
}

std::vector<double> repair(std::span<const double> x, const Bounds& bounds, Rng& rng) {
  require_same_length(x.size(), bounds.size(), "repair");
  std::vector<double> out(x.begin(), x.end());
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (!bounds[k].contains(out[k])) out[k] = rng.uniform(bounds[k].lower, bounds[k].upper);
  }
  return out;
}

Swarm::Swarm(const Objective& objective, IsaParams params)
    : objective_(objective),
      params_(params),
      rng_(params.seed),
      noise_(split_seed(params.seed, 1)),
      best_fitness_(objective.spec().direction == Direction::Minimise
                        ? std::numeric_limits<double>::infinity()
                        : -std::numeric_limits<double>::infinity()) {
  params_.validate();
  const auto& bounds = objective_.spec().bounds;
  const std::size_t n = params_.population_size;
  const std::size_t dim = objective_.dimension();
  agents_.resize(n);
  for (auto& agent : agents_) {
    agent.position.resize(dim);
    for (std::size_t k = 0; k < dim; ++k)
      agent.position[k] = rng_.uniform(bounds[k].lower, bounds[k].upper);
    agent.movement.assign(dim, 0.0);
  }
  fitnesses_.resize(n);
  squared_distances_.resize(n * n);
  next_positions_.resize(n);
  trajectory_.reserve(params_.iterations);
}

void Swarm::evaluate_population() {
  const Direction direction = objective_.spec().direction;
  for (std::size_t i = 0; i < agents_.size(); ++i) {
    auto& agent = agents_[i];
    agent.fitness = objective_(agent.position, noise_);
    fitnesses_[i] = agent.fitness;
    if (!has_best_ || better(agent.fitness, best_fitness_, direction)) {
      best_fitness_ = agent.fitness;
      best_position_ = agent.position;
      has_best_ = true;
    }
  }
}

void Swarm::step() {
  const Direction direction = objective_.spec().direction;
  const auto& bounds = objective_.spec().bounds;
  const std::size_t n = agents_.size();

  evaluate_population();
  trajectory_.push_back(best_fitness_);

  const std::vector<double> powers = normalized_powers(fitnesses_, direction);

  for (std::size_t i = 0; i < n; ++i) {
    squared_distances_[i * n + i] = 0.0;
    for (std::size_t k = i + 1; k < n; ++k) {
      const double d = squared_distance(agents_[i].position, agents_[k].position);
      squared_distances_[i * n + k] = d;
      squared_distances_[k * n + i] = d;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    auto& agent = agents_[i];
    const std::span<const double> row(squared_distances_.data() + i * n, n);
    const std::size_t j =
        loudest_neighbour(i, row, powers, params_.epsilon_r, intensity_evaluations_);
    const auto [fi, fj] = shift_positive(agent.fitness, agents_[j].fitness);
    const double per = attraction_percentage(fi, fj, direction, params_.rho, rng_.uniform());
    const auto disp =
        displacement(agent.position, agents_[j].position, per, params_.displacement_sign);
    agent.movement = update_movement(agent.movement, disp, rng_.uniform());
    next_positions_[i] = repair(step_position(agent.position, agent.movement), bounds, rng_);
  }
  for (std::size_t i = 0; i < n; ++i) agents_[i].position.swap(next_positions_[i]);
  ++iteration_;
}

RunRecord run_isa(const Objective& objective, const IsaParams& params) {
  const auto start = std::chrono::steady_clock::now();
  Swarm swarm(objective, params);
  for (std::size_t t = 0; t < params.iterations; ++t) swarm.step();
  RunRecord record;
  record.function_id = objective.id();
  record.seed = params.seed;
  record.rho = params.rho;
  record.best_position = swarm.best_position();
  record.best_fitness = swarm.best_fitness();
  record.trajectory = swarm.trajectory();
  record.elapsed = std::chrono::steady_clock::now() - start;
  return record;
}

} // namespace isa

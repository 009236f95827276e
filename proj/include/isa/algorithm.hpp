#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "isa/objective.hpp"
#include "isa/rng.hpp"

namespace isa {

/// Which way the displacement vector points relative to the target agent.
enum class SignMode {
  /// (V_j - V_i): the agent moves toward its loudest neighbour.
  Attract,
  /// (V_i - V_j): the difference exactly as the displacement formula is
  /// printed, which pushes the agent away from its neighbour.
  Literal,
};

std::string to_string(SignMode mode);
/// Accepts "attract" and "literal"; throws std::invalid_argument otherwise.
SignMode parse_sign_mode(const std::string& text);

struct IsaParams {
  double rho = 50.0;
  std::size_t population_size = 50;
  std::size_t iterations = 1000;
  std::uint64_t seed = 42;
  SignMode displacement_sign = SignMode::Attract;
  double epsilon_r = 1e-12;

  void validate() const;
};

struct Agent {
  std::vector<double> position;
  double fitness = 0.0;
  std::vector<double> movement;
};

struct RunRecord {
  std::string function_id;
  std::uint64_t seed = 0;
  double rho = 0.0;
  std::vector<double> best_position;
  double best_fitness = 0.0;
  /// Best-so-far fitness after each iteration.
  std::vector<double> trajectory;
  std::chrono::duration<double, std::milli> elapsed{0};
};

// ---------------------------------------------------------------------------
// Individual update rules. run_isa composes these; they are exposed so each
// can be tested on its own.

/// Normalised sound power of every agent. p_i = (f_i - worst)/(best - worst),
/// P_i = p_i / sum(p). When every fitness is equal each agent gets 1/n.
std::vector<double> normalized_powers(std::span<const double> fitnesses, Direction direction);

/// P / A^2 with A = 4*pi*(r^2 + epsilon_r).
double sound_intensity(double power, double distance, double epsilon_r);
/// Same as sound_intensity with the squared distance supplied directly.
double sound_intensity_sq(double power, double squared_distance, double epsilon_r);

/// Index j != i of the neighbour heard loudest by agent i. Ties go to the
/// lowest index.
std::size_t select_target(std::size_t i, std::span<const std::vector<double>> positions,
                          std::span<const double> powers, double epsilon_r);

/// Shifts a fitness pair so both are positive whenever either is <= 0.
std::pair<double, double> shift_positive(double fitness_i, double fitness_j);

/// Percentage of the difference vector to apply. Inputs must already be
/// positive (see shift_positive); `u` is a uniform draw in [0, 1).
double attraction_percentage(double fitness_i, double fitness_j, Direction direction, double rho,
                             double u);

/// Throws std::invalid_argument on length mismatch.
std::vector<double> displacement(std::span<const double> from, std::span<const double> target,
                                 double percentage, SignMode mode);

/// prev * u + displacement, one scalar draw for the whole vector.
std::vector<double> update_movement(std::span<const double> previous,
                                    std::span<const double> displacement, double u);

std::vector<double> step_position(std::span<const double> position,
                                  std::span<const double> movement);

/// Replaces each coordinate strictly outside its interval with a uniform
/// draw inside it, drawing in coordinate order. In-range input consumes no
/// draws.
std::vector<double> repair(std::span<const double> x, const Bounds& bounds, Rng& rng);

// ---------------------------------------------------------------------------

/// Population state of one optimisation run, advanced an iteration at a time.
///
/// Each iteration evaluates every agent, updates the best-so-far solution,
/// computes sound powers from the evaluated fitnesses and then moves every
/// agent toward (or, in Literal mode, away from) its loudest neighbour.
/// All agents move from the same snapshot of positions. Per agent the stream
/// supplies the draw for the attraction percentage, then the draw for the
/// movement memory, then any repair draws.
class Swarm {
public:
  Swarm(const Objective& objective, IsaParams params);

  void step();

  std::size_t iteration() const { return iteration_; }
  const std::vector<Agent>& agents() const { return agents_; }
  const std::vector<double>& best_position() const { return best_position_; }
  double best_fitness() const { return best_fitness_; }
  const std::vector<double>& trajectory() const { return trajectory_; }
  /// Total sound-intensity evaluations performed so far.
  std::uint64_t intensity_evaluations() const { return intensity_evaluations_; }

private:
  void evaluate_population();

  const Objective& objective_;
  IsaParams params_;
  Rng rng_;
  Rng noise_;
  std::vector<Agent> agents_;
  std::vector<double> best_position_;
  double best_fitness_;
  bool has_best_ = false;
  std::vector<double> trajectory_;
  std::size_t iteration_ = 0;
  std::uint64_t intensity_evaluations_ = 0;

  // scratch
  std::vector<double> fitnesses_;
  std::vector<double> squared_distances_;
  std::vector<std::vector<double>> next_positions_;
};

/// Runs params.iterations iterations and returns the best solution seen.
/// Identical objective and params give bit-identical records (apart from
/// the elapsed time).
RunRecord run_isa(const Objective& objective, const IsaParams& params);

} // namespace isa

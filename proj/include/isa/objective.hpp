#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "isa/rng.hpp"

namespace isa {

enum class Direction { Minimise, Maximise };

/// True when `a` is strictly better than `b` under `direction`.
inline bool better(double a, double b, Direction direction) {
  return direction == Direction::Minimise ? a < b : a > b;
}

std::string to_string(Direction direction);

/// Closed interval [lower, upper] for one coordinate.
struct Interval {
  double lower = 0.0;
  double upper = 0.0;

  bool contains(double x) const { return lower <= x && x <= upper; }
  bool operator==(const Interval&) const = default;
};

using Bounds = std::vector<Interval>;

/// Same interval repeated over `dimension` coordinates.
Bounds uniform_bounds(std::size_t dimension, double lower, double upper);

struct ObjectiveSpec {
  std::string id;
  std::size_t dimension = 0;
  Bounds bounds;
  Direction direction = Direction::Minimise;
  std::size_t default_population = 50;
  std::size_t default_iterations = 1000;
  std::optional<double> known_optimum;
  /// Point at which `known_optimum` is attained, when known.
  std::vector<double> optimum_location;

  /// Throws std::invalid_argument when the spec is internally inconsistent.
  void validate() const;
};

/// Evaluation callback. The stream is only read by stochastic objectives.
using ObjectiveFn = std::function<double(std::span<const double>, Rng&)>;
using DeterministicFn = std::function<double(std::span<const double>)>;

class NotFoundError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

class ConflictError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A benchmark or user function together with its metadata.
class Objective {
public:
  Objective(ObjectiveSpec spec, ObjectiveFn fn, bool stochastic);

  const ObjectiveSpec& spec() const { return spec_; }
  const std::string& id() const { return spec_.id; }
  std::size_t dimension() const { return spec_.dimension; }
  bool stochastic() const { return stochastic_; }

  /// Throws std::invalid_argument on dimension mismatch.
  double operator()(std::span<const double> x, Rng& rng) const;
  /// Deterministic objectives only; stochastic ones need a stream.
  double operator()(std::span<const double> x) const;

private:
  ObjectiveSpec spec_;
  ObjectiveFn fn_;
  bool stochastic_;
};

/// Lookup table of objectives, pre-populated with the 23 benchmarks F1..F23.
class ObjectiveRegistry {
public:
  ObjectiveRegistry();

  /// Throws ConflictError for a duplicate id, std::invalid_argument for a
  /// malformed spec. Returns the id.
  std::string add(ObjectiveSpec spec, ObjectiveFn fn, bool stochastic = false);
  std::string add(ObjectiveSpec spec, DeterministicFn fn);

  bool contains(const std::string& id) const;
  /// Throws NotFoundError for unknown ids.
  const Objective& get(const std::string& id) const;
  const ObjectiveSpec& spec_of(const std::string& id) const { return get(id).spec(); }

  double evaluate(const std::string& id, std::span<const double> x, Rng& rng) const;
  double evaluate(const std::string& id, std::span<const double> x) const;

  /// Ids in catalog order: F1..F23 first, then user functions in
  /// registration order.
  const std::vector<std::string>& ids() const { return order_; }

  /// Resolves "all", a single id or a comma separated list.
  std::vector<std::string> select(const std::string& selector) const;

private:
  std::map<std::string, Objective> objectives_;
  std::vector<std::string> order_;
};

/// Process-wide registry holding only the builtin benchmarks.
const ObjectiveRegistry& builtin_registry();

} // namespace isa

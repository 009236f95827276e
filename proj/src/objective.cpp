#include "isa/objective.hpp"

#include <cmath>
#include <sstream>

#include "isa/benchmarks.hpp"

namespace isa {

std::string to_string(Direction direction) {
  return direction == Direction::Minimise ? "minimise" : "maximise";
}

Bounds uniform_bounds(std::size_t dimension, double lower, double upper) {
  return Bounds(dimension, Interval{lower, upper});
}

void ObjectiveSpec::validate() const {
  if (id.empty()) throw std::invalid_argument("objective id must not be empty");
  if (dimension == 0) throw std::invalid_argument(id + ": dimension must be positive");
  if (bounds.size() != dimension) {
    std::ostringstream msg;
    msg << id << ": bounds length " << bounds.size() << " does not match dimension " << dimension;
    throw std::invalid_argument(msg.str());
  }
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    const auto& b = bounds[i];
    if (!std::isfinite(b.lower) || !std::isfinite(b.upper) || !(b.lower < b.upper)) {
      std::ostringstream msg;
      msg << id << ": bound " << i << " needs finite lower < upper, got [" << b.lower << ", "
          << b.upper << "]";
      throw std::invalid_argument(msg.str());
    }
  }
  if (default_population < 2) throw std::invalid_argument(id + ": population must be at least 2");
  if (default_iterations == 0) throw std::invalid_argument(id + ": iterations must be positive");
  if (!optimum_location.empty() && optimum_location.size() != dimension)
    throw std::invalid_argument(id + ": optimum location has wrong dimension");
}

Objective::Objective(ObjectiveSpec spec, ObjectiveFn fn, bool stochastic)
    : spec_(std::move(spec)), fn_(std::move(fn)), stochastic_(stochastic) {
  spec_.validate();
  if (!fn_) throw std::invalid_argument(spec_.id + ": missing evaluation callback");
}

double Objective::operator()(std::span<const double> x, Rng& rng) const {
  if (x.size() != spec_.dimension) {
    std::ostringstream msg;
    msg << spec_.id << ": expected " << spec_.dimension << " coordinates, got " << x.size();
    throw std::invalid_argument(msg.str());
  }
  return fn_(x, rng);
}

double Objective::operator()(std::span<const double> x) const {
  if (stochastic_)
    throw std::invalid_argument(spec_.id + " is stochastic and needs an explicit random stream");
  Rng unused(0);
  return (*this)(x, unused);
}

ObjectiveRegistry::ObjectiveRegistry() {
  for (auto& objective : benchmarks::catalog()) {
    std::string id = objective.id();
    order_.push_back(id);
    objectives_.emplace(std::move(id), std::move(objective));
  }
}

std::string ObjectiveRegistry::add(ObjectiveSpec spec, ObjectiveFn fn, bool stochastic) {
  if (objectives_.contains(spec.id)) throw ConflictError("objective '" + spec.id + "' already registered");
  Objective objective(std::move(spec), std::move(fn), stochastic);
  std::string id = objective.id();
  order_.push_back(id);
  objectives_.emplace(id, std::move(objective));
  return id;
}

std::string ObjectiveRegistry::add(ObjectiveSpec spec, DeterministicFn fn) {
  if (!fn) throw std::invalid_argument(spec.id + ": missing evaluation callback");
  return add(std::move(spec),
             [f = std::move(fn)](std::span<const double> x, Rng&) { return f(x); }, false);
}

bool ObjectiveRegistry::contains(const std::string& id) const { return objectives_.contains(id); }

const Objective& ObjectiveRegistry::get(const std::string& id) const {
  auto it = objectives_.find(id);
  if (it == objectives_.end()) throw NotFoundError("unknown objective '" + id + "'");
  return it->second;
}

double ObjectiveRegistry::evaluate(const std::string& id, std::span<const double> x, Rng& rng) const {
  return get(id)(x, rng);
}

double ObjectiveRegistry::evaluate(const std::string& id, std::span<const double> x) const {
  return get(id)(x);
}

std::vector<std::string> ObjectiveRegistry::select(const std::string& selector) const {
  if (selector == "all") return order_;
  std::vector<std::string> out;
  std::stringstream in(selector);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    get(item);
    out.push_back(item);
  }
  if (out.empty()) throw std::invalid_argument("empty function selector");
  return out;
}

const ObjectiveRegistry& builtin_registry() {
  static const ObjectiveRegistry registry;
  return registry;
}

} // namespace isa

#include "apmads/estimation.hpp"

#include <cmath>

#include "apmads/errors.hpp"

namespace apmads {

void PointHistory::append(const Observation& obs) {
  observations_.push_back(obs);
  if (!obs.feasible) {
    infeasible_ = true;
    return;
  }
  const double w = 1.0 / (obs.sigma * obs.sigma);
  weighted_sum_ += obs.value * w;
  weight_ += w;
}

Estimate PointHistory::estimate() const {
  if (infeasible_ || weight_ <= 0.0) return {};
  return {weighted_sum_ / weight_, 1.0 / std::sqrt(weight_)};
}

void EvaluationCache::record(const Point& x, const Observation& obs) {
  auto [it, inserted] = index_.try_emplace(x, entries_.size());
  if (inserted) entries_.push_back({x, {}});
  entries_[it->second].history.append(obs);
}

const PointHistory* EvaluationCache::find(const Point& x) const {
  auto it = index_.find(x);
  return it == index_.end() ? nullptr : &entries_[it->second].history;
}

Estimate EvaluationCache::estimate(const Point& x) const {
  const PointHistory* h = find(x);
  return h ? h->estimate() : Estimate{};
}

const Point& EvaluationCache::incumbent() const {
  const Entry* best = nullptr;
  double best_value = kInf;
  for (const Entry& e : entries_) {
    const Estimate est = e.history.estimate();
    if (est.defined() && (best == nullptr || est.value < best_value)) {
      best = &e;
      best_value = est.value;
    }
  }
  if (best == nullptr) throw NoIncumbent("cache holds no feasible evaluated point");
  return best->point;
}

double combined_sigma(double existing_sigma, std::span<const double> new_sigmas) {
  double weight = std::isinf(existing_sigma) ? 0.0 : 1.0 / (existing_sigma * existing_sigma);
  for (double s : new_sigmas)
    if (!std::isinf(s)) weight += 1.0 / (s * s);
  return weight > 0.0 ? 1.0 / std::sqrt(weight) : kInf;
}

std::optional<double> sigma_to_reach(double existing_sigma, double target, double sigma_max) {
  if (!(target > 0.0)) throw InvalidInput("target sigma must be > 0");
  if (existing_sigma <= target) return std::nullopt;
  const double existing_weight =
      std::isinf(existing_sigma) ? 0.0 : 1.0 / (existing_sigma * existing_sigma);
  const double needed = 1.0 / (target * target) - existing_weight;
  const double sigma = 1.0 / std::sqrt(needed);
  return std::min(sigma, sigma_max);
}

}  // namespace apmads

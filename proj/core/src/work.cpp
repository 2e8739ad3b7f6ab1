#include "glap/work.hpp"

#include <stdexcept>

namespace glap {

WorkCounter::WorkCounter(index_t fine_nnz) : unit_(static_cast<double>(fine_nnz)) {
  if (fine_nnz <= 0) throw std::invalid_argument("WorkCounter: fine operator has no entries");
}

void WorkCounter::add(index_t level, WorkKind kind, double nnz_applied) {
  if (level < 0) throw std::out_of_range("WorkCounter: negative level");
  if (static_cast<std::size_t>(level) >= tally_.size()) {
    tally_.resize(static_cast<std::size_t>(level) + 1, {});
  }
  const double units = nnz_applied / unit_;
  tally_[static_cast<std::size_t>(level)][static_cast<std::size_t>(kind)] += units;
  total_ += units;
}

double WorkCounter::level_total(index_t level) const {
  if (level < 0 || level >= levels()) return 0.0;
  double s = 0.0;
  for (const double v : tally_[static_cast<std::size_t>(level)]) s += v;
  return s;
}

double WorkCounter::kind_total(WorkKind kind) const {
  double s = 0.0;
  for (const auto& row : tally_) s += row[static_cast<std::size_t>(kind)];
  return s;
}

double WorkCounter::at(index_t level, WorkKind kind) const {
  if (level < 0 || level >= levels()) return 0.0;
  return tally_[static_cast<std::size_t>(level)][static_cast<std::size_t>(kind)];
}

}  // namespace glap

#pragma once

#include <Eigen/Core>

#include <functional>

namespace tubal {

// Number of threads used for per-slice work. Defaults to 1. Results never
// depend on this value: every slice is computed by the same sequential code
// and written to its own position.
int worker_count();
void set_worker_count(int workers);

// Runs body(i) for i in [0, count), statically partitioned across workers.
void parallel_for(Eigen::Index count, const std::function<void(Eigen::Index)>& body);

}  // namespace tubal

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "riccati/scheme.hpp"

namespace riccati {

// Fixed "%.17g" rendering so identical runs give byte-identical files.
std::string format_double(double v);

// Header: t,lambda_1,...,lambda_n,are_residual,min_eig; one row per record;
// LF line endings.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj, std::size_t dim);

// Side-by-side min_eig / are_residual columns, one group per scheme.  A
// group's cells are left empty after its run diverged.
void write_comparison_csv(std::ostream& out, const std::vector<std::string>& names,
                          const std::vector<const Trajectory*>& runs);

}  // namespace riccati

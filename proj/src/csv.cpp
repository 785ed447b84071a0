#include "riccati/csv.hpp"

#include <algorithm>
#include <cstdio>

namespace riccati {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj, std::size_t dim) {
  out << "t";
  for (std::size_t k = 1; k <= dim; ++k) out << ",lambda_" << k;
  out << ",are_residual,min_eig\n";
  for (const StepRecord& rec : traj.records) {
    out << format_double(rec.t);
    for (double ev : rec.eigenvalues) out << ',' << format_double(ev);
    out << ',' << format_double(rec.are_residual) << ',' << format_double(rec.min_eig)
        << '\n';
  }
}

void write_comparison_csv(std::ostream& out, const std::vector<std::string>& names,
                          const std::vector<const Trajectory*>& runs) {
  out << "t";
  for (const std::string& name : names) out << ',' << name << "_min_eig," << name << "_are_residual";
  out << '\n';

  std::size_t rows = 0;
  for (const Trajectory* run : runs) rows = std::max(rows, run->records.size());
  const double dt = runs.empty() ? 0.0 : runs.front()->dt;

  for (std::size_t r = 0; r < rows; ++r) {
    out << format_double(static_cast<double>(r) * dt);
    for (const Trajectory* run : runs) {
      if (r < run->records.size()) {
        out << ',' << format_double(run->records[r].min_eig) << ','
            << format_double(run->records[r].are_residual);
      } else {
        out << ",,";  // truncated group (diverged or shorter run)
      }
    }
    out << '\n';
  }
}

}  // namespace riccati

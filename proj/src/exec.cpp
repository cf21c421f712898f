#include "gqt/exec.hpp"

#include <omp.h>

#include <stdexcept>

namespace gqt {

int Exec::resolved() const { return threads > 0 ? threads : omp_get_max_threads(); }

Deadline Deadline::after(double seconds) {
  if (!(seconds > 0)) throw std::invalid_argument("budget must be positive");
  Deadline d;
  d.end_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
  return d;
}

}  // namespace gqt

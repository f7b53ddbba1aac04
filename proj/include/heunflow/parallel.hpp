#ifndef HEUNFLOW_PARALLEL_HPP
#define HEUNFLOW_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <functional>

namespace heunflow {

// Serial reference loop; the parallel kernels must reproduce its results
// exactly (each index writes only its own slot).
void serial_for(std::size_t n, const std::function<void(std::size_t)>& body);

// OpenMP loop over [0, n).  Falls back to serial_for when built without
// OpenMP.  The first exception thrown by a body is rethrown to the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

bool parallel_enabled();

} // namespace heunflow

#endif

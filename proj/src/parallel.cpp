#include "specmeter/parallel.hpp"

#include <cstdlib>
#include <string>

namespace specmeter {

unsigned default_thread_count() {
  const char* env = std::getenv("SPECMETER_THREADS");
  if (!env) return 1;
  try {
    long v = std::stol(env);
    if (v >= 1 && v <= 1024) return static_cast<unsigned>(v);
  } catch (const std::exception&) {
  }
  return 1;
}

}  // namespace specmeter

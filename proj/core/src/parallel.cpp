#include "dealmix/parallel.hpp"

namespace dealmix {

unsigned threads_from_env(unsigned fallback) {
  const char* env = std::getenv("DEALMIX_THREADS");
  if (!env || !*env) return fallback;
  char* end = nullptr;
  const unsigned long value = std::strtoul(env, &end, 10);
  if (*end != '\0' || value == 0 || value > 1024) return fallback;
  return static_cast<unsigned>(value);
}

}  // namespace dealmix

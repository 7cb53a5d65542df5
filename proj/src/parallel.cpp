#include "glyphplot/parallel.hpp"

#include <cstdlib>
#include <string_view>

namespace glyphplot {

bool parallel_enabled() {
#if defined(_OPENMP)
  const char* env = std::getenv("GLYPHPLOT_NO_PARALLEL");
  if (env == nullptr) return true;
  const std::string_view value(env);
  return value.empty() || value == "0";
#else
  return false;
#endif
}

}  // namespace glyphplot

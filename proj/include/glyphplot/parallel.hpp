#pragma once

// Shared switch for the OpenMP kernels.  Builds without OpenMP compile the
// same loops; the pragma macro expands to nothing and parallel_enabled()
// reports false.

namespace glyphplot {

// True when the build has OpenMP and GLYPHPLOT_NO_PARALLEL is not set
// (values "" and "0" count as unset).
bool parallel_enabled();

}  // namespace glyphplot

#if defined(_OPENMP)
#define GLYPHPLOT_STRINGIZE_(x) #x
// Runtime-switchable parallel for: the OpenMP if-clause falls back to a
// single thread when `cond` is false, keeping one code path for both modes.
#define GLYPHPLOT_PRAGMA_OMP_IF(cond) \
  _Pragma(GLYPHPLOT_STRINGIZE_(omp parallel for schedule(static) if (cond)))
#else
#define GLYPHPLOT_PRAGMA_OMP_IF(cond)
#endif

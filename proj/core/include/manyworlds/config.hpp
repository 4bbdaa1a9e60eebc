#pragma once

namespace manyworlds {

/// Global absolute tolerance used by invariant checks on unit-scale
/// quantities (orthonormality, hermiticity, probability simplex).
double default_eps();

/// Overrides the global tolerance. Intended for process startup
/// (e.g. the CLI honoring an environment override), not per-call tuning.
void set_default_eps(double eps);

}  // namespace manyworlds

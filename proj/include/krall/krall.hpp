#pragma once

// Umbrella header: exact rational scalars and polynomials, the classical and
// Krall orthogonal polynomial families, their orthogonality measures, the
// polynomial identity catalog and the parameter-path limit engine.

#include "krall/scalar.hpp"
#include "krall/poly.hpp"
#include "krall/families.hpp"
#include "krall/identities.hpp"
#include "krall/krall_families.hpp"
#include "krall/measures.hpp"
#include "krall/limits.hpp"

#pragma once

// Umbrella header: exact truncated substitution groups of formal power
// series, their periodic elements, and the symbolic relation tables.

#include "cyclotomic.hpp"
#include "error.hpp"
#include "expr.hpp"
#include "group.hpp"
#include "json_io.hpp"
#include "matrix.hpp"
#include "monomial.hpp"
#include "periodic.hpp"
#include "rational.hpp"
#include "relations.hpp"
#include "scalar.hpp"
#include "series.hpp"
#include "sympoly.hpp"
#include "verify.hpp"

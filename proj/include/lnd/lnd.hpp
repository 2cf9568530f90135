#pragma once

// Everything: polynomials, Gröbner bases, presented rings and subalgebras,
// derivations, grade, kernels and slices, symbolic powers, sessions.

#include "lnd/error.hpp"
#include "lnd/rational.hpp"
#include "lnd/monomial.hpp"
#include "lnd/polynomial.hpp"
#include "lnd/division.hpp"
#include "lnd/gcd.hpp"
#include "lnd/text.hpp"
#include "lnd/groebner.hpp"
#include "lnd/linalg.hpp"
#include "lnd/span.hpp"
#include "lnd/presentation.hpp"
#include "lnd/derivation.hpp"
#include "lnd/grade.hpp"
#include "lnd/kernel.hpp"
#include "lnd/rees.hpp"
#include "lnd/session.hpp"
#include "lnd/runner.hpp"

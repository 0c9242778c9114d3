#ifndef STATPHASE_STATPHASE_HPP
#define STATPHASE_STATPHASE_HPP

#include "statphase/core/error.hpp"
#include "statphase/core/rational.hpp"
#include "statphase/poly/elimination.hpp"
#include "statphase/poly/parse.hpp"
#include "statphase/poly/plane_system.hpp"
#include "statphase/poly/polynomial.hpp"
#include "statphase/poly/roots.hpp"
#include "statphase/poly/univariate_q.hpp"
#include "statphase/newton/milnor.hpp"
#include "statphase/newton/polygon.hpp"
#include "statphase/stationary/rational_function.hpp"
#include "statphase/stationary/spectrum.hpp"
#include "statphase/vanishing/germ.hpp"
#include "statphase/tameness/tame.hpp"
#include "statphase/slice/line.hpp"
#include "statphase/cli/run.hpp"

#endif  // STATPHASE_STATPHASE_HPP

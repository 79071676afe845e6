#ifndef IVL_IVL_HPP
#define IVL_IVL_HPP

#include "ivl/error.hpp"
#include "ivl/expr.hpp"
#include "ivl/extended.hpp"
#include "ivl/interval.hpp"
#include "ivl/io/text.hpp"
#include "ivl/kinterval.hpp"
#include "ivl/rounding.hpp"
#include "ivl/solvers/estimators.hpp"
#include "ivl/solvers/gauss_seidel.hpp"
#include "ivl/solvers/linear_system.hpp"
#include "ivl/solvers/newton.hpp"
#include "ivl/solvers/oracles.hpp"
#include "ivl/solvers/precondition.hpp"
#include "ivl/solvers/spectral.hpp"

#endif  // IVL_IVL_HPP

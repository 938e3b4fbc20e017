#pragma once

// Umbrella header for the toric library.

#include "toric/arith.hpp"
#include "toric/cone.hpp"
#include "toric/errors.hpp"
#include "toric/lattice.hpp"
#include "toric/linear_program.hpp"
#include "toric/polyq.hpp"
#include "toric/polytope.hpp"
#include "toric/semigroup.hpp"
#include "toric/solve.hpp"
#include "toric/sparse.hpp"
#include "toric/toric_ideal.hpp"
#include "toric/volume.hpp"

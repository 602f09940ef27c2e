#pragma once

// Umbrella header: groups acting on semiregular trees via parity conditions
// on ball labellings, their invariants, and the small-degree counterexample.

#include "ugt/automorphism.hpp"
#include "ugt/ball.hpp"
#include "ugt/bitmatrix.hpp"
#include "ugt/coloring.hpp"
#include "ugt/counterexample.hpp"
#include "ugt/diagram.hpp"
#include "ugt/goursat.hpp"
#include "ugt/groupspec.hpp"
#include "ugt/halftree.hpp"
#include "ugt/invariants.hpp"
#include "ugt/parallel.hpp"
#include "ugt/perm.hpp"
#include "ugt/permgroup.hpp"
#include "ugt/quotient.hpp"
#include "ugt/rng.hpp"
#include "ugt/system.hpp"
#include "ugt/theta.hpp"

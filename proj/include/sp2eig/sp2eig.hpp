#pragma once

// Umbrella header: quaternion algebra, 2x2 quaternionic matrices with
// the left-eigenvalue machinery, the prescribed-eigenvalue construction,
// and the Omega-set covering experiments.

#include "sp2eig/construct.hpp"
#include "sp2eig/errors.hpp"
#include "sp2eig/json_io.hpp"
#include "sp2eig/linalg.hpp"
#include "sp2eig/matrix.hpp"
#include "sp2eig/quaternion.hpp"
#include "sp2eig/random.hpp"
#include "sp2eig/topology.hpp"

#pragma once

// Umbrella header: exact-arithmetic supports of specialization complexes and
// cohomology jump loci of rank-one local systems.

#include "torsupp/arrangement.hpp"
#include "torsupp/errors.hpp"
#include "torsupp/json_io.hpp"
#include "torsupp/linalg.hpp"
#include "torsupp/oracle.hpp"
#include "torsupp/rational.hpp"
#include "torsupp/torus.hpp"
#include "torsupp/zeta.hpp"

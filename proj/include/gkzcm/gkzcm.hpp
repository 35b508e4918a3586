// Convenience header pulling in the whole library.
#pragma once

#include "gkzcm/classify.hpp"
#include "gkzcm/errors.hpp"
#include "gkzcm/exponent.hpp"
#include "gkzcm/freemodule.hpp"
#include "gkzcm/groebner.hpp"
#include "gkzcm/ideal_ops.hpp"
#include "gkzcm/intmatrix.hpp"
#include "gkzcm/linalg.hpp"
#include "gkzcm/numeric.hpp"
#include "gkzcm/order.hpp"
#include "gkzcm/poly_io.hpp"
#include "gkzcm/polynomial.hpp"
#include "gkzcm/report.hpp"
#include "gkzcm/resolution.hpp"
#include "gkzcm/ring.hpp"
#include "gkzcm/semigroup.hpp"
#include "gkzcm/toric.hpp"
#include "gkzcm/umbrella.hpp"
#include "gkzcm/weyl.hpp"

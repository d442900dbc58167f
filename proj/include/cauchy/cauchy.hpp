#pragma once

#include "cauchy/errors.hpp"
#include "cauchy/exact_ratio.hpp"
#include "cauchy/gammafn.hpp"
#include "cauchy/geometry/direction.hpp"
#include "cauchy/geometry/hull.hpp"
#include "cauchy/geometry/polytope.hpp"
#include "cauchy/geometry/polytope_io.hpp"
#include "cauchy/geometry/shape.hpp"
#include "cauchy/grain.hpp"
#include "cauchy/hypersphere.hpp"
#include "cauchy/montecarlo/estimate.hpp"
#include "cauchy/montecarlo/philox.hpp"
#include "cauchy/montecarlo/sampling.hpp"
#include "cauchy/ratio.hpp"

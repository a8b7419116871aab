#pragma once

#include "tropjac/rational.hpp"
#include "tropjac/linalg.hpp"
#include "tropjac/simplex.hpp"
#include "tropjac/ordmonoid.hpp"
#include "tropjac/metric.hpp"
#include "tropjac/tropcurve.hpp"
#include "tropjac/plfun.hpp"
#include "tropjac/monodromy.hpp"
#include "tropjac/picard.hpp"
#include "tropjac/polytope.hpp"
#include "tropjac/cells.hpp"

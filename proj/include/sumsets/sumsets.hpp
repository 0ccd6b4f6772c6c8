#pragma once

// Umbrella header: the whole library in one include.

#include "sumsets/coloring.hpp"
#include "sumsets/construct.hpp"
#include "sumsets/errors.hpp"
#include "sumsets/hashing.hpp"
#include "sumsets/lines.hpp"
#include "sumsets/ordinal.hpp"
#include "sumsets/pattern.hpp"
#include "sumsets/ramsey.hpp"
#include "sumsets/rational.hpp"
#include "sumsets/report.hpp"
#include "sumsets/sumset_search.hpp"
#include "sumsets/vector.hpp"

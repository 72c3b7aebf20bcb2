#pragma once

#include "kgrid/cartan.hpp"
#include "kgrid/error.hpp"
#include "kgrid/exact.hpp"
#include "kgrid/grids.hpp"
#include "kgrid/invariant.hpp"
#include "kgrid/ktheory.hpp"
#include "kgrid/spin_system.hpp"
#include "kgrid/tro.hpp"

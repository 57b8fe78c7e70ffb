#pragma once

#include "hejc/analytic.hpp"
#include "hejc/constants.hpp"
#include "hejc/cooling.hpp"
#include "hejc/error.hpp"
#include "hejc/format.hpp"
#include "hejc/hamiltonian.hpp"
#include "hejc/hydrogen1d.hpp"
#include "hejc/laguerre.hpp"
#include "hejc/propagator.hpp"
#include "hejc/pulse.hpp"
#include "hejc/rwa.hpp"
#include "hejc/sideband.hpp"
#include "hejc/state.hpp"
#include "hejc/thermal.hpp"
#include "hejc/trapdrive.hpp"

#pragma once

// Umbrella header for the entcat library.

#include "entcat/catalyst2d.hpp"
#include "entcat/catalystnd.hpp"
#include "entcat/oracle.hpp"
#include "entcat/probvec.hpp"
#include "entcat/rational.hpp"
#include "entcat/vidal.hpp"

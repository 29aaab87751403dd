#pragma once

#include "flagaut/autgroup.hpp"
#include "flagaut/chevalley.hpp"
#include "flagaut/error.hpp"
#include "flagaut/field.hpp"
#include "flagaut/geometry.hpp"
#include "flagaut/isogeny.hpp"
#include "flagaut/lie_algebra.hpp"
#include "flagaut/oracle.hpp"
#include "flagaut/parabolic.hpp"
#include "flagaut/rootsys.hpp"
#include "flagaut/scenarios.hpp"
#include "flagaut/truncated_ring.hpp"

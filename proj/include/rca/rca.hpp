// Umbrella include for the routing-with-collision-avoidance toolkit.

#pragma once

#include "rca/flow.hpp"
#include "rca/generators.hpp"
#include "rca/graph.hpp"
#include "rca/instance.hpp"
#include "rca/oracle.hpp"
#include "rca/route.hpp"
#include "rca/solver.hpp"

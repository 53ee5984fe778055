#pragma once

#include "taag/error.hpp"
#include "taag/geometry.hpp"
#include "taag/brep.hpp"
#include "taag/nbrep.hpp"
#include "taag/convexity.hpp"
#include "taag/graph.hpp"
#include "taag/boundary.hpp"
#include "taag/subgraph.hpp"
#include "taag/builder.hpp"
#include "taag/fixtures.hpp"
#include "taag/report.hpp"
#include "taag/mesh_export.hpp"

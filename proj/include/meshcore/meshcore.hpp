#pragma once

// Umbrella header for the mesh kernel: entity/connectivity storage, the
// connectivity computation engine, iterators, construction, boundary
// extraction and refinement, the distributed dof numbering, and file I/O.

#include "meshcore/bench.hpp"
#include "meshcore/boundary.hpp"
#include "meshcore/compute.hpp"
#include "meshcore/connectivity.hpp"
#include "meshcore/distribute.hpp"
#include "meshcore/dofmap.hpp"
#include "meshcore/editor.hpp"
#include "meshcore/error.hpp"
#include "meshcore/generate.hpp"
#include "meshcore/geometry.hpp"
#include "meshcore/io.hpp"
#include "meshcore/iterate.hpp"
#include "meshcore/local_templates.hpp"
#include "meshcore/measure.hpp"
#include "meshcore/mesh.hpp"
#include "meshcore/mesh_function.hpp"
#include "meshcore/order.hpp"
#include "meshcore/partition.hpp"
#include "meshcore/refine.hpp"
#include "meshcore/sparsity.hpp"
#include "meshcore/topology.hpp"
#include "meshcore/types.hpp"
#include "meshcore/validate.hpp"

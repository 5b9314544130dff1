#pragma once

// Umbrella header for the dec2d library.

#include "dec2d/geometry.hpp"
#include "dec2d/mesh.hpp"
#include "dec2d/mesh_io.hpp"
#include "dec2d/disk_mesh.hpp"
#include "dec2d/incidence.hpp"
#include "dec2d/dual.hpp"
#include "dec2d/hodge.hpp"
#include "dec2d/sparse.hpp"
#include "dec2d/solve.hpp"
#include "dec2d/poisson.hpp"
#include "dec2d/fem.hpp"
#include "dec2d/study.hpp"
#include "dec2d/export.hpp"
#include "dec2d/config.hpp"

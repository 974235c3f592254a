#pragma once

#include "curvlab/criteria.hpp"
#include "curvlab/curvature_space.hpp"
#include "curvlab/decomp.hpp"
#include "curvlab/errors.hpp"
#include "curvlab/euclid.hpp"
#include "curvlab/holonomy.hpp"
#include "curvlab/io.hpp"
#include "curvlab/models.hpp"
#include "curvlab/parallel.hpp"
#include "curvlab/tensor.hpp"

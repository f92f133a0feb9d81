// Umbrella header.

#pragma once

#include "rational.hpp"
#include "matrix.hpp"
#include "gcm.hpp"
#include "dynkin.hpp"
#include "root_vector.hpp"
#include "families.hpp"
#include "supermatrix.hpp"
#include "base_algebra.hpp"
#include "loop.hpp"
#include "involution.hpp"
#include "chevalley.hpp"
#include "vogan_diagram.hpp"
#include "enumerate.hpp"
#include "classify.hpp"
#include "render.hpp"
#include "json_io.hpp"
#include "catalogue.hpp"

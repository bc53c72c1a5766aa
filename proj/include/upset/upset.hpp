#pragma once

#include "upset/bounds.hpp"
#include "upset/embed_search.hpp"
#include "upset/embedding.hpp"
#include "upset/error.hpp"
#include "upset/gadget.hpp"
#include "upset/geometry.hpp"
#include "upset/graph.hpp"
#include "upset/graph_io.hpp"
#include "upset/grid_embed.hpp"
#include "upset/montecarlo.hpp"
#include "upset/permutation.hpp"
#include "upset/point_set.hpp"
#include "upset/random_planar.hpp"
#include "upset/rng.hpp"
#include "upset/validate.hpp"
#include "upset/version.hpp"
#include "upset/witness.hpp"

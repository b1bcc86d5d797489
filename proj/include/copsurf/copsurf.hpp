#pragma once

#include "copsurf/bounds.hpp"
#include "copsurf/corpus.hpp"
#include "copsurf/covering.hpp"
#include "copsurf/embedding.hpp"
#include "copsurf/error.hpp"
#include "copsurf/game.hpp"
#include "copsurf/generators.hpp"
#include "copsurf/graph.hpp"
#include "copsurf/graph6.hpp"
#include "copsurf/io.hpp"
#include "copsurf/isomorphism.hpp"
#include "copsurf/polyhedra.hpp"
#include "copsurf/solver.hpp"
#include "copsurf/transfer.hpp"
#include "copsurf/tuple_index.hpp"
#include "copsurf/verify.hpp"

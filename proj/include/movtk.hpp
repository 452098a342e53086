#pragma once

#include "movtk/error.hpp"
#include "movtk/generators.hpp"
#include "movtk/io.hpp"
#include "movtk/mov.hpp"
#include "movtk/mov_constructive.hpp"
#include "movtk/mov_destructive.hpp"
#include "movtk/mov_result.hpp"
#include "movtk/optim/bounded_cut.hpp"
#include "movtk/optim/digraph.hpp"
#include "movtk/optim/max_flow.hpp"
#include "movtk/optim/min_cost_flow.hpp"
#include "movtk/optim/shortest_path.hpp"
#include "movtk/oracle.hpp"
#include "movtk/search.hpp"
#include "movtk/solutions.hpp"
#include "movtk/tournament.hpp"
#include "movtk/verify.hpp"

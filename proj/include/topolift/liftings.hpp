#pragma once

#include "topolift/liftings/complexes.hpp"
#include "topolift/liftings/graph.hpp"
#include "topolift/liftings/hypergraph.hpp"
#include "topolift/liftings/pointcloud.hpp"

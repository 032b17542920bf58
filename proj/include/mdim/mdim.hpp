#ifndef MDIM_MDIM_HPP
#define MDIM_MDIM_HPP

#include "mdim/constructions.hpp"
#include "mdim/distance.hpp"
#include "mdim/errors.hpp"
#include "mdim/graph.hpp"
#include "mdim/io.hpp"
#include "mdim/line_graph.hpp"
#include "mdim/metric.hpp"
#include "mdim/topologies.hpp"

#endif // MDIM_MDIM_HPP

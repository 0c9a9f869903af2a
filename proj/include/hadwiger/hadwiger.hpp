#ifndef HADWIGER_HADWIGER_HPP
#define HADWIGER_HADWIGER_HPP

#include "bounds.hpp"
#include "coloring.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "independent_set.hpp"
#include "minor_oracle.hpp"
#include "named_graphs.hpp"
#include "rational.hpp"
#include "vertex_set.hpp"

#endif // HADWIGER_HADWIGER_HPP

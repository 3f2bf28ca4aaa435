#pragma once

#include <eds/domination.hpp>
#include <eds/generators.hpp>
#include <eds/graph.hpp>
#include <eds/graph_io.hpp>
#include <eds/oracle.hpp>
#include <eds/patterns.hpp>
#include <eds/reduction.hpp>
#include <eds/solver.hpp>

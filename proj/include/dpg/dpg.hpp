#pragma once

#include "angular.hpp"
#include "constructions.hpp"
#include "dimension1.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "geometry.hpp"
#include "graph.hpp"
#include "model.hpp"
#include "ordering.hpp"
#include "rational.hpp"
#include "refute.hpp"
#include "reproduction.hpp"
#include "search.hpp"

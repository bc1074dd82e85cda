#pragma once

#include "mineo/entropy.hpp"
#include "mineo/error.hpp"
#include "mineo/exact.hpp"
#include "mineo/generators.hpp"
#include "mineo/io.hpp"
#include "mineo/lp_bound.hpp"
#include "mineo/multigraph.hpp"
#include "mineo/orient.hpp"
#include "mineo/polytope.hpp"
#include "mineo/reduction.hpp"

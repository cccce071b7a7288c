#pragma once

#include "quadlattice/integer.hpp"
#include "quadlattice/error.hpp"
#include "quadlattice/quadratic_core.hpp"
#include "quadlattice/ideal.hpp"
#include "quadlattice/splitting.hpp"
#include "quadlattice/lattice.hpp"
#include "quadlattice/oracle.hpp"
#include "quadlattice/export.hpp"

#pragma once

#include "indmorse/bigint.hpp"
#include "indmorse/chordal.hpp"
#include "indmorse/complex.hpp"
#include "indmorse/counts.hpp"
#include "indmorse/errors.hpp"
#include "indmorse/generators.hpp"
#include "indmorse/graph.hpp"
#include "indmorse/homology.hpp"
#include "indmorse/homotopy.hpp"
#include "indmorse/matching.hpp"
#include "indmorse/morse.hpp"
#include "indmorse/vertex_set.hpp"

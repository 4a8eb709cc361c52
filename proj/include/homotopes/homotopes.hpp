#pragma once

#include "homotopes/errors.hpp"
#include "homotopes/concepts.hpp"
#include "homotopes/rational.hpp"
#include "homotopes/upoly.hpp"
#include "homotopes/cyclotomic.hpp"
#include "homotopes/quadratic.hpp"
#include "homotopes/laurent.hpp"
#include "homotopes/matrix.hpp"
#include "homotopes/graph.hpp"
#include "homotopes/groupoid.hpp"
#include "homotopes/balgebra.hpp"
#include "homotopes/laurent_linalg.hpp"
#include "homotopes/homotope.hpp"
#include "homotopes/configurations.hpp"
#include "homotopes/hadamard.hpp"
#include "homotopes/perverse.hpp"

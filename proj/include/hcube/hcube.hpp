// Umbrella header: exact Fourier analysis, local weight enumerators,
// eigenfunctions and perfect colorings on the q-ary hypercube H(n,q).

#pragma once

#include "hcube/colorings.hpp"
#include "hcube/cyclotomic.hpp"
#include "hcube/eigen.hpp"
#include "hcube/enumerators.hpp"
#include "hcube/errors.hpp"
#include "hcube/fourier.hpp"
#include "hcube/homopoly.hpp"
#include "hcube/matrix.hpp"
#include "hcube/rational.hpp"
#include "hcube/space.hpp"

#pragma once

// Umbrella header for the whole library.

#include "zernike/aggregate.hpp"
#include "zernike/coeff_io.hpp"
#include "zernike/derivative.hpp"
#include "zernike/estimation.hpp"
#include "zernike/indexing.hpp"
#include "zernike/laplacian.hpp"
#include "zernike/matrix_kernels.hpp"
#include "zernike/radial.hpp"
#include "zernike/rational.hpp"

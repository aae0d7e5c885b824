#pragma once

// Umbrella header for the time-frequency bounds library.

#include "tfb/cohen.hpp"
#include "tfb/extreal.hpp"
#include "tfb/gaussians.hpp"
#include "tfb/grid.hpp"
#include "tfb/io.hpp"
#include "tfb/norms.hpp"
#include "tfb/quantization.hpp"
#include "tfb/sharpness.hpp"
#include "tfb/signal.hpp"
#include "tfb/tfarray.hpp"
#include "tfb/transforms.hpp"
#include "tfb/verify.hpp"

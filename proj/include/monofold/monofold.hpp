#pragma once

// Umbrella header: directional monoidal composition with per-axis
// operators and an interchange law, plus the DFT, Hadamard, and Walsh
// transforms realized as compositional folds.

#include "monofold/dft.hpp"
#include "monofold/errors.hpp"
#include "monofold/generators.hpp"
#include "monofold/hadamard.hpp"
#include "monofold/matrix.hpp"
#include "monofold/monoid.hpp"
#include "monofold/multi_axis.hpp"
#include "monofold/oracle.hpp"
#include "monofold/report.hpp"
#include "monofold/rng.hpp"
#include "monofold/walsh.hpp"

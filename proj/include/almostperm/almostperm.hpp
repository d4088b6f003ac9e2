#pragma once

#include "error.hpp"
#include "rational.hpp"
#include "surd.hpp"
#include "permutation.hpp"
#include "roots.hpp"
#include "equations.hpp"
#include "stability.hpp"
#include "sofic.hpp"
#include "oracle.hpp"
#include "planted.hpp"
#include "format.hpp"
#include "experiment.hpp"

#pragma once

#include "tasep/chain.hpp"
#include "tasep/formulas.hpp"
#include "tasep/linalg.hpp"
#include "tasep/mlq.hpp"
#include "tasep/permutation.hpp"
#include "tasep/polynomial.hpp"
#include "tasep/schubert.hpp"
#include "tasep/serialize.hpp"
#include "tasep/suites.hpp"

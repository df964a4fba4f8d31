#ifndef BOOLSYM_BOOLSYM_HPP
#define BOOLSYM_BOOLSYM_HPP

#include "boolsym/closure.hpp"
#include "boolsym/constructions.hpp"
#include "boolsym/decision.hpp"
#include "boolsym/decompose.hpp"
#include "boolsym/error.hpp"
#include "boolsym/function.hpp"
#include "boolsym/group.hpp"
#include "boolsym/io.hpp"
#include "boolsym/orbits.hpp"
#include "boolsym/permutation.hpp"
#include "boolsym/quotient.hpp"
#include "boolsym/sum_expression.hpp"
#include "boolsym/symmetry.hpp"

#endif  // BOOLSYM_BOOLSYM_HPP

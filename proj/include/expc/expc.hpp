#ifndef EXPC_EXPC_HPP
#define EXPC_EXPC_HPP

#include "expc/bipoly.hpp"
#include "expc/complexity.hpp"
#include "expc/diff_operator.hpp"
#include "expc/error.hpp"
#include "expc/experiment.hpp"
#include "expc/factor.hpp"
#include "expc/fglm.hpp"
#include "expc/field.hpp"
#include "expc/generators.hpp"
#include "expc/groebner.hpp"
#include "expc/io.hpp"
#include "expc/linalg.hpp"
#include "expc/linear_complexity.hpp"
#include "expc/sequence.hpp"
#include "expc/unipoly.hpp"

#endif

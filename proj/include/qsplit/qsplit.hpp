#pragma once

/**
 * @file qsplit.hpp
 * @brief Umbrella header for the whole library.
 */

#include "qsplit/arith.hpp"
#include "qsplit/bench.hpp"
#include "qsplit/classify.hpp"
#include "qsplit/decision.hpp"
#include "qsplit/dihedral.hpp"
#include "qsplit/errors.hpp"
#include "qsplit/fieldspec.hpp"
#include "qsplit/local.hpp"
#include "qsplit/oracle.hpp"
#include "qsplit/quadfields.hpp"
#include "qsplit/ramq.hpp"
#include "qsplit/verify.hpp"

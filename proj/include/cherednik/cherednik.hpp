#pragma once

// Convenience umbrella for the whole library.

#include "cherednik/errors.hpp"
#include "cherednik/fp.hpp"
#include "cherednik/upoly.hpp"
#include "cherednik/fq.hpp"
#include "cherednik/ratfunc.hpp"
#include "cherednik/matrix.hpp"
#include "cherednik/poly.hpp"
#include "cherednik/verma.hpp"
#include "cherednik/reflection.hpp"
#include "cherednik/dunkl.hpp"
#include "cherednik/contraform.hpp"
#include "cherednik/recursion.hpp"
#include "cherednik/textio.hpp"
#include "cherednik/store.hpp"
#include "cherednik/verify.hpp"
#include "cherednik/sweep.hpp"

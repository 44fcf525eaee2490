#ifndef SLHASH_SLHASH_HPP
#define SLHASH_SLHASH_HPP

#include "slhash/analysis.hpp"
#include "slhash/attacks.hpp"
#include "slhash/bigint.hpp"
#include "slhash/errors.hpp"
#include "slhash/fp.hpp"
#include "slhash/group.hpp"
#include "slhash/hasher.hpp"
#include "slhash/matrix.hpp"
#include "slhash/matrix_io.hpp"
#include "slhash/params.hpp"
#include "slhash/poly.hpp"
#include "slhash/table.hpp"
#include "slhash/tails.hpp"

#endif  // SLHASH_SLHASH_HPP

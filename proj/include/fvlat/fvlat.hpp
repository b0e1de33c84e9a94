#pragma once

#include "fvlat/boolean_algebra.hpp"
#include "fvlat/cone.hpp"
#include "fvlat/config.hpp"
#include "fvlat/error.hpp"
#include "fvlat/formal_sum.hpp"
#include "fvlat/hom.hpp"
#include "fvlat/lattice.hpp"
#include "fvlat/linalg.hpp"
#include "fvlat/parse.hpp"
#include "fvlat/rational.hpp"
#include "fvlat/riesz.hpp"
#include "fvlat/ring_lattice.hpp"
#include "fvlat/serialize.hpp"
#include "fvlat/stone.hpp"

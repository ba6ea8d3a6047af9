#pragma once

// Finite commutative rings, their spectra, and the tame/wild machinery of
// direct products: one include for the whole library.

#include "ringlab/boolean.hpp"
#include "ringlab/filters.hpp"
#include "ringlab/fixtures.hpp"
#include "ringlab/generate.hpp"
#include "ringlab/hom.hpp"
#include "ringlab/ideal.hpp"
#include "ringlab/localize.hpp"
#include "ringlab/oracle.hpp"
#include "ringlab/parse.hpp"
#include "ringlab/product.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/spectrum.hpp"
#include "ringlab/star_map.hpp"
#include "ringlab/util.hpp"
#include "ringlab/verify.hpp"

#pragma once

#include "badic/cyclotomic.hpp"
#include "badic/digitsums.hpp"
#include "badic/discrepancy.hpp"
#include "badic/haar.hpp"
#include "badic/hammersley.hpp"
#include "badic/norms.hpp"
#include "badic/rational.hpp"
#include "badic/sweep.hpp"

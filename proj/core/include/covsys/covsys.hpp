#pragma once

#include "covsys/bounds.hpp"
#include "covsys/congruence.hpp"
#include "covsys/construct.hpp"
#include "covsys/coverage.hpp"
#include "covsys/enumerate.hpp"
#include "covsys/error.hpp"
#include "covsys/field.hpp"
#include "covsys/irreducible.hpp"
#include "covsys/normalize.hpp"
#include "covsys/poly.hpp"
#include "covsys/rational.hpp"
#include "covsys/search.hpp"
#include "covsys/system_io.hpp"

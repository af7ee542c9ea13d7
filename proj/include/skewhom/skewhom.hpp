#pragma once

#include "skewhom/errors.hpp"
#include "skewhom/scalar.hpp"
#include "skewhom/linalg.hpp"
#include "skewhom/check.hpp"
#include "skewhom/algebra.hpp"
#include "skewhom/constructions.hpp"
#include "skewhom/representation.hpp"
#include "skewhom/cohomology.hpp"
#include "skewhom/se4geometry.hpp"
#include "skewhom/io.hpp"
#include "skewhom/suite.hpp"

#pragma once

#include "dhook/errors.hpp"
#include "dhook/rational.hpp"
#include "dhook/poset.hpp"
#include "dhook/d_structure.hpp"
#include "dhook/diagonals.hpp"
#include "dhook/hooks.hpp"
#include "dhook/rsk.hpp"
#include "dhook/verify.hpp"
#include "dhook/classical.hpp"
#include "dhook/catalog.hpp"
#include "dhook/io.hpp"

/*!
  \file aritygap.hpp
  \brief Umbrella header
*/

#pragma once

#include "census.hpp"
#include "classify.hpp"
#include "essential.hpp"
#include "fcnf.hpp"
#include "specifier.hpp"
#include "truth_table.hpp"

// SPDX-License-Identifier: Apache-2.0
//
// Umbrella header.

#ifndef MGCA_MGCA_HPP
#define MGCA_MGCA_HPP

#include "allocation.hpp"
#include "combinatorics.hpp"
#include "geometry.hpp"
#include "harness.hpp"
#include "outage.hpp"
#include "params.hpp"
#include "power.hpp"
#include "radio.hpp"
#include "rng.hpp"
#include "trends.hpp"

#endif  // MGCA_MGCA_HPP

// Umbrella header.
#pragma once

#include "lnarg/formula.hpp"
#include "lnarg/syntax.hpp"
#include "lnarg/prover.hpp"
#include "lnarg/saturation_oracle.hpp"
#include "lnarg/theory.hpp"
#include "lnarg/strict_rules.hpp"
#include "lnarg/arguments.hpp"
#include "lnarg/semantics.hpp"
#include "lnarg/strategy.hpp"
#include "lnarg/io.hpp"

#pragma once

#include "tsym/bigint.hpp"
#include "tsym/commands.hpp"
#include "tsym/eisenstein.hpp"
#include "tsym/eligibility.hpp"
#include "tsym/error.hpp"
#include "tsym/norm_equations.hpp"
#include "tsym/polylog.hpp"
#include "tsym/report.hpp"
#include "tsym/residue.hpp"
#include "tsym/symbols.hpp"

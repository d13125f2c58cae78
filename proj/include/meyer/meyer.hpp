#pragma once

#include "meyer/error.hpp"
#include "meyer/exactnum.hpp"
#include "meyer/symplectic.hpp"
#include "meyer/cocycle.hpp"
#include "meyer/varieties.hpp"
#include "meyer/localsig.hpp"
#include "meyer/ledger_io.hpp"

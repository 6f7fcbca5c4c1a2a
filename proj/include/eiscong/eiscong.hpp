#pragma once

#include "eiscong/combinatorial.hpp"
#include "eiscong/linsolve.hpp"
#include "eiscong/reproduce.hpp"

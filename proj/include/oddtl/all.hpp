#pragma once

#include "ratfunc.hpp"
#include "scalars.hpp"
#include "superlinalg.hpp"
#include "tl.hpp"

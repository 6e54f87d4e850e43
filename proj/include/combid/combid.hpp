#pragma once

#include "error.hpp"
#include "ring.hpp"
#include "matrix.hpp"
#include "digraph.hpp"
#include "walks.hpp"
#include "involution.hpp"
#include "lgv.hpp"
#include "cramer.hpp"
#include "sumident.hpp"

#pragma once

#include "lcalg/errors.hpp"
#include "lcalg/rational.hpp"
#include "lcalg/algebra.hpp"
#include "lcalg/tables.hpp"
#include "lcalg/cayley_dickson.hpp"
#include "lcalg/decomposition.hpp"
#include "lcalg/properties.hpp"
#include "lcalg/structure.hpp"
#include "lcalg/random.hpp"
#include "lcalg/lowdim.hpp"
#include "lcalg/search.hpp"
#include "lcalg/io.hpp"
#include "lcalg/report.hpp"
#include "lcalg/verify.hpp"

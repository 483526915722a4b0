#pragma once

#include "isharp/borromean.hpp"
#include "isharp/catalog.hpp"
#include "isharp/cone.hpp"
#include "isharp/formulas.hpp"
#include "isharp/knotcx.hpp"
#include "isharp/laurent.hpp"
#include "isharp/linalg.hpp"
#include "isharp/spec_io.hpp"

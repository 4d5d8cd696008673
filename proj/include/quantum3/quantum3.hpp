#pragma once

#include "quantum3/builtins.hpp"
#include "quantum3/category.hpp"
#include "quantum3/category_io.hpp"
#include "quantum3/diagram.hpp"
#include "quantum3/diagram_io.hpp"
#include "quantum3/fuzz.hpp"
#include "quantum3/generate.hpp"
#include "quantum3/links.hpp"
#include "quantum3/modular.hpp"
#include "quantum3/scalar.hpp"
#include "quantum3/state_sum.hpp"
#include "quantum3/surgery.hpp"
#include "quantum3/triangulation.hpp"
#include "quantum3/triangulation_io.hpp"
#include "quantum3/validate.hpp"

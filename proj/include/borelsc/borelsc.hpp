#pragma once

// Umbrella header for the library (the CLI lives in cli.hpp).

#include "algebra.hpp"
#include "canon.hpp"
#include "chars.hpp"
#include "cyclotomic.hpp"
#include "field.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "orbits.hpp"
#include "roots.hpp"

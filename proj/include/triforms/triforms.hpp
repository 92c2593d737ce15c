#pragma once

// Umbrella header: binary quadratic forms living inside primitive
// Pythagorean triangles, their representation laws, the parity-segregated
// forms, prime-triplet search and the generalized constrained family.

#include "arith.hpp"
#include "triples.hpp"
#include "forms.hpp"
#include "segregate.hpp"
#include "triplets.hpp"
#include "genforms.hpp"
#include "sweeps.hpp"
#include "render.hpp"

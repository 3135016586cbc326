#pragma once

// Umbrella header: the whole library.

#include "fpg/errors.hpp"

#include "fpg/exact/bilaurent.hpp"
#include "fpg/exact/integer.hpp"
#include "fpg/exact/laurent.hpp"
#include "fpg/exact/matrix.hpp"
#include "fpg/exact/number_field.hpp"
#include "fpg/exact/smith.hpp"
#include "fpg/exact/symbolic.hpp"
#include "fpg/exact/univariate.hpp"

#include "fpg/words/braid.hpp"
#include "fpg/words/endomorphism.hpp"
#include "fpg/words/group_ring.hpp"
#include "fpg/words/word.hpp"

#include "fpg/groups/consequence.hpp"
#include "fpg/groups/orbifold.hpp"
#include "fpg/groups/permutation.hpp"
#include "fpg/groups/presentation.hpp"
#include "fpg/groups/tietze.hpp"

#include "fpg/subgroups/coset_table.hpp"
#include "fpg/subgroups/reidemeister_schreier.hpp"
#include "fpg/subgroups/todd_coxeter.hpp"

#include "fpg/alexander/classical.hpp"
#include "fpg/alexander/fox.hpp"
#include "fpg/alexander/representation.hpp"
#include "fpg/alexander/wada.hpp"

#include "fpg/quotients/homs.hpp"

#include "fpg/topology/cw.hpp"
#include "fpg/topology/formulas.hpp"
#include "fpg/topology/homology.hpp"
#include "fpg/topology/threshold.hpp"
#include "fpg/topology/zvk.hpp"

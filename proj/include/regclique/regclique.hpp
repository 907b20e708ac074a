#pragma once

#include "regclique/audit.hpp"
#include "regclique/bitset.hpp"
#include "regclique/claims.hpp"
#include "regclique/cliques.hpp"
#include "regclique/construction.hpp"
#include "regclique/distance.hpp"
#include "regclique/graph.hpp"
#include "regclique/graph6.hpp"
#include "regclique/isomorphism.hpp"
#include "regclique/regularity.hpp"
#include "regclique/report.hpp"

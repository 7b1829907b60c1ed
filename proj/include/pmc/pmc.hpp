#ifndef PMC_PMC_HPP
#define PMC_PMC_HPP

#include "pmc/bench.hpp"
#include "pmc/enumerators.hpp"
#include "pmc/families.hpp"
#include "pmc/graph.hpp"
#include "pmc/graph_io.hpp"
#include "pmc/metrics.hpp"
#include "pmc/oracle.hpp"
#include "pmc/pmc_check.hpp"
#include "pmc/separators.hpp"
#include "pmc/validate.hpp"
#include "pmc/vertex_set.hpp"

#endif  // PMC_PMC_HPP

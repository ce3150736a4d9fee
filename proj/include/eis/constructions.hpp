#pragma once

#include "eis/graph.hpp"

#include <string>
#include <vector>

namespace eis {

struct ConstructionResult {
    CycleStarSpec spec;
    VertexLabeling labeling;  // against build_cycle_star(spec)
    int claimed_es = 0;
    std::string case_tag;
    // Deviations from the literal published formulas, if any.
    std::vector<std::string> repairs;
};

// Exact es(CS(k, l)) for 3 <= k <= 7 and l >= 1.
int closed_form_es(CycleStarSpec spec);

// Explicit edge irregular labeling with span closed_form_es(spec). The result
// is verified before it is returned; a failure throws ConstructionError.
ConstructionResult construct_labeling(CycleStarSpec spec);

}  // namespace eis

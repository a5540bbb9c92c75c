#pragma once

#include "moperad/chord.hpp"
#include "moperad/par_groupoids.hpp"
#include "moperad/solver.hpp"

// single-header nlohmann/json from vendor/
#include <json.hpp>

namespace moperad {

using Json = nlohmann::json;

Json uea_to_json(const UeaElement& u);
UeaElement uea_from_json(const Json& j, const HandlePtr& h);

Json presentation_to_json(const LiePresentation& p);
Json lie_to_json(const LieElement& a);
LieElement lie_from_json(const Json& j, const HandlePtr& h);

Json braid_to_json(const BraidWord& w);
BraidWord braid_from_json(const Json& j);

Json morword_to_json(const MorWord& w);
Json pacd_to_json(const PaCDGammaMorphism& m);

// torsor element files: {"kind", "N", "certified_degree", scalars, series}
Json assoc_to_json(const AssocTuple& t, int certified_degree);
Json cycassoc_to_json(const CycAssocTuple& t, int certified_degree);
Json gt_to_json(const GTElement& a);
Json gtm_to_json(const GTMElement& a);
Json grt_to_json(const GRTElement& a);
Json grtgamma_to_json(const GRTGammaElement& a);

struct TorsorFile {
    std::string kind;  // assoc|cycassoc|gt|gtm|grt|grtgamma
    int N = 1;
    int trunc = 0;
    int certified_degree = 0;
    std::optional<AssocTuple> assoc;
    std::optional<CycAssocTuple> cycassoc;
    std::optional<GTElement> gt;
    std::optional<GTMElement> gtm;
    std::optional<GRTElement> grt;
    std::optional<GRTGammaElement> grtgamma;
};
TorsorFile torsor_from_json(const Json& j);

Json solve_report_to_json(const SolveReport& r);
Json validation_to_json(const ValidationReport& r);

}  // namespace moperad

#include "avw/report.hpp"

namespace avw {

Json profile_to_json(const Profile& p) {
    Json out = Json::array();
    for (const auto& id : p.list()) out.push_back(id.name());
    return out;
}

Json verdict_to_json(const Verdict& v) {
    Json j;
    j["identity"] = v.identity.name();
    j["holds"] = v.holds;
    j["authoritative"] = v.authoritative;
    Json w = Json::array();
    for (const auto& x : v.witness) w.push_back(element_to_json(x));
    j["witness"] = w;
    j["value"] = v.value ? element_to_json(*v.value) : Json(nullptr);
    j["residual_monomial"] = v.residual ? Json(*v.residual) : Json(nullptr);
    return j;
}

Json iso_to_json(const std::optional<IsoWitness>& w) {
    Json j;
    j["isomorphic"] = w.has_value();
    if (w) {
        j["p"] = element_to_json(w->p);
        j["eps"] = w->eps;
        j["delta"] = w->delta;
    }
    return j;
}

Json label_to_json(const ClassLabel& l) {
    Json j;
    j["label"] = l.name();
    Json inv = Json::object();
    inv["family"] = l.family;
    switch (l.pattern) {
        case ClassLabel::Pattern::Base: inv["pattern"] = "base"; break;
        case ClassLabel::Pattern::PureImaginaryPair: inv["pattern"] = "pure_imaginary_pair"; break;
        case ClassLabel::Pattern::CircleFamily:
            inv["pattern"] = "circle";
            inv["abs_cos_alpha"] = to_string(l.alpha_cos);
            break;
        case ClassLabel::Pattern::Unclassified: inv["pattern"] = "unclassified"; break;
    }
    j["invariants"] = inv;
    j["profile"] = profile_to_json(l.profile);
    return j;
}

Json classification_to_json(const Classification& c) {
    Json j = label_to_json(c.label);
    j["profile_consistent"] = c.profile_consistent;
    if (c.witness) j["witness"] = iso_to_json(c.witness);
    return j;
}

Json subalgebra_report_to_json(const SubalgebraReport& r) {
    Json j;
    Json crit = Json::array();
    if (r.criteria)
        for (std::size_t k = 0; k < 4; ++k)
            if ((*r.criteria)[k]) crit.push_back(plane_name(kPlanes[k]));
    j["dim2_embeddings"] = r.criteria ? crit : Json(nullptr);
    Json found = Json::array();
    for (const auto& d : r.discovered) {
        Json b = Json::array();
        for (const auto& v : d.basis) b.push_back(element_to_json(v));
        found.push_back({{"dim", d.basis.size()}, {"type", plane_name(d.type)}, {"basis", b}});
    }
    j["discovered_bases"] = found;
    return j;
}

}  // namespace avw

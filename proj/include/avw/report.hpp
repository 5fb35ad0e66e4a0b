#pragma once

// Machine-readable forms of verdicts, isomorphism answers, classifications
// and subalgebra reports. Rationals are always "p/q" strings.

#include "avw/classify.hpp"
#include "avw/identity.hpp"
#include "avw/spec_json.hpp"
#include "avw/structure.hpp"
#include "avw/subalgebra.hpp"

namespace avw {

Json profile_to_json(const Profile& p);
Json verdict_to_json(const Verdict& v);
/// {"isomorphic": bool, "p": [...], "eps": 1, "delta": 1}
Json iso_to_json(const std::optional<IsoWitness>& w);
/// {"label": "...", "invariants": {...}, "profile": [...]}
Json label_to_json(const ClassLabel& l);
Json classification_to_json(const Classification& c);
Json subalgebra_report_to_json(const SubalgebraReport& r);

}  // namespace avw

#ifndef LFMRA_IO_HPP
#define LFMRA_IO_HPP

#include <string>
#include <utility>

#include <json.hpp>

#include "lfmra/approx.hpp"
#include "lfmra/synthesis.hpp"

namespace lfmra {

using nlohmann::json;

/// "d0,d1,..." name of a GF(p^s) element, constant coefficient first.
std::string vertex_name(const FieldParams& f, int idx);
int vertex_parse(const FieldParams& f, const std::string& name);

json field_to_json(const FieldParams& f);
FieldParams field_from_json(const json& j);

json element_to_json(const FieldParams& f, const LocalElem& a);
LocalElem element_from_json(const FieldParams& f, const json& j);

json character_to_json(const FieldParams& f, const Character& chi);
Character character_from_json(const FieldParams& f, const json& j);

json coset_to_json(const FieldParams& f, const CosetId& c);
CosetId coset_from_json(const FieldParams& f, const json& j);

/// tree.json embeds its field: {"field": {...}, "parent": {"1,1": "0,0", ...}}
json tree_to_json(const FieldParams& f, const RootedTree& t);
std::pair<FieldParams, RootedTree> tree_from_json(const json& j);

json cyclo_to_json(const Cyclo& v);
Cyclo cyclo_from_json(int p, const json& j);

json mask_to_json(const FieldParams& f, const MaskTable& m);
MaskTable mask_from_json(const FieldParams& f, const json& j);

json spectrum_to_json(const FieldParams& f, const SpectrumTable& s);
SpectrumTable spectrum_from_json(const FieldParams& f, const json& j);

json coeffs_to_json(const FieldParams& f, const CoeffTable& c);

json report_to_json(const FieldParams& f, const RootedTree& t, const Report& r);

json phi_to_json(const FieldParams& f, const StepFn& phi);
/// header "digits,value_re_exact"; vertices joined by '|' inside the first
/// column, exact p-power rationals as "n*p^-m", other values as the full
/// cyclotomic tuple.
std::string phi_to_csv(const FieldParams& f, const StepFn& phi);

/// Edge lambda file: {"1,1": 1, ...} for exact root-of-unity exponents, or
/// {"1,1": {"phase": 0.25}, ...} for the non-certifying floating mode.
struct LambdaFile {
    LambdaAssignment exact;
    PhaseAssignment phases;
    bool floating = false;
};
LambdaFile lambdas_from_json(const FieldParams& f, const json& j);

} // namespace lfmra

#endif

#include "elp/report.hpp"

namespace elp {

Json to_json(const Interpretation& i) {
    Json out = Json::array();
    for (const auto& a : i) out.push_back(a.to_string());
    return out;
}

Json to_json(const WorldView& w) {
    Json out = Json::array();
    for (const auto& i : w) out.push_back(to_json(i));
    return out;
}

Json to_json(const std::set<WorldView>& c) {
    Json out = Json::array();
    for (const auto& w : c) out.push_back(to_json(w));
    return out;
}

Json to_json(const std::set<SubjectiveLiteral>& e) {
    Json out = Json::array();
    for (const auto& l : e) out.push_back(l.to_string());
    return out;
}

std::string to_string(const std::set<SubjectiveLiteral>& e) {
    std::string out = "{";
    bool first = true;
    for (const auto& l : e) {
        if (!first) out += ", ";
        out += l.to_string();
        first = false;
    }
    return out + "}";
}

Json report_to_json(const EquivalenceReport& rep) {
    Json out;
    out["program"] = rep.program_id;
    out["semantics"] = to_string(rep.semantics);
    Json u = Json::array();
    for (const auto& a : rep.u) u.push_back(a.to_string());
    out["splitting_set"] = u;
    out["direct"] = to_json(rep.direct);
    out["esp"] = to_json(rep.esp);
    out["tdespb"] = to_json(rep.tdespb);
    out["tdesp"] = to_json(rep.tdesp);
    out["verdicts"] = {
        {"esp_eq_direct", rep.esp_eq_direct()},
        {"tdespb_eq_direct", rep.tdespb_eq_direct()},
        {"tdesp_eq_direct", rep.tdesp_eq_direct()},
        {"tdespb_eq_esp", rep.tdespb_eq_esp()},
    };
    Json traces = Json::array();
    for (const auto& t : rep.traces) {
        Json tr;
        tr["top_world_view"] = to_json(t.top_wv);
        tr["es"] = to_json(t.req.es);
        tr["ec"] = to_json(t.req.ec);
        tr["rq"] = to_json(t.req.rq);
        traces.push_back(tr);
    }
    out["traces"] = traces;
    return out;
}

} // namespace elp

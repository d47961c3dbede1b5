#pragma once

#include <json.hpp>

#include "qforms/form_parse.hpp"
#include "qforms/geometry.hpp"
#include "qforms/graphinv.hpp"

namespace qforms {

inline nlohmann::json to_json(const FormInvariants& inv) {
    nlohmann::json hasse = nlohmann::json::object();
    for (const auto& [v, e] : inv.hasse) hasse[v.str()] = e;
    const nlohmann::json det =
        inv.det_class.fits_slong_p()
            ? nlohmann::json(inv.det_class.get_si())
            : nlohmann::json(inv.det_class.get_str());
    return {{"dim", inv.dim},
            {"det_class", det},
            {"signature", {inv.signature.first, inv.signature.second}},
            {"hasse", hasse}};
}

inline nlohmann::json to_json(const GraphReport& r) {
    return {{"form", form_to_string(r.form)},
            {"nonempty", r.nonempty},
            {"clique", r.clique_number},
            {"connectivity", to_string(r.connectivity)},
            {"max_simplex", r.max_simplex}};
}

inline nlohmann::json to_json(const PointSet& ps) {
    nlohmann::json points = nlohmann::json::array();
    for (const Vec& p : ps.points) {
        nlohmann::json row = nlohmann::json::array();
        for (const Rational& x : p) row.push_back(to_string(x));
        points.push_back(row);
    }
    return {{"dim", ps.dim}, {"points", points}};
}

inline nlohmann::json to_json(const DistanceReport& r) {
    nlohmann::json sides = nlohmann::json::array();
    for (const auto& row : r.side_lengths) {
        nlohmann::json jrow = nlohmann::json::array();
        for (const auto& len : row)
            jrow.push_back(len ? nlohmann::json(to_string(*len)) : nlohmann::json());
        sides.push_back(jrow);
    }
    return {{"all_rational", r.all_rational},
            {"side_lengths", sides},
            {"affinely_independent", r.affinely_independent},
            {"rank", r.rank}};
}

}  // namespace qforms

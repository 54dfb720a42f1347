#include "nanoban/json_io.hpp"

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include <json.hpp>
#endif
#include <sstream>

namespace nanoban {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json vars_json(const std::vector<VarSpec>& vars) {
    ordered_json out = ordered_json::array();
    for (const auto& v : vars) {
        out.push_back({{"name", v.name},
                       {"denom", v.denom},
                       {"min_exp", v.min_exp},
                       {"max_exp", v.max_exp}});
    }
    return out;
}

} // namespace

std::string series_to_json(const MultiSeries& s) {
    ordered_json out;
    out["vars"] = vars_json(s.vars());
    ordered_json terms = ordered_json::array();
    for (const auto& [e, c] : s.terms()) { // std::map: already lexicographic
        ordered_json t = ordered_json::array();
        t.push_back(e);
        t.push_back(c.get_num().get_str());
        t.push_back(c.get_den().get_str());
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    return out.dump(2) + "\n";
}

std::string series_to_csv(const MultiSeries& s) {
    std::ostringstream os;
    for (const auto& v : s.vars()) os << v.name << ",";
    os << "numerator,denominator\n";
    for (const auto& [e, c] : s.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (s.vars()[i].denom == 1) os << e[i];
            else os << e[i] << "/" << s.vars()[i].denom;
            os << ",";
        }
        os << c.get_num().get_str() << "," << c.get_den().get_str() << "\n";
    }
    return os.str();
}

std::string coeff_table_to_json(const CoeffTable& t) {
    ordered_json out;
    out["a_max"] = t.a_max();
    out["m_max"] = t.m_max();
    out["sign_convention"] = {{"sigma", t.sigma()},
                              {"branch", "denominator squared on the half-integer lattice, "
                                         "kernel expanded in non-negative powers of y"},
                              {"b_symmetric", t.b_symmetric()},
                              {"c_symmetric", t.c_symmetric()},
                              {"conifold_layer", "c(-1,m) = -m"}};
    ordered_json c = ordered_json::array();
    for (const auto& [key, v] : t.c_map())
        c.push_back({key.first, key.second, v.get_str()});
    out["c"] = std::move(c);
    ordered_json b = ordered_json::array();
    for (const auto& [key, v] : t.b_map())
        b.push_back({key.first, key.second, v.get_str()});
    out["b"] = std::move(b);
    return out.dump(2) + "\n";
}

std::string cdisc_to_json(const CoeffByDiscriminant& c) {
    ordered_json out;
    out["genus"] = c.genus;
    ordered_json entries = ordered_json::array();
    for (const auto& [d, v] : c.c)
        entries.push_back({d, v.get_num().get_str(), v.get_den().get_str()});
    out["c"] = std::move(entries);
    return out.dump(2) + "\n";
}

std::string intq_to_json(const IntQSeries& s, const std::string& name) {
    ordered_json out;
    out["name"] = name;
    out["cap"] = s.cap;
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : s.a) coeffs.push_back(c.get_str());
    out["coefficients"] = std::move(coeffs);
    return out.dump(2) + "\n";
}

std::string cusp_form_to_json(const CuspForm& f, const std::string& name) {
    ordered_json out;
    out["name"] = name;
    out["level"] = f.level;
    out["weight"] = f.weight;
    out["cap"] = f.series.cap;
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : f.series.a) coeffs.push_back(c.get_str());
    out["coefficients"] = std::move(coeffs);
    return out.dump(2) + "\n";
}

std::string gv_table_to_json(const GVTable& t) {
    ordered_json out;
    out["a_max"] = t.a_max;
    ordered_json entries = ordered_json::array();
    for (const auto& [key, v] : t.n)
        entries.push_back({key.first, key.second, v.get_str()});
    out["n"] = std::move(entries);
    return out.dump(2) + "\n";
}

std::string report_to_json(const CheckReport& r) {
    ordered_json out;
    out["title"] = r.title;
    out["pass"] = r.all_pass();
    out["failures"] = r.failures();
    ordered_json items = ordered_json::array();
    for (const auto& i : r.items)
        items.push_back({{"name", i.name}, {"pass", i.pass}, {"detail", i.detail}});
    out["items"] = std::move(items);
    out["notes"] = r.notes;
    return out.dump(2) + "\n";
}

} // namespace nanoban

#include "chorddse/json_io.hpp"

#include <stdexcept>

namespace chorddse {

Json diagram_to_json(const ChordDiagram& c) {
    Json j;
    j["pairs"] = Json::array();
    for (const auto& [x, y] : c.pairs()) j["pairs"].push_back(Json::array({x, y}));
    j["decorations"] = c.decorations();
    return j;
}

ChordDiagram diagram_from_json(const Json& j) {
    std::vector<PointPair> pairs;
    for (const auto& p : j.at("pairs")) pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    std::vector<int> dec;
    if (j.contains("decorations")) dec = j["decorations"].get<std::vector<int>>();
    return ChordDiagram::create(std::move(pairs), std::move(dec));
}

namespace {

std::string symbol_key(const Symbol& s) {
    return "a[" + std::to_string(s.k) + "," + std::to_string(s.i) + "]";
}

Symbol symbol_from_key(const std::string& key) {
    if (key.size() < 6 || key.substr(0, 2) != "a[" || key.back() != ']')
        throw std::invalid_argument("bad symbol key '" + key + "'");
    auto comma = key.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("bad symbol key '" + key + "'");
    Symbol s;
    s.k = std::stoi(key.substr(2, comma - 2));
    s.i = std::stoi(key.substr(comma + 1, key.size() - comma - 2));
    return s;
}

}  // namespace

Json polynomial_to_json(const SymbolicPolynomial& p) {
    Json terms = Json::array();
    for (const auto& [mono, coeff] : p.terms()) {
        Json term;
        term["coeff"] = rational_to_string(coeff);
        Json vars = Json::object();
        for (const auto& [sym, e] : mono.exponents()) vars[symbol_key(sym)] = e;
        term["vars"] = vars;
        terms.push_back(term);
    }
    return terms;
}

SymbolicPolynomial polynomial_from_json(const Json& j) {
    SymbolicPolynomial p;
    for (const auto& term : j) {
        Rational coeff = rational_from_string(term.at("coeff").get<std::string>());
        SymbolMonomial mono;
        if (term.contains("vars")) {
            for (const auto& [key, e] : term["vars"].items())
                mono *= SymbolMonomial::var(symbol_from_key(key), e.get<int>());
        }
        p += SymbolicPolynomial::monomial(mono, coeff);
    }
    return p;
}

Json xseries_to_json(const XSeries& s) {
    Json j;
    j["x_order"] = s.order();
    Json coeffs = Json::array();
    for (int m = 0; m <= s.order(); ++m) {
        if (s.at(m).is_zero()) continue;
        Json entry;
        entry["m"] = m;
        entry["poly"] = polynomial_to_json(s.at(m));
        coeffs.push_back(entry);
    }
    j["coefficients"] = coeffs;
    return j;
}

Json biseries_to_json(const BiSeries& s) {
    Json j;
    j["x_order"] = s.x_order();
    j["l_order"] = s.l_order();
    Json coeffs = Json::array();
    for (int m = 0; m <= s.x_order(); ++m) {
        for (int l = 0; l <= s.l_order(); ++l) {
            if (s.at(m, l).is_zero()) continue;
            Json entry;
            entry["key"] = Json::array({m, l});
            entry["poly"] = polynomial_to_json(s.at(m, l));
            coeffs.push_back(entry);
        }
    }
    j["coefficients"] = coeffs;
    return j;
}

Json tree_to_json(const LabeledTree& t) {
    if (t.is_leaf()) return Json(t.label());
    return Json::array({tree_to_json(t.left()), tree_to_json(t.right())});
}

LabeledTree tree_from_json(const Json& j) {
    if (j.is_number_integer()) return LabeledTree::leaf(j.get<int>());
    if (j.is_array() && j.size() == 2)
        return LabeledTree::branch(tree_from_json(j[0]), tree_from_json(j[1]));
    throw std::invalid_argument("tree_from_json: expected integer or pair");
}

Json identity_report_to_json(const IdentityReport& r) {
    Json j;
    j["identity"] = r.identity;
    j["bound"] = r.bound;
    j["instances"] = r.instances;
    j["holds"] = r.holds;
    if (!r.counterexample.empty()) j["counterexample"] = r.counterexample;
    return j;
}

Json dse_spec_to_json(const DseSpec& spec) {
    Json j;
    j["s"] = rational_to_string(spec.s);
    j["x_order"] = spec.x_order;
    j["l_order"] = spec.l_order;
    Json prims = Json::array();
    for (const Primitive& p : spec.primitives) {
        Json pj;
        pj["k"] = p.loop_order;
        if (p.symbolic) {
            pj["coeffs"] = "symbolic";
        } else {
            Json list = Json::array();
            for (const Rational& c : p.coeffs) list.push_back(rational_to_string(c));
            pj["coeffs"] = list;
        }
        prims.push_back(pj);
    }
    j["primitives"] = prims;
    return j;
}

DseSpec dse_spec_from_json(const Json& j) {
    DseSpec spec;
    spec.s = rational_from_string(j.at("s").get<std::string>());
    spec.x_order = j.value("x_order", 5);
    spec.l_order = j.value("l_order", spec.x_order);
    for (const auto& pj : j.at("primitives")) {
        Primitive p;
        p.loop_order = pj.at("k").get<int>();
        const auto& coeffs = pj.at("coeffs");
        if (coeffs.is_string()) {
            if (coeffs.get<std::string>() != "symbolic")
                throw std::invalid_argument("dse spec: coeffs must be 'symbolic' or a list");
            p.symbolic = true;
        } else {
            p.symbolic = false;
            for (const auto& c : coeffs) p.coeffs.push_back(rational_from_string(c.get<std::string>()));
        }
        spec.primitives.push_back(std::move(p));
    }
    return spec;
}

}  // namespace chorddse

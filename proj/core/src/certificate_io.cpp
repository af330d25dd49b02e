#include "hcgap/certificate_io.hpp"

#include "json.hpp"

namespace hcgap {

namespace {

using Json = nlohmann::ordered_json;

Json verdict_to_node(const Verdict& v) {
    Json node;
    node["criterion"] = std::string(to_string(v.criterion));
    node["applicable"] = v.applicable;
    node["holds"] = v.holds;
    node["geometric_fallback"] = v.geometric_fallback;
    node["which"] = v.which;
    Json checks = Json::array();
    for (const Check& c : v.checks) {
        Json row;
        row["name"] = c.name;
        row["lhs"] = c.lhs;
        row["rhs"] = c.rhs;
        row["pass"] = c.pass;
        checks.push_back(std::move(row));
    }
    node["checks"] = std::move(checks);
    node["notes"] = v.notes;
    return node;
}

Verdict verdict_from_node(const Json& node) {
    Verdict v;
    v.criterion = criterion_from_string(node.at("criterion").get<std::string>());
    v.applicable = node.at("applicable").get<bool>();
    v.holds = node.at("holds").get<bool>();
    v.geometric_fallback = node.at("geometric_fallback").get<bool>();
    v.which = node.at("which").get<std::string>();
    for (const Json& row : node.at("checks")) {
        Check c;
        c.name = row.at("name").get<std::string>();
        c.lhs = row.at("lhs").get<Int>();
        c.rhs = row.at("rhs").get<Int>();
        c.pass = row.at("pass").get<bool>();
        v.checks.push_back(std::move(c));
    }
    for (const Json& s : node.at("notes")) v.notes.push_back(s.get<std::string>());
    return v;
}

}  // namespace

std::string certificate_to_json(const Certificate& cert, int indent) {
    Json doc;
    doc["n"] = cert.surf.n;
    doc["p"] = cert.surf.p;
    doc["d"] = cert.target_d;
    doc["g"] = cert.target_g;
    doc["route"] = std::string(to_string(cert.route));
    Json base;
    if (cert.base.gp) {
        Json gp;
        gp["d"] = cert.base.gp->d;
        gp["r"] = cert.base.gp->r;
        gp["theta2"] = cert.base.gp->theta2;
        base["gp"] = std::move(gp);
        base["eps"] = cert.base.eps;
    } else {
        base["a"] = cert.base.a;
        base["u"] = cert.base.u;
        base["eps"] = cert.base.eps;
    }
    doc["base"] = std::move(base);
    doc["counts"] = cert.counts;
    Json cls;
    cls["a"] = cert.cls.a;
    cls["b"] = cert.cls.b;
    doc["class"] = std::move(cls);
    Json squares = Json::array();
    for (const FourSquares& fs : cert.squares_used)
        squares.push_back(Json::array({fs.c1, fs.c2, fs.c3, fs.c4}));
    doc["squares"] = std::move(squares);
    doc["verdict"] = cert.verdict ? verdict_to_node(*cert.verdict) : Json(nullptr);
    return doc.dump(indent) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("certificate_from_json: ") + e.what());
    }
    Certificate cert;
    try {
        cert.surf = make_surface(doc.at("n").get<Int>(), doc.at("p").get<Int>(), true);
        cert.target_d = doc.at("d").get<Int>();
        cert.target_g = doc.at("g").get<Int>();
        cert.route = route_from_string(doc.at("route").get<std::string>());
        const Json& base = doc.at("base");
        cert.base.eps = base.at("eps").get<int>();
        if (base.contains("gp")) {
            GPCoords gp;
            gp.d = base.at("gp").at("d").get<Int>();
            gp.r = base.at("gp").at("r").get<Int>();
            for (const Json& t : base.at("gp").at("theta2")) gp.theta2.push_back(t.get<Int>());
            cert.base.gp = std::move(gp);
        } else {
            cert.base.a = base.at("a").get<Int>();
            cert.base.u = base.at("u").get<Int>();
        }
        const Json& counts = doc.at("counts");
        if (counts.size() != 6)
            throw std::invalid_argument("counts must have six entries");
        for (std::size_t i = 0; i < 6; ++i) cert.counts[i] = counts[i].get<Int>();
        cert.cls.a = doc.at("class").at("a").get<Int>();
        for (const Json& v : doc.at("class").at("b")) cert.cls.b.push_back(v.get<Int>());
        for (const Json& sq : doc.at("squares")) {
            if (sq.size() != 4)
                throw std::invalid_argument("square tuples must have four entries");
            cert.squares_used.push_back(
                {sq[0].get<Int>(), sq[1].get<Int>(), sq[2].get<Int>(), sq[3].get<Int>()});
        }
        if (!doc.at("verdict").is_null())
            cert.verdict = verdict_from_node(doc.at("verdict"));
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("certificate_from_json: ") + e.what());
    }
    if (static_cast<Int>(cert.cls.b.size()) != cert.surf.point_count())
        throw std::invalid_argument("certificate_from_json: class not sized for the surface");
    return cert;
}

std::string label_to_json(const DomainLabel& label, Int n, Int d, Int g, int indent) {
    Json doc;
    doc["n"] = n;
    doc["d"] = d;
    doc["g"] = g;
    doc["tag"] = std::string(to_string(label.tag));
    doc["p"] = label.p;
    Json w;
    auto put = [&w](const char* key, const std::optional<Int>& v) {
        if (v)
            w[key] = *v;
        else
            w[key] = Json(nullptr);
    };
    put("pi0", label.witnesses.pi0);
    put("B", label.witnesses.big_b);
    put("alpha_lo", label.witnesses.alpha_lo);
    put("alpha_hi", label.witnesses.alpha_hi);
    doc["witnesses"] = std::move(w);
    return doc.dump(indent) + "\n";
}

}  // namespace hcgap

#include "tilinglab/spec_json.hpp"

#include <fstream>
#include <sstream>

namespace tilinglab {

namespace {

int geti(const json& j, const char* key, int def) {
    if (!j.contains(key)) return def;
    if (!j.at(key).is_number_integer()) throw spec_error(std::string("field ") + key + " must be an integer");
    return j.at(key).get<int>();
}

int req(const json& j, const char* key) {
    if (!j.contains(key)) throw spec_error(std::string("missing field ") + key);
    return geti(j, key, 0);
}

mpq_class rat_from(const json& j) {
    if (j.is_number_integer()) return mpq_class(j.get<long>());
    if (!j.is_string()) throw spec_error("rational must be an integer or a \"p/q\" string");
    mpq_class r;
    if (r.set_str(j.get<std::string>(), 10) != 0) throw spec_error("bad rational " + j.get<std::string>());
    if (r.get_den() == 0) throw spec_error("zero denominator");
    r.canonicalize();
    return r;
}

WeightFrame frame_from(const json& j, int axis) {
    if (!j.contains("weights") || j.at("weights") == "standard") {
        WeightFrame f;
        f.axis_offset2 = axis;
        return f;
    }
    const json& w = j.at("weights");
    if (w == "symbolic") return WeightFrame::symbolic(axis);
    if (w.is_object()) return WeightFrame::numeric(axis, rat_from(w.value("X", json(1))), rat_from(w.value("Y", json(1))));
    throw spec_error("weights must be \"standard\", \"symbolic\" or {\"X\":..,\"Y\":..}");
}

std::set<int> ints_from(const json& j, const char* key) {
    std::set<int> s;
    if (!j.contains(key)) return s;
    if (!j.at(key).is_array()) throw spec_error(std::string(key) + " must be an array");
    for (const json& v : j.at(key)) {
        if (!v.is_number_integer()) throw spec_error(std::string(key) + " must hold integers");
        s.insert(v.get<int>());
    }
    return s;
}

Dir dir_from(const json& j) {
    std::string s = j.get<std::string>();
    if (s == "h") return Dir::Horizontal;
    if (s == "u") return Dir::Up;
    if (s == "d") return Dir::Down;
    throw spec_error("barrier direction must be h, u or d");
}

const char* dir_str(Dir d) {
    switch (d) {
        case Dir::Horizontal: return "h";
        case Dir::Up: return "u";
        case Dir::Down: return "d";
    }
    return "?";
}

}  // namespace

json labels_to_json(const LabelSet& s) { return json(std::vector<int>(s.begin(), s.end())); }

LabelSet labels_from_json(const json& j) {
    LabelSet s;
    if (!j.is_array()) throw spec_error("label set must be an array");
    for (const json& v : j) {
        if (!v.is_number_integer()) throw spec_error("labels must be integers (doubled)");
        s.insert(v.get<int>());
    }
    return s;
}

json hspec_to_json(const HSpec& s) {
    return json{{"type", s.prime ? "H'" : "H"}, {"m", s.m}, {"n", s.n}, {"a", s.a}, {"b", s.b}, {"c", s.c},
                {"L1", labels_to_json(s.L1)}, {"R1", labels_to_json(s.R1)}, {"B", labels_to_json(s.B)}};
}

HSpec hspec_from_json(const json& j) {
    HSpec s;
    std::string t = j.value("type", "H");
    if (t == "H'" || t == "Hp") s.prime = true;
    else if (t != "H") throw spec_error("intrusion hexagon type must be H or H'");
    s.m = req(j, "m");
    s.n = req(j, "n");
    s.a = req(j, "a");
    s.b = req(j, "b");
    s.c = req(j, "c");
    s.L1 = ints_from(j, "L1");
    s.R1 = ints_from(j, "R1");
    s.B = ints_from(j, "B");
    s.validate();
    return s;
}

json family_to_json(const FamilySpec& fs) {
    return json{{"family", std::string(1, family_char(fs.family))}, {"x", fs.x}, {"y", fs.y},
                {"z", fs.z}, {"w", fs.w}, {"arms", fs.arms}};
}

FamilySpec family_from_json(const json& j) {
    FamilySpec fs;
    std::string f = j.at("family").get<std::string>();
    if (f.size() != 1) throw spec_error("family must be one of A..E");
    fs.family = family_from_char(f[0]);
    fs.x = req(j, "x");
    fs.y = req(j, "y");
    fs.z = req(j, "z");
    fs.w = req(j, "w");
    if (!j.contains("arms")) throw spec_error("missing field arms");
    fs.arms = j.at("arms").get<std::vector<int>>();
    if (fs.arms.empty()) throw spec_error("arms must be nonempty");
    fs.validate();
    return fs;
}

Region region_from_json(const json& j) {
    if (!j.is_object()) throw spec_error("region spec must be a JSON object");
    try {
        if (j.contains("family")) {
            FamilySpec fs = family_from_json(j);
            return j.value("collapsed", false) ? family_collapsed(fs) : family_region(fs);
        }
        std::string t = j.value("type", "");
        if (t == "H" || t == "H'" || t == "Hp") return hex_intrusion(hspec_from_json(j));
        if (t == "hexagon") {
            int k = geti(j, "k", 0);
            return hexagon(req(j, "a"), req(j, "b"), req(j, "c"), frame_from(j, -k));
        }
        if (t == "S") return trapezoid_S(req(j, "x"), req(j, "y"), ints_from(j, "Z"));
        if (t == "S_bar") {
            WeightFrame f = j.contains("weights") ? frame_from(j, 0) : WeightFrame::symbolic();
            return trapezoid_S_bar(req(j, "x"), req(j, "y"), ints_from(j, "W"), geti(j, "k", 0), f);
        }
        if (t == "R_even") return quarter_R_even(req(j, "x"), req(j, "y"), ints_from(j, "Z"));
        if (t == "R_odd") return quarter_R_odd(req(j, "x"), req(j, "y"), ints_from(j, "Z"));
        if (t == "fern") {
            FernSpec f{j.at("arms").get<std::vector<int>>(), j.value("flipped", false)};
            f.validate();
            Region r;
            r.tris = fern_tris(f, f.arms[0] & 1);
            return r;
        }
        if (t == "triangles") {
            Region r;
            r.frame = frame_from(j, geti(j, "axis", 0));
            for (const json& p : j.at("tris")) {
                if (!p.is_array() || p.size() != 2) throw spec_error("triangles must be [col,pos] pairs");
                r.tris.insert(Tri::at(p[0].get<int>(), p[1].get<int>()));
            }
            if (j.contains("barriers"))
                for (const json& b : j.at("barriers")) {
                    if (!b.is_array() || b.size() != 3) throw spec_error("barriers must be [col,pos,dir]");
                    Tri t0 = Tri::at(b[0].get<int>(), b[1].get<int>());
                    if (!t0.left()) throw spec_error("barrier must name its left-pointing triangle");
                    r.barriers.insert(Edge{t0, dir_from(b[2])});
                }
            return r;
        }
        throw spec_error("unknown region type '" + t + "'");
    } catch (const json::exception& e) {
        throw spec_error(std::string("malformed spec: ") + e.what());
    } catch (const label_error& e) {
        throw spec_error(e.what());
    }
}

json region_to_json(const Region& r) {
    json tris = json::array(), bars = json::array();
    for (const Tri& t : r.tris) tris.push_back({t.col, t.pos});
    for (const Edge& e : r.barriers) bars.push_back({e.left.col, e.left.pos, dir_str(e.dir)});
    json out{{"type", "triangles"}, {"tris", tris}, {"barriers", bars}, {"axis", r.frame.axis_offset2}};
    switch (r.frame.mode) {
        case WeightMode::Standard: break;
        case WeightMode::SymbolicXY: out["weights"] = "symbolic"; break;
        case WeightMode::NumericXY: out["weights"] = {{"X", r.frame.x0.get_str()}, {"Y", r.frame.y0.get_str()}}; break;
    }
    return out;
}

json poly_to_json(const QPoly& p) {
    json out = json::array();
    for (const auto& [m, c] : p.terms()) out.push_back({m.q, m.x, m.y, c.get_str()});
    return out;
}

QPoly poly_from_json(const json& j) {
    QPoly p;
    for (const json& t : j) {
        if (!t.is_array() || t.size() != 4) throw spec_error("polynomial terms are [e_q,e_X,e_Y,\"p/q\"]");
        p.add_term(Mono{t[0].get<int>(), t[1].get<int>(), t[2].get<int>()}, rat_from(t[3]));
    }
    return p;
}

json rat_to_json(const QRat& r) { return json{{"num", poly_to_json(r.num())}, {"den", poly_to_json(r.den())}}; }

json parse_spec_arg(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw spec_error("cannot read " + arg.substr(1));
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw spec_error(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace tilinglab

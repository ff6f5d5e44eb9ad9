// tilinglab: render regions, compute tiling generating functions, evaluate
// closed forms and run verification suites.
#include "tilinglab/engine.hpp"
#include "tilinglab/formulas.hpp"
#include "tilinglab/spec_json.hpp"
#include "tilinglab/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace tilinglab;

namespace {

enum Exit { kOk = 0, kUsage = 2, kCap = 3, kVerify = 4 };

struct verification_failed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string out_path;

void emit(const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw spec_error("cannot write " + out_path);
    f << text;
}

std::string poly_text(const QPoly& p) { return p.str(); }

int cmd_render(const std::string& spec, const std::string& format) {
    Region r = region_from_json(parse_spec_arg(spec));
    if (format == "svg") emit(render_svg(r));
    else if (format == "text") emit(render_ascii(r));
    else if (format == "json") emit(region_to_json(r).dump());
    else throw spec_error("render format must be svg, text or json");
    return kOk;
}

int cmd_tgf(const std::string& spec, const std::string& engine, const std::string& mode_s, const std::string& format) {
    json j = parse_spec_arg(spec);
    Region r = region_from_json(j);
    EqMode mode = parse_mode(mode_s);
    Caps caps = caps_from_env();
    if (mode.points) {
        if (r.frame.mode == WeightMode::SymbolicXY) throw spec_error("points mode needs fixed X and Y");
        int n = mode.n;
        if (n == 0) n = 2 * std::max(0, exponent_bound(r, caps.dp)) + 1;
        std::vector<long> pts;
        for (int i = 0; int(pts.size()) < n; ++i) {
            pts.push_back(i + 1);
            if (int(pts.size()) < n) pts.push_back(-(i + 1));
        }
        auto vals = tgf_points(r, pts, caps.dp);
        json out = json::array();
        for (std::size_t i = 0; i < pts.size(); ++i) out.push_back({pts[i], vals[i].get_str()});
        emit(json{{"points", out}}.dump());
        return kOk;
    }
    QPoly value;
    if (engine == "dfs") value = tgf_dfs(r, caps.dfs);
    else if (engine == "dp") value = tgf_dp(r, caps.dp);
    else if (engine == "split") {
        if (!j.contains("type") || (j["type"] != "H" && j["type"] != "H'" && j["type"] != "Hp"))
            throw spec_error("the split engine needs an intrusion hexagon spec");
        value = diagonal_split_tgf(hspec_from_json(j));
    } else if (engine == "both") {
        QPoly a = tgf_dfs(r, caps.dfs), b = tgf_dp(r, caps.dp);
        if (a != b) {
            std::cerr << json{{"error", "engines disagree"}, {"dfs", poly_to_json(a)}, {"dp", poly_to_json(b)}}.dump()
                      << '\n';
            return kVerify;
        }
        value = b;
    } else {
        throw spec_error("engine must be dfs, dp, split or both");
    }
    mpq_class count = eval_at(value, 1);
    if (format == "text") emit(poly_text(value) + "\ncount " + count.get_str());
    else emit(json{{"tgf", poly_to_json(value)}, {"count", count.get_str()}}.dump());
    return kOk;
}

std::set<int> ints(const json& j, const char* k) {
    std::set<int> s;
    if (j.contains(k)) s = labels_from_json(j.at(k));
    return s;
}

int cmd_formula(const std::string& name, const std::string& spec, const std::string& format) {
    json j = spec.empty() ? json::object() : parse_spec_arg(spec);
    auto geti = [&](const char* k) {
        if (!j.contains(k)) throw spec_error(std::string("missing field ") + k);
        return j.at(k).get<int>();
    };
    json out;
    try {
        if (name == "macmahon") {
            out = {{"value", macmahon(geti("a"), geti("b"), geti("c")).get_str()}};
        } else if (name == "lemma41") {
            out = {{"value", poly_to_json(lemma41_S(geti("x"), geti("y"), ints(j, "Z")))}};
        } else if (name == "lemma42-even") {
            out = {{"value", poly_to_json(lemma42_R_even(geti("x"), geti("y"), ints(j, "Z")))}};
        } else if (name == "lemma42-odd") {
            out = {{"value", poly_to_json(lemma42_R_odd(geti("x"), geti("y"), ints(j, "Z")))}};
        } else if (name == "thmA1") {
            out = {{"value", poly_to_json(thmA1_S(geti("x"), geti("y"), ints(j, "W"), j.value("k", 0)))}};
        } else if (name == "corA3") {
            out = {{"value", poly_to_json(corA3_hex(geti("a"), geti("b"), geti("c"), j.value("k", 0)))}};
        } else if (name == "flip") {
            FlipInstance f = flip_from_json(j);
            out = {{"to", hspec_to_json(f.to())}, {"ratio", rat_to_json(flip_ratio(f.from, f.to()))}};
        } else if (name == "thm34") {
            FamilySpec fs = family_from_json(j);
            Thm34Variant v = resolved_variant(fs.family);
            if (j.contains("variant")) {
                std::string want = j["variant"];
                bool found = false;
                for (Thm34Variant c : {Thm34Variant::Statement, Thm34Variant::ProofIndexing, Thm34Variant::CorrectedY})
                    if (variant_name(c) == want) v = c, found = true;
                if (!found) throw spec_error("unknown variant " + want);
            }
            Thm34Instance I = thm34_instance(fs, v);
            out = {{"variant", variant_name(v)},
                   {"ycase", ycase_name(I.ycase)},
                   {"numerator", hspec_to_json(I.num)},
                   {"denominator", hspec_to_json(I.den)},
                   {"barrier", labels_to_json(I.barrier)},
                   {"rhs", rat_to_json(thm34_rhs(fs, v))}};
        } else {
            throw spec_error("unknown formula " + name +
                             " (macmahon, lemma41, lemma42-even, lemma42-odd, thmA1, corA3, flip, thm34)");
        }
    } catch (const label_error& e) {
        throw spec_error(e.what());
    } catch (const json::exception& e) {
        throw spec_error(std::string("malformed spec: ") + e.what());
    }
    if (format == "text" && out.contains("value") && out["value"].is_array())
        emit(poly_from_json(out["value"]).str());
    else
        emit(out.dump());
    return kOk;
}

std::vector<Thm34Variant> parse_variants(const std::vector<std::string>& names) {
    std::vector<Thm34Variant> out;
    for (const std::string& n : names) {
        if (n == "all") return {Thm34Variant::Statement, Thm34Variant::ProofIndexing, Thm34Variant::CorrectedY};
        bool found = false;
        for (Thm34Variant c : {Thm34Variant::Statement, Thm34Variant::ProofIndexing, Thm34Variant::CorrectedY})
            if (variant_name(c) == n) out.push_back(c), found = true;
        if (!found) throw spec_error("unknown variant " + n);
    }
    return out;
}

int cmd_verify(SuiteConfig cfg, const std::string& mode_s, const std::vector<std::string>& variants,
               const std::string& format) {
    if (!known_suite(cfg.suite)) throw spec_error("unknown suite '" + cfg.suite + "'");
    cfg.mode = parse_mode(mode_s);
    cfg.variants = parse_variants(variants);
    Report r = check(cfg);
    if (format == "text") {
        std::string s = r.suite + ": pass " + std::to_string(r.pass) + ", fail " + std::to_string(r.fail) +
                        ", skip " + std::to_string(r.skip) + "\n";
        for (const Failure& f : r.failures) s += "  " + f.instance.dump() + "\n";
        emit(s);
    } else {
        emit(r.to_json().dump(2));
    }
    return r.fail == 0 ? kOk : kVerify;
}

// A witness is {"suite","mode"?,"instance"} or a whole report.
int cmd_replay(const std::string& witness) {
    json j = parse_spec_arg(witness);
    std::vector<std::pair<std::string, json>> items;
    EqMode mode;
    if (j.contains("failures")) {
        mode = parse_mode(j.at("config").value("mode", "symbolic"));
        for (const json& f : j.at("failures")) items.push_back({j.at("suite"), f.at("instance")});
    } else {
        if (!j.contains("suite") || !j.contains("instance")) throw spec_error("witness needs suite and instance");
        mode = parse_mode(j.value("mode", "symbolic"));
        items.push_back({j.at("suite"), j.at("instance")});
    }
    json out = json::array();
    bool any_fail = false;
    for (auto& [suite, inst] : items) {
        if (!known_suite(suite)) throw spec_error("unknown suite '" + suite + "'");
        InstanceResult r = run_instance(suite, inst, mode);
        const char* st = r.status == InstanceResult::Status::Pass ? "pass"
                         : r.status == InstanceResult::Status::Fail ? "fail"
                                                                     : "skip";
        any_fail |= r.status == InstanceResult::Status::Fail;
        out.push_back({{"suite", suite}, {"instance", inst}, {"status", st}, {"lhs", r.lhs}, {"rhs", r.rhs}});
    }
    emit(out.dump(2));
    return any_fail ? kVerify : kOk;
}

void error_json(const std::string& kind, const std::string& msg) {
    std::cerr << json{{"error", kind}, {"message", msg}}.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lozenge tiling laboratory"};
    app.require_subcommand(1);
    app.add_option("--out", out_path, "output file (default stdout)");

    std::string region, engine = "dp", mode = "symbolic", name, instance, witness;
    std::string render_fmt, tgf_fmt, formula_fmt, verify_fmt;
    SuiteConfig cfg;
    std::vector<std::string> variants;

    auto* render = app.add_subcommand("render", "draw a region");
    render->add_option("--region,--instance", region, "region spec: JSON or @file")->required();
    render->add_option("--format", render_fmt, "svg, text or json")->default_val("svg");
    render->add_option("--out", out_path);

    auto* tgf = app.add_subcommand("tgf", "tiling generating function");
    tgf->add_option("--region,--instance", region, "region spec: JSON or @file")->required();
    tgf->add_option("--engine", engine, "dfs, dp, split or both")->default_val("dp");
    tgf->add_option("--mode", mode, "symbolic or points:N")->default_val("symbolic");
    tgf->add_option("--format", tgf_fmt, "json or text")->default_val("json");
    tgf->add_option("--out", out_path);

    auto* formula = app.add_subcommand("formula", "evaluate a closed form");
    formula->add_option("name", name, "formula name")->required();
    formula->add_option("--instance,--region", instance, "parameters: JSON or @file");
    formula->add_option("--format", formula_fmt, "json or text")->default_val("json");
    formula->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", cfg.suite, "suite id")->required();
    verify->add_option("--max", cfg.max, "size cap");
    verify->add_option("--samples", cfg.samples, "sample count");
    verify->add_option("--seed", cfg.seed, "random seed");
    verify->add_option("--mode", mode, "symbolic or points:N")->default_val("symbolic");
    verify->add_option("--variants", variants, "extra fern-family variants: statement, proof-indexing, corrected-Y, all");
    verify->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
    verify->add_option("--format", verify_fmt, "json or text")->default_val("json");
    verify->add_option("--out", out_path);

    auto* replay = app.add_subcommand("replay", "re-run failure witnesses");
    replay->add_option("--witness", witness, "witness or report: JSON or @file")->required();
    replay->add_option("--out", out_path);

    auto* suites = app.add_subcommand("suites", "list suite ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        error_json("usage", e.what());
        return kUsage;
    }

    try {
        if (*render) return cmd_render(region, render_fmt);
        if (*tgf) return cmd_tgf(region, engine, mode, tgf_fmt);
        if (*formula) return cmd_formula(name, instance, formula_fmt);
        if (*verify) return cmd_verify(cfg, mode, variants, verify_fmt);
        if (*replay) return cmd_replay(witness);
        if (*suites) {
            for (const std::string& s : suite_names()) std::cout << s << '\n';
            return kOk;
        }
    } catch (const cap_exceeded& e) {
        error_json("cap", e.what());
        return kCap;
    } catch (const spec_error& e) {
        error_json("spec", e.what());
        return kUsage;
    } catch (const label_error& e) {
        error_json("spec", e.what());
        return kUsage;
    } catch (const json::exception& e) {
        error_json("spec", e.what());
        return kUsage;
    } catch (const std::exception& e) {
        error_json("internal", e.what());
        return 1;
    }
    return kOk;
}

#include "lsd/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include "lsd/dl_count.hpp"
#include "lsd/eo_strata.hpp"
#include "lsd/ff_slopes.hpp"
#include "lsd/kottwitz.hpp"
#include "lsd/lattice_oracle.hpp"
#include "lsd/special_lattice.hpp"

namespace lsd {

namespace {

using json = nlohmann::json;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

IVec parse_ints(const std::string& s) {
    IVec v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            v.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw UsageError("bad integer '" + tok + "'");
        } catch (const std::logic_error&) {
            throw UsageError("bad integer '" + tok + "'");
        }
    }
    return v;
}

// "1/2,0/1x2" -> blocks
std::vector<SlopeBlock> parse_slopes(const std::string& s) {
    std::vector<SlopeBlock> blocks;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        SlopeBlock b;
        const auto x = tok.find('x');
        if (x != std::string::npos) {
            b.copies = static_cast<int>(parse_ints(tok.substr(x + 1)).at(0));
            tok = tok.substr(0, x);
        }
        const auto slash = tok.find('/');
        if (slash == std::string::npos) throw UsageError("slope '" + tok + "' must be written d/h");
        b.degree = static_cast<int>(parse_ints(tok.substr(0, slash)).at(0));
        b.height = static_cast<int>(parse_ints(tok.substr(slash + 1)).at(0));
        blocks.push_back(b);
    }
    if (blocks.empty()) throw UsageError("--slopes is required");
    return blocks;
}

json qvec_json(const QVec& v) {
    json a = json::array();
    for (const Q& q : v) a.push_back(q_str(q));
    return a;
}

json levi_json(unsigned J, int ns) {
    json a = json::array();
    for (int i = 0; i < ns; ++i)
        if (J >> i & 1u) a.push_back(i + 1);
    return a;
}

json word_json(const std::vector<int>& w) {
    json a = json::array();
    for (int s : w) a.push_back(s + 1);
    return a;
}

struct DatumOpts {
    std::string family = "GL";
    int n = 0;
    int m = 0;
    std::string mu;
    std::string det = "plus";
};

struct Datum {
    RootDatum rd;
    IVec mu;
    bool orthogonal = false;
    QuadSpaceData quad;
};

bool det_plus(const DatumOpts& o) {
    if (o.det != "plus" && o.det != "minus") throw UsageError("--det must be plus or minus");
    return o.det == "plus";
}

Datum build_datum(const DatumOpts& o) {
    Datum d;
    const std::string& f = o.family;
    IVec raw = o.mu.empty() ? IVec{} : parse_ints(o.mu);
    if (f == "GL" || f == "SL" || f == "PGL") {
        if (o.n < 1) throw UsageError("--n is required");
        if (static_cast<int>(raw.size()) != o.n) throw UsageError("--mu needs n entries");
        if (f == "GL") {
            d.rd = build_root_datum(Family::GL, o.n);
            d.mu = raw;
        } else if (f == "SL") {
            long long sum = 0;
            for (long long x : raw) sum += x;
            if (sum != 0) throw UsageError("SL coweights must sum to zero");
            d.rd = build_root_datum(Family::SL, o.n);
            long long acc = 0;
            for (int i = 0; i + 1 < o.n; ++i) d.mu.push_back(acc += raw[i]);
        } else {
            d.rd = build_root_datum(Family::PGL, o.n);
            for (int i = 0; i + 1 < o.n; ++i) d.mu.push_back(raw[i] - raw[i + 1]);
        }
    } else if (f == "Sp" || f == "GSp") {
        if (o.m < 1) throw UsageError("--m is required");
        d.rd = build_root_datum(f == "Sp" ? Family::Sp : Family::GSp, o.m);
        if (raw.empty() && f == "GSp") raw.assign(o.m + 1, 1);
        d.mu = raw;
    } else if (f == "SO" || f == "GSpin") {
        if (o.n < 3) throw UsageError("--n >= 3 is required");
        const bool plus = det_plus(o);
        d.rd = f == "SO" ? orthogonal_datum(o.n, plus) : gspin_datum(o.n, plus);
        d.mu = raw.empty() ? orthogonal_mu(d.rd) : raw;
        d.orthogonal = true;
        d.quad = QuadSpaceData{o.n, plus};
    } else {
        throw UsageError("unknown family '" + f + "'");
    }
    if (static_cast<int>(d.mu.size()) != d.rd.N)
        throw UsageError("--mu needs " + std::to_string(d.rd.N) + " coordinates for " + d.rd.label());
    return d;
}

json datum_input(const DatumOpts& o) {
    json in{{"family", o.family}};
    if (o.n) in["n"] = o.n;
    if (o.m) in["m"] = o.m;
    if (!o.mu.empty()) in["mu"] = o.mu;
    if (o.family == "SO" || o.family == "GSpin") in["det"] = o.det;
    return in;
}

json class_json(const RootDatum& rd, const SigmaConjClass& c, int index) {
    return json{{"index", index},
                {"nu", qvec_json(c.nu)},
                {"kappa", c.kappa},
                {"basic", c.basic},
                {"levi", levi_json(c.levi, rd.ns())},
                {"rep", c.rep}};
}

int pick_class(const BGMu& t, int cls, bool basic) {
    if (basic || cls < 0) return t.basic_index();
    if (cls >= static_cast<int>(t.classes.size())) throw UsageError("--class out of range");
    return cls;
}

EOContext orth_context(const Datum& d) {
    if (!d.orthogonal) throw UsageError("this command needs --family SO or GSpin");
    return make_eo_context(d.rd, d.mu);
}

std::string pretty(const std::string& cmd, const json& r) {
    std::ostringstream os;
    if (cmd == "jw" || cmd == "jw-b") {
        const json& labels = cmd == "jw" ? r["labels"] : r["subset"];
        os << cmd << ":";
        for (const auto& l : labels) os << " " << (l.is_object() ? l["label"].get<std::string>() : l.get<std::string>());
        os << "\n";
    } else if (cmd == "ff-scan") {
        for (const auto& c : r["eliminated"])
            os << "r=" << c["r"].get<int>() << "  " << c["type"].get<std::string>() << "  forced sub "
               << c["forced_sub"].get<std::string>() << "  " << c["verdict"].get<std::string>() << "\n";
        os << "survivors:";
        for (const auto& s : r["survivors"]) os << " " << s.get<std::string>();
        os << "\n";
    } else if (cmd == "k3-table") {
        for (const auto& row : r["newton"]) os << "newton " << row.dump() << "\n";
        for (const auto& row : r["eo"]) os << "eo " << row.dump() << "\n";
    } else {
        os << r.dump(2) << "\n";
    }
    return os.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Combinatorial invariants of local Shimura data and brute-force oracles", "lsd"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    bool pretty_out = false, json_out = false;
    app.add_flag("--pretty", pretty_out, "human-readable output");
    app.add_flag("--json", json_out, "JSON output (default)");

    DatumOpts dopt;
    int cls = -1;
    bool basic = false;
    long long p = 3, q = 2;
    int k = 1, window = 1, d = 1, half = 1, hyperbolic = 0;
    std::string slopes, variant = "exact", group = "PGL2", word;
    std::uint64_t seed = 0;
    bool seeded = false;

    auto datum_flags = [&](CLI::App* sub) {
        sub->add_option("--family", dopt.family, "GL, SL, PGL, Sp, GSp, SO or GSpin");
        sub->add_option("--n", dopt.n, "rank for GL/SL/PGL, dimension of V for SO/GSpin");
        sub->add_option("--m", dopt.m, "rank for Sp/GSp");
        sub->add_option("--mu", dopt.mu, "cocharacter, comma separated");
        sub->add_option("--det", dopt.det, "plus or minus (even orthogonal)");
    };
    auto class_flags = [&](CLI::App* sub) {
        sub->add_option("--class", cls, "class index (most ordinary is 0)");
        sub->add_flag("--basic", basic, "use the basic class");
    };
    auto lattice_flags = [&](CLI::App* sub) {
        sub->add_option("--n", dopt.n, "rank (<= 3)")->required();
        sub->add_option("--mu", dopt.mu, "decreasing integer tuple")->required();
        sub->add_option("--slopes", slopes, "b as slope blocks, e.g. 1/2 or 1/1x2")->required();
        sub->add_option("--p", p, "prime in {2,3,5}");
        sub->add_option("--k", k, "residue degree");
        sub->add_option("--window", window, "window a");
        sub->add_option("--variant", variant, "exact or closure");
    };

    CLI::App* bgmu = app.add_subcommand("bgmu", "Kottwitz set B(G, mu)");
    datum_flags(bgmu);
    CLI::App* validate = app.add_subcommand("validate", "local Shimura datum checks");
    datum_flags(validate);
    class_flags(validate);
    CLI::App* dim = app.add_subcommand("dim", "dimension formula");
    datum_flags(dim);
    class_flags(dim);
    CLI::App* hn = app.add_subcommand("hn-decomp", "full Hodge-Newton decomposability");
    datum_flags(hn);
    CLI::App* jw = app.add_subcommand("jw", "EO index set");
    datum_flags(jw);
    CLI::App* jwb = app.add_subcommand("jw-b", "EO indices inside one Newton stratum");
    datum_flags(jwb);
    class_flags(jwb);
    CLI::App* eohp = app.add_subcommand("eo-hp", "EO labels against vertex-lattice types");
    datum_flags(eohp);
    app.add_subcommand("k3-table", "Newton / EO / Artin dictionary for n = 19");
    CLI::App* tm = app.add_subcommand("tmax", "maximal vertex-lattice type");
    tm->add_option("--n", dopt.n, "dimension of V")->required();
    tm->add_option("--det", dopt.det, "plus or minus");
    CLI::App* adlv = app.add_subcommand("adlv-enum", "lattice-model enumeration");
    lattice_flags(adlv);
    CLI::App* cart = app.add_subcommand("cartesian-check", "GL -> PGL square on enumerated points");
    lattice_flags(cart);
    CLI::App* chain = app.add_subcommand("special-chain", "special lattice chain");
    chain->add_option("--p", p, "odd prime");
    chain->add_option("--half", half, "half the dimension of the nonsplit block");
    chain->add_option("--hyperbolic", hyperbolic, "number of hyperbolic planes");
    chain->add_option("--seed", seed, "apply a random rational basis change")->each([&](const std::string&) { seeded = true; });
    CLI::App* dl = app.add_subcommand("dl-count", "Deligne-Lusztig point counts");
    dl->add_option("--group", group, "PGL2 or SO5");
    dl->add_option("--q", q, "prime q");
    dl->add_option("--d", d, "field power");
    dl->add_option("--word", word, "restrict to one element, e.g. 1,2");
    CLI::App* ff = app.add_subcommand("ff-scan", "HN type case scan");
    ff->add_option("--n", dopt.n, "dimension")->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    json input, result;
    try {
        if (cmd == "bgmu" || cmd == "validate" || cmd == "dim" || cmd == "hn-decomp" || cmd == "jw" || cmd == "jw-b" ||
            cmd == "eo-hp") {
            input = datum_input(dopt);
            const Datum D = build_datum(dopt);
            if (cmd == "jw" || cmd == "eo-hp") {
                const EOContext ctx = orth_context(D);
                if (cmd == "jw") {
                    const auto reps = enumerate_jw(ctx);
                    json labels = json::array();
                    for (const CosetRep& r : reps)
                        labels.push_back({{"label", r.label}, {"length", r.length}, {"word", word_json(r.word)}});
                    json covers = json::array();
                    for (auto [a, b] : bruhat_covers(D.rd, reps)) covers.push_back({reps[a].label, reps[b].label});
                    result = {{"labels", labels}, {"size", reps.size()}, {"covers", covers}};
                } else {
                    json rows = json::array();
                    for (const HPEntry& e : eo_hp_correspondence(ctx, D.quad))
                        rows.push_back({{"labels", e.labels}, {"type", e.type}});
                    result = {{"entries", rows}, {"tmax", tmax(D.quad)}};
                }
            } else {
                const BGMu table = enumerate_bgmu(D.rd, D.mu);
                if (cmd == "bgmu") {
                    json classes = json::array();
                    for (size_t i = 0; i < table.classes.size(); ++i) classes.push_back(class_json(D.rd, table.classes[i], static_cast<int>(i)));
                    bool chain_order = true;
                    for (size_t i = 0; i + 1 < table.classes.size(); ++i)
                        if (!class_leq(D.rd, table.classes[i + 1], table.classes[i])) chain_order = false;
                    result = {{"group", D.rd.label()},
                              {"count", table.classes.size()},
                              {"basic_index", table.basic_index()},
                              {"pi1_coinvariants", table.coinv.describe()},
                              {"mu_sharp", table.mu_sharp},
                              {"chain", chain_order},
                              {"classes", classes}};
                } else if (cmd == "validate") {
                    const int c = pick_class(table, cls, basic);
                    input["class"] = c;
                    const LocalDatum ld = validate_datum(D.rd, D.mu, table.classes[c]);
                    const SerreType st = classify_serre_type(D.rd);
                    result = {{"minuscule", ld.flags.minuscule},
                              {"hodge_type", ld.flags.hodge_type},
                              {"abelian_type", ld.flags.abelian_type},
                              {"reason", ld.flags.reason},
                              {"serre_components", st.components}};
                } else if (cmd == "dim") {
                    auto row = [&](int c) {
                        return json{{"class", c},
                                    {"defect", defect(D.rd, table.classes[c])},
                                    {"dim", rz_dimension(D.rd, D.mu, table.classes[c])}};
                    };
                    if (basic || cls >= 0) {
                        const int c = pick_class(table, cls, basic);
                        input["class"] = c;
                        result = row(c);
                    } else {
                        json rows = json::array();
                        for (int c = 0; c < static_cast<int>(table.classes.size()); ++c) rows.push_back(row(c));
                        result = {{"classes", rows}};
                    }
                } else if (cmd == "hn-decomp") {
                    const HNResult r = fully_hn_decomposable(D.rd, D.mu, table);
                    json witnesses = json::array();
                    bool reverified = true;
                    for (size_t i = 0; i < r.witness.size(); ++i) {
                        if (!r.witness[i]) continue;
                        const bool ok = hn_condition_holds(D.rd, D.mu, table.classes[i], *r.witness[i]);
                        reverified = reverified && ok;
                        witnesses.push_back({{"class", i}, {"levi", levi_json(*r.witness[i], D.rd.ns())}, {"reverified", ok}});
                    }
                    result = {{"decomposable", r.decomposable}, {"witnesses", witnesses}, {"failing", r.failing}, {"reverified", reverified}};
                } else {
                    const EOContext ctx = orth_context(D);
                    const int c = pick_class(table, cls, basic);
                    input["class"] = c;
                    result = {{"class", c}, {"basic", table.classes[c].basic}, {"subset", jw_b_subset(ctx, D.quad, table, c)}};
                }
            }
        } else if (cmd == "k3-table") {
            const K3Dictionary dict = k3_dictionary();
            json newton = json::array(), eo = json::array();
            for (const K3NewtonRow& r : dict.newton) {
                json sl = json::array();
                for (const auto& [s, mult] : r.slopes) sl.push_back({q_str(s), mult});
                newton.push_back({{"height", r.height ? json(*r.height) : json("infinity")},
                                  {"slopes", sl},
                                  {"class", r.class_index},
                                  {"dim", r.dim}});
            }
            for (const K3EORow& r : dict.eo) {
                json row{{"index", r.index}, {"label", r.label}, {"length", r.length}};
                if (r.height) row["height"] = *r.height;
                if (r.artin) row["artin"] = *r.artin;
                if (r.vertex_type) {
                    row["vertex_type"] = *r.vertex_type;
                    row["sigma0"] = *r.vertex_type / 2;
                }
                eo.push_back(row);
            }
            result = {{"newton", newton}, {"eo", eo}};
        } else if (cmd == "tmax") {
            input = {{"n", dopt.n}, {"det", dopt.det}};
            const QuadSpaceData qd{dopt.n, det_plus(dopt)};
            result = {{"tmax", tmax(qd)}, {"vertex_types", vertex_types(qd)}};
        } else if (cmd == "adlv-enum" || cmd == "cartesian-check") {
            input = {{"n", dopt.n}, {"mu", dopt.mu}, {"slopes", slopes}, {"p", p}, {"k", k}, {"window", window}, {"variant", variant}};
            if (variant != "exact" && variant != "closure") throw UsageError("--variant must be exact or closure");
            AdlvParams prm;
            prm.p = p;
            prm.k = k;
            prm.n = dopt.n;
            prm.window = window;
            prm.mu = parse_ints(dopt.mu);
            prm.b = christoffel_rep(p, parse_slopes(slopes));
            prm.variant = variant == "exact" ? AdlvVariant::Exact : AdlvVariant::Closure;
            if (cmd == "adlv-enum") {
                const AdlvResult r = enumerate_adlv(prm);
                json hist = json::array();
                for (auto [w, c] : r.omega_histogram) hist.push_back({w, c});
                json examples = json::array();
                for (size_t i = 0; i < r.points.size() && i < 5; ++i)
                    examples.push_back({{"diag", r.points[i].diag}, {"inv", r.points[i].inv}, {"omega", r.points[i].omega}});
                result = {{"count", r.points.size()},
                          {"candidates", r.candidates},
                          {"precision", r.precision},
                          {"omega_histogram", hist},
                          {"touches_window", r.touches_window},
                          {"examples", examples},
                          {"b", prm.b.name}};
            } else {
                const CartesianReport c = check_cartesian_gl_pgl(prm);
                result = {{"ok", c.ok()},
                          {"torsor_fibers", c.torsor_fibers},
                          {"omega_equivariant", c.omega_equivariant},
                          {"commutes_mod_n", c.commutes_mod_n},
                          {"unique_lifts", c.unique_lifts},
                          {"surjective", c.surjective},
                          {"gl_points", c.gl_points},
                          {"pgl_points", c.pgl_points},
                          {"problems", c.problems}};
            }
        } else if (cmd == "special-chain") {
            input = {{"p", p}, {"half", half}, {"hyperbolic", hyperbolic}};
            SpecialLattice L = standard_special_lattice(p, half, hyperbolic);
            if (seeded) {
                input["seed"] = seed;
                L = change_basis(L, random_invertible_mod_p(p, L.gram.r, seed));
            }
            const ChainResult r = special_lattice_chain(L);
            result = {{"d", r.d}, {"type", r.type}, {"dims", r.dims}, {"fixed_dim", r.fixed_dim}, {"hull_contains_perp", r.self_orthogonal_hull}};
        } else if (cmd == "dl-count") {
            input = {{"group", group}, {"q", q}, {"d", d}};
            if (group != "PGL2" && group != "SO5") throw UsageError("--group must be PGL2 or SO5");
            const DlGroup g = group == "PGL2" ? DlGroup::PGL2 : DlGroup::SO5;
            if (!word.empty()) {
                input["word"] = word;
                std::vector<int> w;
                for (long long s : parse_ints(word)) w.push_back(static_cast<int>(s));
                result = {{"w", word}, {"d", d}, {"count", count_dl_variety(g, w, q, d)}};
            } else {
                const DlTable t = dl_table(g, q, d);
                json rows = json::array();
                for (const DlEntry& e : t.entries) rows.push_back({{"w", e.word}, {"d", d}, {"count", e.count}});
                result = {{"entries", rows}, {"total_flags", t.total_flags}, {"rational_flags", t.rational_flags}};
            }
        } else if (cmd == "ff-scan") {
            input = {{"n", dopt.n}};
            const CaseScanReport rep = appendix_case_scan(dopt.n);
            json elim = json::array();
            for (const EliminatedCase& c : rep.eliminated) {
                json checks = json::array();
                for (const ModificationCheck& m : c.checks)
                    checks.push_back({{"type", m.type.str()}, {"shift", m.type.degree_shift()}, {"sub_degree", m.sub_degree}, {"allowed", m.allowed}});
                elim.push_back({{"r", c.r},
                                {"type", c.type.str()},
                                {"isotropic", c.stable_part_isotropic},
                                {"checks", checks},
                                {"forced_sub", c.forced_sub.str()},
                                {"verdict", c.verdict}});
            }
            json surv = json::array();
            for (const BundleType& s : rep.survivors) {
                bool all_zero = true;
                for (const auto& part : s.parts()) all_zero = all_zero && part.first == 0;
                surv.push_back(all_zero ? "trivial" : s.str());
            }
            result = {{"eliminated", elim}, {"survivors", surv}};
        }
    } catch (const ResourceError& e) {
        err << "resource bound: " << e.what() << "\n";
        return 3;
    } catch (const PrecisionError& e) {
        err << "precision exhausted: " << e.what() << "\n";
        return 3;
    } catch (const DefectTableIncomplete& e) {
        err << "unsupported: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }

    if (pretty_out && !json_out) {
        out << pretty(cmd, result);
    } else {
        const json doc{{"command", cmd}, {"input", input}, {"result", result}, {"version", kVersion}};
        out << doc.dump() << "\n";
    }
    return 0;
}

}  // namespace lsd

// cyclecone — command-line front end.
//
// Every command takes its context (n, k, r, s) from explicit flags, parses
// class expressions with the shared grammar, and prints one JSON object with
// a stable key order (or a text summary with --format text). Identical
// invocations produce byte-identical output: no timestamps, no unordered
// iteration, exact arithmetic only.
//
// Exit codes: 0 success (and verification passed), 1 verification failure or
// exceeded resource cap, 2 usage error (bad flags, bad expression syntax,
// out-of-range indices).

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cyclecone/chow.hpp"
#include "cyclecone/combinatorics.hpp"
#include "cyclecone/cycles.hpp"
#include "cyclecone/expr.hpp"
#include "cyclecone/fans.hpp"
#include "cyclecone/linsys.hpp"
#include "cyclecone/polyhedral.hpp"
#include "cyclecone/theorems.hpp"
#include "cyclecone/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace cyclecone;

// ---------------------------------------------------------------------------
// Output plumbing.
// ---------------------------------------------------------------------------

struct Output {
    std::string format = "json";
    std::string out_path;

    void emit(const json& j, const std::string& text) const {
        std::string payload =
            format == "text" ? text : j.dump(2) + "\n";
        if (out_path.empty()) {
            std::cout << payload;
        } else {
            std::ofstream f(out_path, std::ios::binary);
            if (!f) throw error("cannot open output file '" + out_path + "'");
            f << payload;
        }
    }
};

void add_output_flags(CLI::App* cmd, Output& out) {
    cmd->add_option("--format", out.format, "Output format: json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    cmd->add_option("--out", out.out_path,
                    "Write the output to FILE instead of standard output");
}

std::vector<int> mask_indices(mask_t m, int n) {
    std::vector<int> out;
    for (int i = 1; i <= n; ++i)
        if (mask_contains(m, i)) out.push_back(i);
    return out;
}

json ivec_json(const IVec& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(static_cast<long long>(x));
    return a;
}

std::string ivec_str(const IVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}

std::string cone_str(const std::vector<int>& cone) {
    std::string s = "{";
    for (std::size_t i = 0; i < cone.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(cone[i]);
    }
    return s + "}";
}

// Facts are stored as strings; render booleans and integers as JSON values.
json fact_value(const std::string& v) {
    if (v == "true") return true;
    if (v == "false") return false;
    bool numeric = !v.empty();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i == 0 && v[i] == '-' && v.size() > 1) continue;
        if (!std::isdigit(static_cast<unsigned char>(v[i]))) numeric = false;
    }
    if (numeric && v.size() <= 18) return std::stoll(v);
    return v;
}

json suite_json(const SuiteResult& sr) {
    json j;
    j["suite"] = sr.suite;
    json checked = json::array();
    for (const auto& c : sr.checks) checked.push_back(c.name);
    j["checked"] = checked;
    json failed = json::array();
    for (const auto& c : sr.checks)
        if (!c.pass) failed.push_back(json{{"name", c.name}, {"detail", c.detail}});
    j["failed"] = failed;
    j["pass"] = sr.all_pass();
    for (const auto& [k, v] : sr.facts) j[k] = fact_value(v);
    return j;
}

std::string suite_text(const SuiteResult& sr) {
    std::string t = sr.suite + ": " + std::to_string(sr.passed()) + "/" +
                    std::to_string(sr.checks.size()) +
                    (sr.all_pass() ? " PASS" : " FAIL") + "\n";
    for (const auto& c : sr.checks)
        if (!c.pass) t += "  FAIL " + c.name + ": " + c.detail + "\n";
    for (const auto& [k, v] : sr.facts) t += "  " + k + " = " + v + "\n";
    return t;
}

// Positive rescale to a primitive integer vector (for ray-set comparison).
QVec primitive(const QVec& v) {
    Int lcm_den = 1;
    for (const Rat& q : v) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(q));
    Int g = 0;
    for (const Rat& q : v) g = boost::multiprecision::gcd(g, numerator(q) * (lcm_den / denominator(q)));
    if (g == 0) return v;
    QVec out;
    out.reserve(v.size());
    for (const Rat& q : v) out.push_back(q * Rat(lcm_den) / Rat(g));
    return out;
}

// ---------------------------------------------------------------------------
// Flag bundles.
// ---------------------------------------------------------------------------

struct NkrFlags {
    int n = 0, k = 0, r = 0;
};

void add_nkr(CLI::App* cmd, NkrFlags& f, bool with_k) {
    cmd->add_option("--n", f.n, "Number of projective-line factors")->required();
    if (with_k)
        cmd->add_option("--k", f.k, "Cycle dimension (1..n-1)")->required();
    cmd->add_option("--r", f.r, "Number of blown-up points")->required();
}

// ---------------------------------------------------------------------------
// Commands.
// ---------------------------------------------------------------------------

int run_intersect(const NkrFlags& f, const std::vector<std::string>& exprs,
                  const Output& out) {
    RingContext ctx{f.n, f.r};
    ChowElement product = chow_unit(ctx);
    json factors = json::array();
    std::string text = "n=" + std::to_string(f.n) + " r=" + std::to_string(f.r) + "\n";
    for (const auto& s : exprs) {
        ClassExpr e = parse_class_expr(s, ctx);
        factors.push_back(print_class_expr(e));
        text += "factor: " + print_class_expr(e) + "\n";
        product = product * eval_chow(e, ctx);
    }
    int deg = -1;
    bool hom = product.is_homogeneous(&deg);
    // The degree map is defined only for 0-cycles (top codimension) and zero.
    bool has_degree = product.is_zero() || (hom && deg == f.n);

    json j;
    j["command"] = "intersect";
    j["n"] = f.n;
    j["r"] = f.r;
    j["factors"] = factors;
    j["product"] = product.str();
    if (hom && !product.is_zero())
        j["codimension"] = deg;
    else
        j["codimension"] = nullptr;
    j["degree"] = has_degree ? json(degree(product).str()) : json(nullptr);

    text += "product = " + product.str() + "\n";
    text += "degree = " + (has_degree ? degree(product).str() : std::string("undefined (not a 0-cycle)")) + "\n";
    out.emit(j, text);
    return 0;
}

int run_pair(const NkrFlags& f, const std::vector<std::string>& exprs,
             const Output& out) {
    RingContext ctx{f.n, f.r};
    CycleClass a = eval_cycle(parse_class_expr(exprs[0], ctx), ctx, f.k);
    CycleClass b = eval_cycle(parse_class_expr(exprs[1], ctx), ctx, f.n - f.k);
    Rat p = pair_classes(a, b);

    json j;
    j["command"] = "pair";
    j["n"] = f.n;
    j["k"] = f.k;
    j["r"] = f.r;
    j["left"] = a.str();
    j["right"] = b.str();
    j["pairing"] = p.str();

    std::string text = "pair " + a.str() + " . " + b.str() + " = " + p.str() + "\n";
    out.emit(j, text);
    return 0;
}

int run_cone_members(const NkrFlags& f, const Output& out) {
    RingContext ctx{f.n, f.r};
    FiberCone cone = fiber_cone(ctx, f.k);

    json j;
    j["command"] = "cone-members";
    j["n"] = f.n;
    j["k"] = f.k;
    j["r"] = f.r;
    j["generator_count"] = cone.generators.size();
    json gens = json::array();
    std::string text = "CF_" + std::to_string(f.k) + " generators (" +
                       std::to_string(cone.generators.size()) + "):\n";
    for (const auto& g : cone.generators) {
        gens.push_back(g.str());
        text += "  " + g.str() + "\n";
    }
    j["generators"] = gens;
    out.emit(j, text);
    return 0;
}

int run_cone_dual(const NkrFlags& f, const Output& out) {
    RingContext ctx{f.n, f.r};
    FiberCone cone = fiber_cone(ctx, f.k);
    std::vector<CycleClass> rays = dual_rays(cone);

    // Cross-check against the double-description dual whenever the ambient
    // dimension is inside the configured cap (CYCLECONE_DIM_LIMIT).
    int dim = static_cast<int>(cycle_to_vector(cone.generators.at(0)).size());
    bool dd_checked = false;
    if (dim <= default_limits().dim_limit) {
        std::vector<QVec> gen_vecs;
        for (const auto& g : cone.generators) gen_vecs.push_back(cycle_to_vector(g));
        RationalCone primal = cone_from_generators(dim, gen_vecs);
        RationalCone dual = dualize(primal);
        std::set<QVec> dd_set;
        for (const auto& v : dual.generators) dd_set.insert(primitive(v));
        std::set<QVec> closed_set;
        for (const auto& d : rays) {
            // Transport N_{n-k} classes into pairing-dual coordinates on N_k:
            // the H_I slot reads the coefficient of the complementary block,
            // the E_j slot the negated exceptional coefficient.
            QVec y;
            for (mask_t I : subsets_of_size(f.n, f.n - f.k))
                y.push_back(d.h_coeff(full_mask(f.n) & ~I));
            for (int jj = 1; jj <= f.r; ++jj) y.push_back(-d.e_coeff(jj));
            closed_set.insert(primitive(y));
        }
        if (dd_set != closed_set)
            throw error("internal: double-description dual disagrees with the closed form");
        dd_checked = true;
    }

    json j;
    j["command"] = "cone-dual";
    j["n"] = f.n;
    j["k"] = f.k;
    j["r"] = f.r;
    j["dual_k"] = f.n - f.k;
    j["ray_count"] = rays.size();
    json arr = json::array();
    std::string text = "dual rays of CF_" + std::to_string(f.k) + " (" +
                       std::to_string(rays.size()) + "), classes in N_" +
                       std::to_string(f.n - f.k) + ":\n";
    for (const auto& d : rays) {
        arr.push_back(d.str());
        text += "  " + d.str() + "\n";
    }
    j["rays"] = arr;
    j["dd_checked"] = dd_checked;
    text += dd_checked ? "double-description cross-check: ok\n"
                       : "double-description cross-check: skipped (dimension cap)\n";
    out.emit(j, text);
    return 0;
}

int run_cone_decompose(const NkrFlags& f, const std::string& expr,
                       const Output& out) {
    RingContext ctx{f.n, f.r};
    CycleClass alpha = eval_cycle(parse_class_expr(expr, ctx), ctx, f.k);
    FiberCone cone = fiber_cone(ctx, f.k);
    Membership m = cf_membership(cone, alpha);

    json j;
    j["command"] = "cone-decompose";
    j["n"] = f.n;
    j["k"] = f.k;
    j["r"] = f.r;
    j["class"] = alpha.str();
    j["inside"] = m.inside;
    json terms = json::array();
    std::string text = alpha.str() + "\n";
    if (m.inside) {
        for (const auto& [g, c] : m.decomposition.terms) {
            terms.push_back(json{{"generator", g.str()}, {"coefficient", c.str()}});
            text += "  + " + c.str() + " * (" + g.str() + ")\n";
        }
        CycleClass back = m.decomposition.reconstruct(ctx, f.k);
        if (!(back == alpha))
            throw error("internal: decomposition does not reconstruct the input");
        j["decomposition"] = terms;
        j["reconstruction_matches"] = true;
        j["separator"] = nullptr;
        text = "inside CF_" + std::to_string(f.k) + "\n" + text +
               "reconstruction matches\n";
    } else {
        j["decomposition"] = terms;
        j["reconstruction_matches"] = nullptr;
        j["separator"] = m.separator ? json(m.separator->str()) : json(nullptr);
        j["separator_pairing"] = m.separator_pairing.str();
        text = "outside CF_" + std::to_string(f.k) + "\n" + text;
        if (m.separator)
            text += "separator: " + m.separator->str() + " (pairing " +
                    m.separator_pairing.str() + ")\n";
    }
    out.emit(j, text);
    return 0;
}

struct FanFlags {
    std::string preset;
    int n = 0;
    int s = 0;
    int codim = -1;
};

void add_fan_flags(CLI::App* cmd, FanFlags& f, bool with_codim) {
    cmd->add_option("--preset", f.preset,
                    "Fan preset: p1n, x1, x2, x2fiber, xtilde")
        ->required()
        ->check(CLI::IsMember({"p1n", "x1", "x2", "x2fiber", "xtilde"}));
    cmd->add_option("--n", f.n, "Number of projective-line factors")->required();
    cmd->add_option("--s", f.s, "Shared-fiber dimension (x2fiber only)");
    if (with_codim)
        cmd->add_option("--codim", f.codim,
                        "Cone codimension (= dimension of the invariant cycle)")
            ->required();
}

json fan_summary(const BlowupFan& bf) {
    json j;
    j["preset"] = fan_preset_name(bf.preset);
    j["n"] = bf.n;
    j["s"] = bf.s;
    j["dim"] = bf.fan.dim;
    j["ray_count"] = bf.fan.rays.size();
    j["max_cone_count"] = bf.fan.max_cones.size();
    json rays = json::array();
    for (const auto& v : bf.fan.rays) rays.push_back(ivec_json(v));
    j["rays"] = rays;
    json cones = json::array();
    for (const auto& c : bf.fan.max_cones) cones.push_back(c);
    j["max_cones"] = cones;
    json centers = json::array();
    for (const auto& c : bf.centers)
        centers.push_back(json{{"ray_index", c.ray_index}, {"signs", c.signs}});
    j["centers"] = centers;
    j["curve_ray_index"] = bf.curve_ray_index;
    return j;
}

int run_fan_build(const FanFlags& f, const Output& out) {
    BlowupFan bf = build_preset(fan_preset_from_string(f.preset), f.n, f.s);
    validate_fan(bf.fan);

    json j;
    j["command"] = "fan-build";
    json s = fan_summary(bf);
    for (auto& [k, v] : s.items()) j[k] = v;
    j["validated"] = true;

    std::string text = "fan " + f.preset + " (n=" + std::to_string(f.n) + "): " +
                       std::to_string(bf.fan.rays.size()) + " rays, " +
                       std::to_string(bf.fan.max_cones.size()) + " maximal cones\n";
    for (std::size_t i = 0; i < bf.fan.rays.size(); ++i)
        text += "  ray " + std::to_string(i) + " = " + ivec_str(bf.fan.rays[i]) + "\n";
    out.emit(j, text);
    return 0;
}

int run_fan_enumerate(const FanFlags& f, const Output& out) {
    BlowupFan bf = build_preset(fan_preset_from_string(f.preset), f.n, f.s);
    std::vector<std::vector<int>> cones = enumerate_cones(bf.fan, f.codim);

    json j;
    j["command"] = "fan-enumerate";
    j["preset"] = f.preset;
    j["n"] = f.n;
    j["s"] = f.s;
    j["codim"] = f.codim;
    j["cone_count"] = cones.size();
    json arr = json::array();
    std::string text = "codim-" + std::to_string(f.codim) + " cones of " + f.preset +
                       " (" + std::to_string(cones.size()) + "):\n";
    for (const auto& c : cones) {
        arr.push_back(c);
        text += "  " + cone_str(c) + "\n";
    }
    j["cones"] = arr;
    out.emit(j, text);
    return 0;
}

int run_fan_classes(const FanFlags& f, const Output& out) {
    BlowupFan bf = build_preset(fan_preset_from_string(f.preset), f.n, f.s);
    std::vector<ConeClass> classes = invariant_cycle_classes(bf, f.codim);

    json j;
    j["command"] = "fan-classes";
    j["preset"] = f.preset;
    j["n"] = f.n;
    j["s"] = f.s;
    j["codim"] = f.codim;
    j["class_count"] = classes.size();
    json arr = json::array();
    std::string text = "invariant cycle classes of " + f.preset + " in codim " +
                       std::to_string(f.codim) + " (" +
                       std::to_string(classes.size()) + "):\n";
    for (const auto& cc : classes) {
        arr.push_back(json{{"cone", cc.cone}, {"class", cc.cls.str()}});
        text += "  " + cone_str(cc.cone) + " -> " + cc.cls.str() + "\n";
    }
    j["classes"] = arr;
    out.emit(j, text);
    return 0;
}

struct LinsysFlags {
    int n = 0;
    int s = 0;
};

void add_linsys_flags(CLI::App* cmd, LinsysFlags& f) {
    cmd->add_option("--n", f.n, "Number of projective-line factors")->required();
    cmd->add_option("--s", f.s, "Multiplicity parameter s (1..n-1)")->required();
}

int run_linsys_basis(const LinsysFlags& f, const Output& out) {
    MonomialSystem sys = basis_Ws(f.n, f.s);

    json j;
    j["command"] = "linsys-basis";
    j["n"] = f.n;
    j["s"] = f.s;
    j["divisor_class"] =
        sys.divisor_class ? json(sys.divisor_class->str()) : json(nullptr);
    j["monomial_count"] = sys.monomials.size();
    json arr = json::array();
    std::string text = "|W_" + std::to_string(f.s) + "| on n=" + std::to_string(f.n);
    if (sys.divisor_class) text += ", class " + sys.divisor_class->str();
    text += " (" + std::to_string(sys.monomials.size()) + " monomials):\n";
    for (const auto& m : sys.monomials) {
        arr.push_back(monomial_str(m));
        text += "  " + monomial_str(m) + "\n";
    }
    j["monomials"] = arr;
    out.emit(j, text);
    return 0;
}

int run_linsys_baselocus(const LinsysFlags& f, const Output& out) {
    MonomialSystem sys = basis_Ws(f.n, f.s);
    std::vector<BaseLocusStratum> strata = base_locus(sys);

    json j;
    j["command"] = "linsys-baselocus";
    j["n"] = f.n;
    j["s"] = f.s;
    j["stratum_count"] = strata.size();
    json arr = json::array();
    std::string text = "base locus of |W_" + std::to_string(f.s) + "| (" +
                       std::to_string(strata.size()) + " strata):\n";
    for (const auto& st : strata) {
        json e;
        e["y"] = mask_indices(st.ymask, f.n);
        e["x"] = mask_indices(st.xmask, f.n);
        e["class"] = st.cls ? json(st.cls->str()) : json(nullptr);
        arr.push_back(e);
        text += "  y=0 on " + mask_str(st.ymask) + ", x=0 on " + mask_str(st.xmask);
        if (st.cls) text += "  ->  " + st.cls->str();
        text += "\n";
    }
    j["strata"] = arr;
    out.emit(j, text);
    return 0;
}

int run_linsys_mult(const LinsysFlags& f, const Output& out) {
    MonomialSystem sys = basis_Ws(f.n, f.s);
    auto [mult, witness] = multiplicity_along_L(sys);

    json j;
    j["command"] = "linsys-mult";
    j["n"] = f.n;
    j["s"] = f.s;
    j["multiplicity"] = mult;
    j["witness"] = monomial_str(witness);

    std::string text = "multiplicity of |W_" + std::to_string(f.s) +
                       "| along the fiber through the blown-up point: " +
                       std::to_string(mult) + " (witness " + monomial_str(witness) +
                       ")\n";
    out.emit(j, text);
    return 0;
}

int run_linsys_restrict(const LinsysFlags& f, const Output& out) {
    RestrictedOnE sys = restricted_system_on_E(f.n, f.s);

    auto zstr = [&](mask_t m) {
        std::string s;
        for (int i = 2; i <= f.n; ++i)
            if (mask_contains(m, i)) s += "z" + std::to_string(i);
        return s.empty() ? std::string("1") : s;
    };

    json j;
    j["command"] = "linsys-restrict";
    j["n"] = f.n;
    j["s"] = f.s;
    j["monomial_count"] = sys.monomials.size();
    json arr = json::array();
    std::string text = "restriction of |~W_" + std::to_string(f.s) +
                       "| to the exceptional divisor (" +
                       std::to_string(sys.monomials.size()) + " monomials):\n";
    for (mask_t m : sys.monomials) {
        arr.push_back(zstr(m));
        text += "  " + zstr(m) + "\n";
    }
    j["monomials"] = arr;
    json mults = json::array();
    for (int jj = 2; jj <= f.n; ++jj) {
        int mu = fundamental_point_multiplicity(sys, jj);
        mults.push_back(json{{"j", jj}, {"multiplicity", mu}});
        text += "multiplicity at fundamental point " + std::to_string(jj) + ": " +
                std::to_string(mu) + "\n";
    }
    j["fundamental_point_multiplicities"] = mults;
    out.emit(j, text);
    return 0;
}

int run_verify(const std::string& suite, int max_n, const Output& out) {
    json j;
    j["command"] = "verify";
    j["suite"] = suite;
    j["max_n"] = max_n;
    std::string text;
    bool pass = true;

    if (suite == "all") {
        std::vector<SuiteResult> results = run_all_suites(max_n);
        json arr = json::array();
        for (const auto& sr : results) {
            arr.push_back(suite_json(sr));
            text += suite_text(sr);
            pass = pass && sr.all_pass();
        }
        j["suites"] = arr;
        j["pass"] = pass;
    } else {
        SuiteResult sr = run_verify_suite(suite, max_n);
        json sj = suite_json(sr);
        for (auto& [k, v] : sj.items())
            if (k != "suite") j[k] = v;
        text = suite_text(sr);
        pass = sr.all_pass();
    }
    text += pass ? "VERIFIED\n" : "FAILED\n";
    out.emit(j, text);
    return pass ? 0 : 1;
}

int run_status(const NkrFlags& f, const Output& out) {
    BoundReport rep = status(f.n, f.k, f.r);
    bool mds = is_mori_dream(f.n, f.r);

    json j;
    j["command"] = "status";
    j["n"] = f.n;
    j["k"] = f.k;
    j["r"] = f.r;
    j["status"] = rep.status;
    j["rule"] = rep.rule;
    j["mori_dream"] = mds;

    std::string text = "n=" + std::to_string(f.n) + " k=" + std::to_string(f.k) +
                       " r=" + std::to_string(f.r) + ": " + rep.status +
                       " (rule: " + rep.rule + "; mori dream: " +
                       (mds ? "yes" : "no") + ")\n";
    out.emit(j, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "cyclecone: exact intersection theory and cones of effective cycles "
        "on blowups of products of projective lines at very general points"};
    app.require_subcommand(1);

    Output out;
    add_output_flags(&app, out);

    // intersect
    NkrFlags intersect_f;
    std::vector<std::string> intersect_exprs;
    CLI::App* c_intersect = app.add_subcommand(
        "intersect", "Multiply class expressions in the Chow ring and take the degree");
    add_nkr(c_intersect, intersect_f, /*with_k=*/false);
    c_intersect->add_option("exprs", intersect_exprs, "Class expressions")
        ->required()
        ->expected(-1);
    add_output_flags(c_intersect, out);

    // pair
    NkrFlags pair_f;
    std::vector<std::string> pair_exprs;
    CLI::App* c_pair = app.add_subcommand(
        "pair", "Intersection pairing of a k-class against an (n-k)-class");
    add_nkr(c_pair, pair_f, /*with_k=*/true);
    c_pair->add_option("exprs", pair_exprs, "Two class expressions")
        ->required()
        ->expected(2);
    add_output_flags(c_pair, out);

    // cone members|dual|decompose
    CLI::App* c_cone = app.add_subcommand(
        "cone", "The cone of fibers CF_k: generators, dual rays, membership");
    c_cone->require_subcommand(1);
    NkrFlags cone_members_f, cone_dual_f, cone_dec_f;
    std::string cone_dec_expr;
    CLI::App* c_cone_members =
        c_cone->add_subcommand("members", "List the generators of CF_k");
    add_nkr(c_cone_members, cone_members_f, /*with_k=*/true);
    add_output_flags(c_cone_members, out);
    CLI::App* c_cone_dual = c_cone->add_subcommand(
        "dual", "Extremal rays of the dual cone of CF_k under the pairing");
    add_nkr(c_cone_dual, cone_dual_f, /*with_k=*/true);
    add_output_flags(c_cone_dual, out);
    CLI::App* c_cone_dec = c_cone->add_subcommand(
        "decompose", "Test membership in CF_k and decompose over the generators");
    add_nkr(c_cone_dec, cone_dec_f, /*with_k=*/true);
    c_cone_dec->add_option("expr", cone_dec_expr, "Class expression")->required();
    add_output_flags(c_cone_dec, out);

    // fan build|enumerate|classes
    CLI::App* c_fan = app.add_subcommand(
        "fan", "Toric fans of the blowup presets and their invariant cycles");
    c_fan->require_subcommand(1);
    FanFlags fan_build_f, fan_enum_f, fan_classes_f;
    CLI::App* c_fan_build =
        c_fan->add_subcommand("build", "Build and validate a preset fan");
    add_fan_flags(c_fan_build, fan_build_f, /*with_codim=*/false);
    add_output_flags(c_fan_build, out);
    CLI::App* c_fan_enum =
        c_fan->add_subcommand("enumerate", "Enumerate the cones of one codimension");
    add_fan_flags(c_fan_enum, fan_enum_f, /*with_codim=*/true);
    add_output_flags(c_fan_enum, out);
    CLI::App* c_fan_classes = c_fan->add_subcommand(
        "classes", "Cycle classes of the torus-invariant cycles in one codimension");
    add_fan_flags(c_fan_classes, fan_classes_f, /*with_codim=*/true);
    add_output_flags(c_fan_classes, out);

    // linsys basis|baselocus|mult|restrict
    CLI::App* c_linsys = app.add_subcommand(
        "linsys", "The linear systems |W_s|: monomial bases, base loci, multiplicities");
    c_linsys->require_subcommand(1);
    LinsysFlags ls_basis_f, ls_bl_f, ls_mult_f, ls_restrict_f;
    CLI::App* c_ls_basis =
        c_linsys->add_subcommand("basis", "Monomial basis and divisor class of |W_s|");
    add_linsys_flags(c_ls_basis, ls_basis_f);
    add_output_flags(c_ls_basis, out);
    CLI::App* c_ls_bl =
        c_linsys->add_subcommand("baselocus", "Minimal strata covering the base locus");
    add_linsys_flags(c_ls_bl, ls_bl_f);
    add_output_flags(c_ls_bl, out);
    CLI::App* c_ls_mult = c_linsys->add_subcommand(
        "mult", "Multiplicity along the fiber through the blown-up point");
    add_linsys_flags(c_ls_mult, ls_mult_f);
    add_output_flags(c_ls_mult, out);
    CLI::App* c_ls_restrict = c_linsys->add_subcommand(
        "restrict", "Restriction to the exceptional divisor of the curve blowup");
    add_linsys_flags(c_ls_restrict, ls_restrict_f);
    add_output_flags(c_ls_restrict, out);

    // verify
    std::string verify_suite;
    int verify_max_n = 0;
    CLI::App* c_verify =
        app.add_subcommand("verify", "Run a verification suite (or all of them)");
    std::vector<std::string> suite_names = verify_suite_names();
    suite_names.insert(suite_names.begin(), "all");
    c_verify->add_option("suite", verify_suite, "Suite name")
        ->required()
        ->check(CLI::IsMember(suite_names));
    c_verify->add_option("--max-n", verify_max_n,
                         "Cap the sweep dimension (0 = suite default)");
    add_output_flags(c_verify, out);

    // status
    NkrFlags status_f;
    CLI::App* c_status = app.add_subcommand(
        "status", "Fiber-generation status of the cone of k-cycles");
    add_nkr(c_status, status_f, /*with_k=*/true);
    add_output_flags(c_status, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_intersect) return run_intersect(intersect_f, intersect_exprs, out);
        if (*c_pair) return run_pair(pair_f, pair_exprs, out);
        if (*c_cone_members) return run_cone_members(cone_members_f, out);
        if (*c_cone_dual) return run_cone_dual(cone_dual_f, out);
        if (*c_cone_dec) return run_cone_decompose(cone_dec_f, cone_dec_expr, out);
        if (*c_fan_build) return run_fan_build(fan_build_f, out);
        if (*c_fan_enum) return run_fan_enumerate(fan_enum_f, out);
        if (*c_fan_classes) return run_fan_classes(fan_classes_f, out);
        if (*c_ls_basis) return run_linsys_basis(ls_basis_f, out);
        if (*c_ls_bl) return run_linsys_baselocus(ls_bl_f, out);
        if (*c_ls_mult) return run_linsys_mult(ls_mult_f, out);
        if (*c_ls_restrict) return run_linsys_restrict(ls_restrict_f, out);
        if (*c_verify) return run_verify(verify_suite, verify_max_n, out);
        if (*c_status) return run_status(status_f, out);
    } catch (const parse_error& e) {
        std::cerr << "cyclecone: syntax error at byte " << e.offset << ": "
                  << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        std::cerr << "cyclecone: " << e.what() << "\n";
        return 1;
    } catch (const error& e) {
        std::cerr << "cyclecone: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "cyclecone: internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

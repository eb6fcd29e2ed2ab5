#include "supermod/cli.hpp"

#include "supermod/hciso.hpp"
#include "supermod/hwmod.hpp"
#include "supermod/pbw.hpp"
#include "supermod/possys.hpp"
#include "supermod/verify.hpp"
#include "supermod/weylgroup.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <ostream>
#include <sstream>

namespace supermod::cli {

namespace {

struct FamilyArgs {
    std::string family;
    int m = -1, n = -1;
    std::string alpha;
    std::string form;
    int p = -1, q = -1, r = -1, s = -1;
};

void add_family_options(CLI::App* cmd, FamilyArgs& fa, bool with_form) {
    cmd->add_option("--family", fa.family, "family tag: A, B, C, D, D21a, F4, G3")->required();
    cmd->add_option("--m", fa.m, "first family parameter");
    cmd->add_option("--n", fa.n, "second family parameter");
    cmd->add_option("--alpha", fa.alpha, "parameter of D(2,1;alpha), e.g. 1/2");
    if (with_form) {
        cmd->add_option("--form", fa.form, "real form key (so2, so-star, so-compact, sp, su, ...)");
        cmd->add_option("--p", fa.p, "A-family splitting p");
        cmd->add_option("--q", fa.q, "A-family splitting q");
        cmd->add_option("--r", fa.r, "A-family splitting r");
        cmd->add_option("--s", fa.s, "A-family splitting s");
    }
}

Family parse_family(const FamilyArgs& fa) {
    if (fa.family == "A") {
        if (fa.m < 0 || fa.n < 0) throw CLI::ValidationError("--family A requires --m and --n");
        return Family::A(fa.m, fa.n);
    }
    if (fa.family == "B") {
        if (fa.m < 0 || fa.n < 0) throw CLI::ValidationError("--family B requires --m and --n");
        return Family::B(fa.m, fa.n);
    }
    if (fa.family == "C") {
        if (fa.n < 0) throw CLI::ValidationError("--family C requires --n");
        return Family::C(fa.n);
    }
    if (fa.family == "D") {
        if (fa.m < 0 || fa.n < 0) throw CLI::ValidationError("--family D requires --m and --n");
        return Family::D(fa.m, fa.n);
    }
    if (fa.family == "D21a") {
        if (fa.alpha.empty()) throw CLI::ValidationError("--family D21a requires --alpha");
        return Family::D21(rat_parse(fa.alpha));
    }
    if (fa.family == "F4") return Family::F4();
    if (fa.family == "G3") return Family::G3();
    throw CLI::ValidationError("unknown family: " + fa.family);
}

HermitianPair parse_pair(const FamilyArgs& fa) {
    Family f = parse_family(fa);
    std::string key = fa.form;
    if (key.empty()) key = legal_form_keys(f).front();
    if (f.kind == FamilyKind::A) {
        int p = fa.p, q = fa.q, r = fa.r, s = fa.s;
        if (p < 0 && q < 0 && r < 0 && s < 0) {
            // default to the fully noncompact splitting su(m,1)+su(n,1)
            p = f.m;
            q = 1;
            r = f.n;
            s = 1;
        }
        return build_hermitian_pair(f, key, p, q, r, s);
    }
    return build_hermitian_pair(f, key);
}

Weight parse_lambda(const Family& f, const std::string& text) {
    std::vector<Rational> coords;
    std::string cur;
    std::stringstream ss(text);
    while (std::getline(ss, cur, ',')) coords.push_back(rat_parse(cur));
    Weight w{coords};
    if (f.kind == FamilyKind::G3 && w.dim() == 4) w = g3_normalize(w);
    if (w.dim() != static_cast<size_t>(f.basis_dim()))
        throw CLI::ValidationError("lambda must have " + std::to_string(f.basis_dim()) +
                                   " coordinates for " + f.name());
    return w;
}

size_t enumeration_budget() {
    if (const char* env = std::getenv("SUPERMOD_BUDGET")) {
        long long v = std::atoll(env);
        if (v > 0) return static_cast<size_t>(v);
    }
    return 2'000'000;
}

void emit(std::ostream& out, const nlohmann::json& j, const std::string& format) {
    if (format == "json") {
        out << j.dump(2) << "\n";
    } else {
        // text: flat rendering, stable order
        std::ostringstream os;
        for (auto it = j.begin(); it != j.end(); ++it) {
            os << it.key() << ": " << it.value().dump() << "\n";
        }
        out << os.str();
    }
}

nlohmann::json roots_json(const std::vector<Root>& rs) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& r : rs) a.push_back(weight_to_json(r.w));
    return a;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations with highest weight modules over basic classical Lie superalgebras"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "output format: json or text")->check(CLI::IsMember({"json", "text"}));

    FamilyArgs fa;
    std::string lambda_text, mu_text, method = "formula";
    long long depth = 0;
    bool quick = false;

    auto* roots = app.add_subcommand("roots", "root system of a family");
    add_family_options(roots, fa, false);

    auto* admissible = app.add_subcommand("admissible", "standard admissible system of a Hermitian pair");
    add_family_options(admissible, fa, true);

    auto* character = app.add_subcommand("character", "truncated supercharacter of the universal module");
    add_family_options(character, fa, true);
    character->add_option("--lambda", lambda_text, "highest weight coordinates, e.g. \"5\" or \"1/2,-3,0\"")
        ->required();
    character->add_option("--depth", depth, "truncation height")->required();
    character->add_option("--method", method, "formula or bruteforce")
        ->check(CLI::IsMember({"formula", "bruteforce"}));

    auto* irreducible = app.add_subcommand("irreducible", "irreducibility criterion and singular vector scan");
    add_family_options(irreducible, fa, true);
    irreducible->add_option("--lambda", lambda_text, "highest weight coordinates")->required();
    irreducible->add_option("--depth", depth, "singular vector scan depth (realized families)");

    auto* components = app.add_subcommand("components", "number of irreducible k-components of p_1^+");
    add_family_options(components, fa, true);

    auto* linkage_cmd = app.add_subcommand("linkage", "infinitesimal character linkage of two weights");
    add_family_options(linkage_cmd, fa, true);
    linkage_cmd->add_option("--lambda", lambda_text, "highest weight coordinates")->required();
    linkage_cmd->add_option("--mu", mu_text, "second weight")->required();

    auto* typical = app.add_subcommand("typical", "typicality of lambda (with respect to lambda+rho)");
    add_family_options(typical, fa, true);
    typical->add_option("--lambda", lambda_text, "highest weight coordinates")->required();

    auto* table = app.add_subcommand("table", "case table of a Hermitian pair");
    add_family_options(table, fa, true);

    auto* verify = app.add_subcommand("verify", "run the invariant verification suite");
    verify->add_flag("--quick", quick, "trim the randomized checks");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (roots->parsed()) {
            auto sys = build_root_system(parse_family(fa));
            emit(out, root_system_to_json(sys), format);
            return 0;
        }
        if (admissible->parsed() || table->parsed()) {
            auto pair = parse_pair(fa);
            auto p = standard_admissible_system(pair);
            auto rep = positive_system_report(pair, p);
            if (table->parsed()) {
                nlohmann::json pi = nlohmann::json::array();
                for (const auto& rt : simple_roots(p).roots) pi.push_back(weight_to_json(rt.w));
                rep["Pi"] = pi;
                rep["roots_even"] = roots_json(pair.sys->even_roots());
                rep["roots_odd"] = roots_json(pair.sys->odd_roots());
            }
            emit(out, rep, format);
            return 0;
        }
        if (character->parsed()) {
            auto pair = parse_pair(fa);
            auto p = standard_admissible_system(pair);
            HighestWeight hw(pair, p, parse_lambda(pair.family, lambda_text));
            auto ch = method == "formula" ? character_formula(hw, depth) : character_bruteforce(hw, depth);
            emit(out, character_to_json(ch), format);
            return 0;
        }
        if (irreducible->parsed()) {
            auto pair = parse_pair(fa);
            auto p = standard_admissible_system(pair);
            HighestWeight hw(pair, p, parse_lambda(pair.family, lambda_text));
            nlohmann::json j;
            j["criterion"] = check_irreducibility_criterion(hw);
            j["depth"] = depth;
            if (pair.family.has_realization() && depth > 0) {
                auto model = shared_algebra_model(pair.family);
                ModuleSlice slice = build_module_slice(model, hw, depth);
                j["singular_vectors"] = singular_vectors_to_json(slice, find_singular_vectors(slice, hw));
            } else {
                j["singular_vectors"] = nullptr;
            }
            emit(out, j, format);
            return 0;
        }
        if (components->parsed()) {
            auto pair = parse_pair(fa);
            auto p = standard_admissible_system(pair);
            nlohmann::json j;
            j["family"] = pair.family.name();
            j["form"] = pair.form_label;
            j["components_p1"] = count_p1_components(pair, p);
            emit(out, j, format);
            return 0;
        }
        if (linkage_cmd->parsed() || typical->parsed()) {
            auto pair = parse_pair(fa);
            auto p = standard_admissible_system(pair);
            Weight lambda = parse_lambda(pair.family, lambda_text);
            Weight r = rho(p);
            nlohmann::json j;
            j["typical"] = is_typical(*pair.sys, lambda + r);
            if (linkage_cmd->parsed()) {
                Weight mu = parse_lambda(pair.family, mu_text);
                WeylGroup w = even_weyl_group(*pair.sys);
                j["linked"] = linkage(*pair.sys, w, r, lambda, mu); // throws when atypical
            }
            emit(out, j, format);
            return 0;
        }
        if (verify->parsed()) {
            VerifyOptions opt;
            opt.quick = quick;
            opt.budget = enumeration_budget();
            auto results = run_all_checks(opt);
            size_t failed = 0;
            for (const auto& cr : results) {
                out << (cr.pass ? "[PASS] " : "[FAIL] ") << cr.name;
                if (!cr.detail.empty()) out << " -- " << cr.detail;
                out << "\n";
                if (!cr.pass) ++failed;
            }
            out << results.size() - failed << "/" << results.size() << " checks passed\n";
            return failed == 0 ? 0 : 1;
        }
    } catch (const AtypicalWeightError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::Error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace supermod::cli

// Command-line front end. JSON goes to stdout, diagnostics to stderr.
// Exit codes: 0 success, 1 domain error, 2 usage or parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "superpoint/checks.hpp"
#include "superpoint/io.hpp"

using namespace superpoint;
using io::Json;

namespace {

struct AlgebraFlags {
    std::uint32_t p = 3;
    std::string family = "witt";
    std::uint32_t n = 1;
    std::optional<std::uint32_t> m;
    std::uint32_t field_degree = 1;

    void attach(CLI::App* cmd, bool with_field = true) {
        cmd->add_option("--p", p, "characteristic (odd prime)");
        cmd->add_option("--family", family, "witt, exterior or elem_abelian");
        cmd->add_option("--n", n, "number of even generators");
        cmd->add_option("--m", m, "height of the last generator (witt only)");
        if (with_field) cmd->add_option("--field-degree", field_degree, "degree e of the field F_{p^e}");
    }

    AlgebraPresentation algebra() const {
        const Family fam = parse_family(family);
        std::uint32_t height = 0;
        if (fam == Family::Witt) height = m.value_or(2);
        else if (m) fail(ErrorCode::BadParameters, "only the witt family takes --m");
        return AlgebraPresentation::create(p, fam, n, height);
    }

    FiniteField field() const { return FiniteField::create(p, field_degree); }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::Parse, "cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json read_json(const std::string& path) { return io::parse_text(read_file(path)); }

GradedModule read_module(const std::string& path) { return io::module_from_json(read_json(path)); }

BlockForm block_form(const std::string& flag, const AlgebraPresentation& alg) {
    if (flag == "printed") return alg.family() == Family::ExteriorLike ? BlockForm::Printed : BlockForm::Theorem;
    if (flag == "thm") return BlockForm::Theorem;
    fail(ErrorCode::Parse, "--exterior-matrix must be thm or printed");
}

Json frobenius_convention(Family family) {
    switch (family) {
        case Family::Witt: return "[a_1^p, .., a_n^p, a_{n+1}^{2p}]";
        case Family::ExteriorLike: return "[a_1^p, .., a_n^p, -a_{n+1}^2]";
        case Family::ElemAbelian: return "[a_1^p, .., a_n^p]";
    }
    return nullptr;
}

Json optional_vec(const FiniteField& F, const std::optional<Vec>& v) { return v ? io::vec_to_json(F, *v) : Json(nullptr); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Representations of elementary supergroup schemes: modules, pi-points and rank varieties"};
    app.require_subcommand(1);

    std::string module_path, left_path, right_path, spec_path, point_text, a_text, b_text, xi_text;
    std::string exterior_matrix = "thm";
    std::uint32_t ext_degree = 1, max_ext = 2, b_field_degree = 0;
    std::uint64_t budget = 10'000'000, seed = 0;
    std::size_t dim = 6, length = 4, degree = 2;
    double parity_split = 0.5, scale = 1.0;
    bool parallel = false, keep_basis = false;
    unsigned threads = 0;
    AlgebraFlags alg_flags;

    auto add_variety_flags = [&](CLI::App* cmd) {
        cmd->add_option("--budget", budget, "maximum number of enumerated points");
        cmd->add_flag("--parallel", parallel, "enumerate points on several threads");
        cmd->add_option("--threads", threads, "worker count for --parallel (0: all cores)");
        cmd->add_option("--exterior-matrix", exterior_matrix, "thm or printed")->check(CLI::IsMember({"thm", "printed"}));
    };

    auto* info = app.add_subcommand("algebra-info", "describe an algebra");
    alg_flags.attach(info, false);

    auto* validate_cmd = app.add_subcommand("module-validate", "check the relations on a module file");
    validate_cmd->add_option("--module", module_path)->required();

    auto* random_cmd = app.add_subcommand("module-random", "emit a seeded random module");
    alg_flags.attach(random_cmd);
    random_cmd->add_option("--dim", dim, "upper bound on the dimension");
    random_cmd->add_option("--seed", seed);
    random_cmd->add_option("--parity-split", parity_split, "probability of shifting each summand")->check(CLI::Range(0.0, 1.0));
    random_cmd->add_flag("--keep-basis", keep_basis, "skip the random change of basis");

    auto* tensor_cmd = app.add_subcommand("tensor", "tensor product of two modules");
    auto* hom_cmd = app.add_subcommand("hom", "internal Hom of two modules");
    for (auto* cmd : {tensor_cmd, hom_cmd}) {
        cmd->add_option("--left", left_path)->required();
        cmd->add_option("--right", right_path)->required();
    }

    auto* restrict_cmd = app.add_subcommand("restrict", "restrict a module along a pi-point or algebra map");
    restrict_cmd->add_option("--module", module_path)->required();
    auto* point_opt = restrict_cmd->add_option("--point", point_text, "JSON array of coordinates");
    auto* spec_opt = restrict_cmd->add_option("--spec", spec_path, "algebra map file");
    point_opt->excludes(spec_opt);
    restrict_cmd->add_option("--exterior-matrix", exterior_matrix)->check(CLI::IsMember({"thm", "printed"}));

    auto* variety_cmd = app.add_subcommand("rank-variety", "enumerate the rank variety over F_{p^e}");
    auto* support_cmd = app.add_subcommand("support", "projective support set over F_{p^e}");
    for (auto* cmd : {variety_cmd, support_cmd}) {
        cmd->add_option("--module", module_path)->required();
        cmd->add_option("--ext-degree", ext_degree, "enumeration field degree e");
        add_variety_flags(cmd);
    }

    auto* proj_cmd = app.add_subcommand("is-projective", "freeness verdict with a rank-variety witness");
    proj_cmd->add_option("--module", module_path)->required();
    proj_cmd->add_option("--max-ext", max_ext, "largest enumeration degree searched");
    add_variety_flags(proj_cmd);

    auto* resolve_cmd = app.add_subcommand("resolve", "minimal free resolution (of k when no module is given)");
    resolve_cmd->add_option("--module", module_path);
    resolve_cmd->add_option("--length", length);
    alg_flags.attach(resolve_cmd);

    auto* carlson_cmd = app.add_subcommand("carlson", "Carlson module of an even cohomology class");
    alg_flags.attach(carlson_cmd);
    carlson_cmd->add_option("--degree", degree, "even cohomological degree");
    carlson_cmd->add_option("--xi", xi_text, "JSON array: values on the generators of F_degree")->required();

    auto* pi = app.add_subcommand("pi", "pi-point operations");
    pi->require_subcommand(1);
    auto* norm_cmd = app.add_subcommand("pi-normalize", "standard representative of an algebra map");
    auto* norm_alias = pi->add_subcommand("normalize", "alias of pi-normalize");
    auto* equiv_cmd = app.add_subcommand("pi-equiv", "compare two standard pi-points");
    auto* equiv_alias = pi->add_subcommand("equiv", "alias of pi-equiv");
    for (auto* cmd : {norm_cmd, norm_alias}) cmd->add_option("--spec", spec_path)->required();
    for (auto* cmd : {equiv_cmd, equiv_alias}) {
        alg_flags.attach(cmd);
        cmd->add_option("--a", a_text)->required();
        cmd->add_option("--b", b_text)->required();
        cmd->add_option("--b-field-degree", b_field_degree, "field degree of b (default: --field-degree)");
    }

    auto* suite_cmd = app.add_subcommand("check-suite", "run the property battery");
    suite_cmd->add_option("--scale", scale, "fraction of the full corpus sizes")->check(CLI::Range(0.001, 1.0));
    suite_cmd->add_flag("--parallel", parallel);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::Error& e) {
        app.exit(e);
        return 2;
    }

    VarietyOptions vopt;
    vopt.budget = budget;
    vopt.parallel = parallel;
    vopt.threads = threads;

    try {
        Json out;
        int code = 0;
        if (info->parsed()) {
            const auto alg = alg_flags.algebra();
            Json gens = Json::array();
            for (std::size_t i = 0; i < alg.generator_count(); ++i)
                gens.push_back({{"name", alg.generator_name(i)}, {"parity", alg.parity(alg.generator_index(i))}});
            out = {{"algebra", io::algebra_to_json(alg)}, {"dim", alg.dim()}, {"generators", gens},
                   {"relations", alg.relations()}, {"description", alg.description()}};
        } else if (validate_cmd->parsed()) {
            const auto M = read_module(module_path);
            const auto v = validate(M);
            out = {{"valid", v.empty()}, {"violations", v}, {"dim", M.dim()}};
            code = v.empty() ? 0 : 1;
        } else if (random_cmd->parsed()) {
            RandomModuleSpec spec{seed, dim, alg_flags.algebra(), alg_flags.field(), parity_split, !keep_basis};
            out = io::module_to_json(module_random(spec));
        } else if (tensor_cmd->parsed() || hom_cmd->parsed()) {
            const auto L = read_module(left_path), R = read_module(right_path);
            out = io::module_to_json(tensor_cmd->parsed() ? tensor(L, R) : internal_hom(L, R));
        } else if (restrict_cmd->parsed()) {
            const auto M = read_module(module_path);
            const BlockForm form = block_form(exterior_matrix, M.alg);
            RestrictedAction r;
            if (!spec_path.empty()) {
                r = general_restriction(M, io::spec_from_json(read_json(spec_path)));
            } else {
                if (point_text.empty()) fail(ErrorCode::Parse, "restrict needs --point or --spec");
                r = standard_restriction(M, io::point_from_json(M.alg, M.field, io::parse_text(point_text)));
            }
            out = {{"T", io::mat_to_json(M.field, r.T)}, {"Tau", io::mat_to_json(M.field, r.Tau)},
                   {"max_image", max_image_test(r, form)}};
        } else if (variety_cmd->parsed() || support_cmd->parsed()) {
            const auto M = read_module(module_path);
            vopt.form = block_form(exterior_matrix, M.alg);
            const auto V = rank_variety(M, ext_degree, vopt);
            if (variety_cmd->parsed()) {
                out = io::variety_to_json(V);
            } else {
                const auto S = support_from(M, V);
                out = {{"field", io::field_to_json(S.field)}, {"projective_points", io::points_to_json(S.field, S.points)},
                       {"frobenius", frobenius_convention(M.alg.family())}};
            }
        } else if (proj_cmd->parsed()) {
            const auto M = read_module(module_path);
            vopt.form = block_form(exterior_matrix, M.alg);
            const auto rep = is_projective(M, max_ext, vopt);
            Json wf = nullptr, w = nullptr;
            if (rep.witness) {
                const auto K = FiniteField::create(M.field.characteristic(), rep.witness_degree);
                wf = io::field_to_json(K);
                w = optional_vec(K, rep.witness);
            }
            out = {{"verdict", verdict_name(rep.verdict)}, {"is_free", rep.is_free}, {"witness", w},
                   {"witness_field", wf}, {"max_ext", rep.max_ext}};
        } else if (resolve_cmd->parsed()) {
            const GradedModule M = module_path.empty() ? trivial_module(alg_flags.algebra(), alg_flags.field())
                                                       : read_module(module_path);
            out = io::resolution_to_json(minimal_resolution(M, length));
        } else if (carlson_cmd->parsed()) {
            const auto alg = alg_flags.algebra();
            const auto F = alg_flags.field();
            const auto cd = carlson_data(alg, F, {degree, io::vec_from_json(F, io::parse_text(xi_text))});
            out = {{"module", io::module_to_json(cd.module)}, {"omega_dim", cd.omega.dim()}, {"dim", cd.module.dim()},
                   {"degree", degree}};
        } else if (norm_cmd->parsed() || norm_alias->parsed()) {
            const auto spec = io::spec_from_json(read_json(spec_path));
            const Vec b = coefficient_tuple(spec);
            const auto a = normalize(spec);
            out = {{"coefficients", io::vec_to_json(spec.field, b)},
                   {"point", io::vec_to_json(a.field, a.coords)},
                   {"field", io::field_to_json(a.field)},
                   {"frobenius_image", io::vec_to_json(a.field, frobenius_image(a))},
                   {"frobenius", frobenius_convention(spec.alg.family())},
                   {"prime_ideal", prime_ideal_generators(a)}};
        } else if (equiv_cmd->parsed() || equiv_alias->parsed()) {
            const auto alg = alg_flags.algebra();
            const auto Fa = alg_flags.field();
            const auto Fb = FiniteField::create(alg_flags.p, b_field_degree ? b_field_degree : alg_flags.field_degree);
            const auto a = io::point_from_json(alg, Fa, io::parse_text(a_text));
            const auto b = io::point_from_json(alg, Fb, io::parse_text(b_text));
            out = {{"equivalent", equivalent(a, b)},
                   {"frobenius_a", io::vec_to_json(Fa, frobenius_image(a))},
                   {"frobenius_b", io::vec_to_json(Fb, frobenius_image(b))}};
        } else if (suite_cmd->parsed()) {
            checks::SuiteOptions sopt;
            sopt.scale = scale;
            sopt.variety.parallel = parallel;
            Json results = Json::array();
            bool ok = true;
            for (const auto& r : checks::run_suite(sopt)) {
                results.push_back({{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
                ok = ok && r.ok;
            }
            out = {{"checks", results}, {"ok", ok}};
            code = ok ? 0 : 1;
        }
        std::cout << io::dump(out);
        return code;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::Parse ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

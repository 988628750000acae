/*
 * Command line front end: file-based access to the bi-decomposition,
 * effectiveness, prolongation, system construction, classification, duality,
 * solution verification, and flat-symmetry operations.
 *
 * Exit codes: 0 success or verified, 1 verified negative, 2 precondition
 * failure, 3 file parse error.
 */

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "malp/bidecomp.hpp"
#include "malp/io.hpp"
#include "malp/masystem.hpp"
#include "malp/prolong.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kPrecondition = 2;
constexpr int kParse = 3;

std::string indent_block(const std::string& text) {
    std::istringstream in(text);
    std::ostringstream out;
    for (std::string line; std::getline(in, line);) out << "  " << line << "\n";
    return out.str();
}

std::vector<malp::Rational> parse_rational_list(const std::string& csv) {
    std::vector<malp::Rational> out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t comma = csv.find(',', start);
        std::string piece =
            comma == std::string::npos ? csv.substr(start) : csv.substr(start, comma - start);
        out.push_back(malp::Rational::parse(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot write '" + path + "'");
    return file;
}

struct DecomposeOpts {
    std::string form_file, hint_file;
    int trials = 0;
    std::uint64_t seed = 1;
};

int run_decompose(const DecomposeOpts& o) {
    malp::ExteriorForm w = malp::read_exterior_form_file(o.form_file);
    if (w.dim() % 2 != 0 || w.dim() == 0) {
        std::cerr << "error: the form must live on an even-dimensional space\n";
        return kPrecondition;
    }
    int n = w.dim() / 2;
    if (w.degree() != n) {
        std::cerr << "error: expected degree " << n << " on dimension " << 2 * n << ", got degree "
                  << w.degree() << "\n";
        return kPrecondition;
    }
    malp::ExteriorForm theta = malp::standard_symplectic(n);

    malp::BiDecomposition bd;
    if (!o.hint_file.empty()) {
        auto [v1, v2] = malp::read_subspace_pair_file(o.hint_file);
        malp::VerifyResult vr = malp::verify_bidecomposition(w, v1, v2, theta);
        if (!vr.ok) {
            std::cout << "status: FAIL " << vr.reason << "\n";
            return kNegative;
        }
        bd = *vr.value;
    } else if (n % 2 == 1) {
        try {
            bd = malp::bidecompose_odd(w, theta);
        } catch (const std::domain_error& e) {
            std::cout << "status: FAIL " << e.what() << "\n";
            return kNegative;
        }
    } else {
        std::cerr << "error: blind recovery is only available for odd degree; the splitting "
                     "operator degenerates to a multiple of the identity at even degree, so a "
                     "candidate annihilator pair must be supplied with --pair-hint\n";
        return kPrecondition;
    }

    malp::NormalizedPair np = malp::normalize_symplectic(bd.w1, bd.w2, theta);
    std::cout << "c = " << np.c.str() << "\n";
    for (int half = 0; half < 2; ++half) {
        std::ostringstream body;
        malp::write_exterior_form(body, half == 0 ? bd.w1 : bd.w2);
        std::cout << "omega" << half + 1 << ":\n" << indent_block(body.str());
    }
    for (int half = 0; half < 2; ++half) {
        std::cout << "V" << half + 1 << " basis:\n";
        for (const auto& v : (half == 0 ? bd.V1 : bd.V2).basis) {
            std::cout << "  vector";
            for (const auto& c : v) std::cout << " " << c.str();
            std::cout << "\n";
        }
    }
    if (o.trials > 0) {
        std::vector<std::pair<malp::Subspace, malp::Subspace>> extras{{bd.V1, bd.V2}};
        malp::UniquenessReport ur = malp::uniqueness_oracle(w, theta, o.trials, o.seed, extras);
        std::cout << "trials = " << ur.trials << "\n";
        std::cout << "accepted = " << ur.accepted_count << "\n";
        std::cout << "distinct pairs = " << ur.distinct_pairs.size() << "\n";
    }
    std::cout << "status: OK\n";
    return kOk;
}

int run_check(const std::string& form_file) {
    malp::ExteriorForm w = malp::read_exterior_form_file(form_file);
    if (w.dim() % 2 != 0 || w.dim() == 0) {
        std::cerr << "error: the form must live on an even-dimensional space\n";
        return kPrecondition;
    }
    int n = w.dim() / 2;
    if (w.degree() != n) {
        std::cerr << "error: effectiveness is tested for degree " << n << " on dimension "
                  << 2 * n << "\n";
        return kPrecondition;
    }
    bool eff = malp::is_effective(w, malp::standard_symplectic(n));
    std::cout << "effective: " << (eff ? "yes" : "no") << "\n";
    return eff ? kOk : kNegative;
}

int run_prolong(int n, const std::string& variant, int max_level, bool machine) {
    malp::ProlongVariant v = variant == "lc" ? malp::ProlongVariant::LagrangianContact
                                             : malp::ProlongVariant::BiDecomposableMA;
    malp::GradedLA g = malp::build_mg0(static_cast<std::size_t>(n), v);
    auto levels = malp::prolong_all(g, static_cast<std::size_t>(max_level));
    std::vector<std::pair<int, std::size_t>> table{
        {-2, 1}, {-1, 2 * g.n}, {0, g.g0_basis.size()}};
    for (std::size_t k = 0; k < levels.size(); ++k)
        table.emplace_back(static_cast<int>(k) + 1, levels[k].dim());
    std::size_t total = 0;
    for (const auto& [k, d] : table) total += d;
    for (const auto& [k, d] : table) {
        if (machine) std::cout << "k=" << k << " dim=" << d << "\n";
        else std::cout << "level " << k << " : dim " << d << "\n";
    }
    if (machine) std::cout << "total=" << total << "\n";
    else std::cout << "total : " << total << "\n";
    return kOk;
}

int run_construct(const std::string& input_file, const std::string& out_file) {
    malp::SystemDocument doc = malp::read_system_file(input_file);
    const malp::DiffForm* theta = doc.form("theta");
    const malp::DiffForm* omega1 = doc.form("Omega1");
    const malp::DiffForm* omega2 = doc.form("Omega2");
    const malp::PointMap* pi1 = doc.map("pi1");
    const malp::PointMap* pi2 = doc.map("pi2");
    for (auto [ptr, what] : {std::pair<const void*, const char*>{theta, "form theta"},
                             {omega1, "form Omega1"},
                             {omega2, "form Omega2"},
                             {pi1, "map pi1"},
                             {pi2, "map pi2"}})
        if (!ptr) throw std::invalid_argument(std::string("input needs a ") + what);
    malp::MASystem sys = malp::construct_ma(*omega1, *omega2, *theta, *pi1, *pi2);
    std::ofstream file;
    malp::write_system(open_output(file, out_file), sys);
    return kOk;
}

int run_classify(const std::string& system_file) {
    malp::MASystem sys = malp::system_from_document(malp::read_system_file(system_file));
    malp::Classification cl = malp::classify_hesse(sys);
    switch (cl.kind) {
        case malp::MAClass::General:
            std::cout << "kind: General\n";
            break;
        case malp::MAClass::Flat:
            std::cout << "kind: Flat\n";
            std::cout << "c = " << cl.c.str() << "\n";
            break;
        case malp::MAClass::Hesse:
            std::cout << "kind: Hesse\n";
            std::cout << "F = " << cl.F.str() << "\n";
            break;
        case malp::MAClass::EulerLagrange:
            std::cout << "kind: EulerLagrange\n";
            std::cout << "F = " << cl.F.str() << "\n";
            std::cout << "F1 = " << cl.F1.str() << "\n";
            std::cout << "F2 = " << cl.F2.str() << "\n";
            break;
    }
    return kOk;
}

int run_dual(const std::string& system_file, const std::string& out_file) {
    malp::MASystem sys = malp::system_from_document(malp::read_system_file(system_file));
    malp::MASystem dual = malp::legendre_dual(sys);
    std::ofstream file;
    malp::write_system(open_output(file, out_file), dual);
    return kOk;
}

int run_verify(const std::string& system_file, const std::string& lift_file) {
    malp::MASystem sys = malp::system_from_document(malp::read_system_file(system_file));
    malp::SystemDocument ld = malp::read_system_file(lift_file);
    const malp::PointMap* lift = ld.map("lift");
    if (!lift) throw std::invalid_argument("the lift file must declare a map named lift");
    malp::DiffForm residual = malp::verify_solution(sys, *lift);
    std::cout << "residual: " << residual.str() << "\n";
    return residual.is_zero() ? kOk : kNegative;
}

struct SymmetryOpts {
    std::string system_file, out_file;
    std::string k = "1", l = "1", A, a, b, cp = "0";
};

int run_symmetry(const SymmetryOpts& o) {
    malp::MASystem sys = malp::system_from_document(malp::read_system_file(o.system_file));
    if (sys.chart.dim() % 2 == 0) throw std::invalid_argument("the system chart must be odd-dimensional");
    std::size_t n = (sys.chart.dim() - 1) / 2;
    malp::FlatSymmetry g(n);
    g.k = malp::Rational::parse(o.k);
    g.l = malp::Rational::parse(o.l);
    g.cp = malp::Rational::parse(o.cp);
    if (!o.A.empty()) {
        auto entries = parse_rational_list(o.A);
        if (entries.size() != n * n)
            throw std::invalid_argument("--A expects " + std::to_string(n * n) +
                                        " comma-separated entries, row major");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) g.A.at(i, j) = entries[i * n + j];
    }
    for (auto [flag, dest] : {std::pair<const std::string*, std::vector<malp::Rational>*>{&o.a, &g.a},
                              {&o.b, &g.b}}) {
        if (flag->empty()) continue;
        auto entries = parse_rational_list(*flag);
        if (entries.size() != n)
            throw std::invalid_argument("translation vectors expect " + std::to_string(n) +
                                        " comma-separated entries");
        *dest = entries;
    }
    auto [image, scalars] = malp::apply_flat_symmetry(g, sys);
    std::cout << "theta scalar: " << scalars.first.str() << "\n";
    std::cout << "omega scalar: " << scalars.second.str() << "\n";
    if (!o.out_file.empty()) {
        std::ofstream file;
        malp::write_system(open_output(file, o.out_file), image);
    }
    return kOk;
}

const char* explain_text(const std::string& command) {
    if (command == "decompose")
        return "Splits a degree-n form on a symplectic 2n-space into a difference of two\n"
               "decomposable forms whose annihilators are a transversal Lagrangian pair.\n"
               "The splitting is recovered from the operator K obtained by contracting the\n"
               "form against itself through the volume element; the normalized trace of K^2\n"
               "must be the square of a nonzero rational. At even degree K collapses to a\n"
               "multiple of the identity, so a candidate pair must be supplied and verified.";
    if (command == "check")
        return "Tests effectiveness of a degree-n form on a symplectic 2n-space: contraction\n"
               "with the bivector dual to the symplectic form must vanish, equivalently the\n"
               "wedge with the symplectic form must vanish. Both routes are computed and\n"
               "must agree.";
    if (command == "prolong")
        return "Builds the graded algebra spanned by gamma, e_1..e_n, f_1..f_n with\n"
               "[e_i, f_j] = -delta_ij gamma, attaches the selected degree-zero matrix\n"
               "algebra, and computes each higher graded piece as the exact kernel of the\n"
               "defining linear conditions. The table lists level dimensions and the total.";
    if (command == "construct")
        return "Reads a contact form theta, two fibrations, and a volume form on each\n"
               "fibration target, and produces the generator omega by contracting the\n"
               "difference of their pullbacks with the Reeb field of theta. Rescaling theta\n"
               "changes omega by the inverse factor modulo theta, so the ideal is unchanged.";
    if (command == "classify")
        return "Classifies a system on the standard contact chart with generator\n"
               "f dx_1^..^dx_n - g dp_1^..^dp_n. The right-hand side is F = f/g. The system\n"
               "is variational exactly when f has no p-dependence and g, rewritten in the\n"
               "dual coordinates, has no x-dependence; equivalently both block differentials\n"
               "vanish modulo theta (both criteria are computed and must agree). It is flat\n"
               "when F is a nonzero constant.";
    if (command == "dual")
        return "Pushes the system through the involution (x, z, p) -> (p, sum x_i p_i - z, x),\n"
               "which negates the contact form and swaps the two Legendrian projections.\n"
               "A flat system with constant c maps to a flat system with constant 1/c.";
    if (command == "verify")
        return "Pulls the system generators back along a candidate map. The map must\n"
               "annihilate the contact form; the pullback of omega is printed as the\n"
               "residual, which vanishes exactly when the map is a geometric solution.";
    if (command == "symmetry")
        return "Applies an affine symmetry of the flat system given by nonzero scalars k and\n"
               "l, an invertible matrix A with (det A)^2 = (k l)^n, translations a and b,\n"
               "and an offset c'. The contact form scales by k/l and the generator by\n"
               "det A / l^n; both scalars are recomputed and verified exactly.";
    return "";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact exterior-algebra and contact-geometry toolkit"};
    app.require_subcommand(1);
    bool explain = false;
    app.add_flag("--explain", explain, "describe the computation before running it");

    DecomposeOpts dec;
    CLI::App* cmd_decompose = app.add_subcommand(
        "decompose", "split a form into a difference of decomposable pieces");
    cmd_decompose->add_option("form", dec.form_file, "form file")->required();
    cmd_decompose->add_option("--pair-hint", dec.hint_file, "subspace pair file");
    cmd_decompose->add_option("--trials", dec.trials, "uniqueness search trials");
    cmd_decompose->add_option("--seed", dec.seed, "random seed for the uniqueness search");

    std::string check_file;
    CLI::App* cmd_check = app.add_subcommand("check", "test effectiveness of a form");
    cmd_check->add_option("form", check_file, "form file")->required();

    int pr_n = 0, pr_max = 8;
    std::string pr_variant;
    bool pr_machine = false;
    CLI::App* cmd_prolong = app.add_subcommand("prolong", "graded prolongation dimensions");
    cmd_prolong->add_option("--n", pr_n, "rank parameter, n >= 2")->required();
    cmd_prolong->add_option("--variant", pr_variant, "algebra variant")
        ->required()
        ->check(CLI::IsMember({"lc", "ma"}));
    cmd_prolong->add_option("--max-level", pr_max, "termination bound");
    cmd_prolong->add_flag("--machine", pr_machine, "emit k=<int> dim=<int> lines");

    std::string con_file, con_out;
    CLI::App* cmd_construct = app.add_subcommand(
        "construct", "build a system from fibration data (theta, pi1, pi2, Omega1, Omega2)");
    cmd_construct->add_option("input", con_file, "document file")->required();
    cmd_construct->add_option("-o,--output", con_out, "write the system here (default stdout)");

    std::string cls_file;
    CLI::App* cmd_classify = app.add_subcommand("classify", "classify a standard-chart system");
    cmd_classify->add_option("system", cls_file, "system file")->required();

    std::string dual_file, dual_out;
    CLI::App* cmd_dual = app.add_subcommand("dual", "push a system through the dual involution");
    cmd_dual->add_option("system", dual_file, "system file")->required();
    cmd_dual->add_option("-o,--output", dual_out, "write the dual system here (default stdout)");

    std::string ver_system, ver_lift;
    CLI::App* cmd_verify = app.add_subcommand("verify", "pull the generators back along a lift");
    cmd_verify->add_option("system", ver_system, "system file")->required();
    cmd_verify->add_option("lift", ver_lift, "lift file declaring a map named lift")->required();

    SymmetryOpts sym;
    CLI::App* cmd_symmetry = app.add_subcommand("symmetry", "apply a flat-symmetry element");
    cmd_symmetry->add_option("system", sym.system_file, "system file")->required();
    cmd_symmetry->add_option("--k", sym.k, "scalar k");
    cmd_symmetry->add_option("--l", sym.l, "scalar l");
    cmd_symmetry->add_option("--A", sym.A, "matrix entries, row major, comma separated");
    cmd_symmetry->add_option("--a", sym.a, "covector entries, comma separated");
    cmd_symmetry->add_option("--b", sym.b, "translation entries, comma separated");
    cmd_symmetry->add_option("--cp", sym.cp, "scalar offset");
    cmd_symmetry->add_option("-o,--output", sym.out_file,
                             "write the transformed system here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kPrecondition;
    }

    if (explain) {
        std::cout << explain_text(app.get_subcommands().front()->get_name()) << "\n\n";
    }

    try {
        if (app.got_subcommand(cmd_decompose)) return run_decompose(dec);
        if (app.got_subcommand(cmd_check)) return run_check(check_file);
        if (app.got_subcommand(cmd_prolong))
            return run_prolong(pr_n, pr_variant, pr_max, pr_machine);
        if (app.got_subcommand(cmd_construct)) return run_construct(con_file, con_out);
        if (app.got_subcommand(cmd_classify)) return run_classify(cls_file);
        if (app.got_subcommand(cmd_dual)) return run_dual(dual_file, dual_out);
        if (app.got_subcommand(cmd_verify)) return run_verify(ver_system, ver_lift);
        if (app.got_subcommand(cmd_symmetry)) return run_symmetry(sym);
    } catch (const malp::FileParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kPrecondition;
    }
    return kPrecondition;
}

// kvf: exact and numeric checks for constant-length fields on spheres,
// spin(9) spinor arithmetic, maximal-displacement certificates, and the
// harmonic combination calculus for diagonal invariant metrics.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "kvf/batch.hpp"
#include "kvf/deltacheck.hpp"
#include "kvf/firey.hpp"
#include "kvf/killing.hpp"
#include "kvf/spin9.hpp"
#include "kvf/textio.hpp"
#include "kvf/verify.hpp"

using namespace kvf;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

Rat parse_rat_flag(const std::string& s) { return parse_rat(s); }

void print_report(const RunReport& rep, const std::string& format) {
    if (format == "json")
        std::cout << render_json(rep) << "\n";
    else
        std::cout << render_table(rep);
}

int run_verify(const VerifyOptions& opt, const std::string& format) {
    auto rep = verify_paper(opt);
    print_report(rep, format);
    return rep.all_pass() ? 0 : 1;
}

int run_construct(const std::string& family, int n, const std::string& vector_path,
                  const std::string& mode, const std::string& format) {
    const Family fam = parse_family(family, n);
    RunReport rep;
    rep.mode = mode;
    if (fam.kind == FamilyKind::Spin9) {
        auto u = parse_vector(read_file(vector_path), Field::R);
        std::vector<Rat> u16;
        for (const auto& x : u) u16.push_back(x.re());
        if (u16.size() != 16) throw std::runtime_error("spin9 expects a 16-entry vector");
        auto cert = SpinEmbedding::get().cw_field(u16);
        std::cout << "# field (spin(9) components)\n" << cert.W.str() << "\n";
        std::cout << "# theta matrix\n" << matrix_str(SpinEmbedding::get().theta(cert.W)) << "\n";
        CheckRecord r;
        r.suite = "killing";
        r.check = "construct";
        r.family = family;
        r.lhs = cert.c2.str();
        r.rhs = "exact";
        r.verdict = cert.exact && cert.block_equation_failures == 0;
        r.anchor = "constant-length-square";
        r.detail = "c^2 = " + cert.c2.str() + ", 119 block equations hold";
        rep.add(r);
        print_report(rep, format);
        return rep.all_pass() ? 0 : 1;
    }
    const Field f = family_field(fam.kind);
    auto v = parse_vector(read_file(vector_path), f);
    if (int(v.size()) != n + 1) throw std::runtime_error("vector length must be n+1");
    CheckRecord r;
    r.suite = "killing";
    r.check = "construct";
    r.family = family;
    r.anchor = "constant-length-square";
    if (mode == "exact") {
        RatMatrix U = fam.kind == FamilyKind::SU ? su_delta_field(v) : cw_field(f, v);
        std::cout << "# field matrix\n" << matrix_str(U) << "\n";
        if (fam.kind == FamilyKind::SU) {
            auto res = round_delta_test(U);
            r.check = "construct-delta";
            r.anchor = "base-point-psd-criterion";
            r.lhs = format_double(res.psd_margin);
            r.rhs = ">= 0";
            r.verdict = res.accepted && res.exact_psd;
            r.detail = "traceless; PSD by exact elimination";
        } else {
            auto cert = constant_length_test(U);
            r.lhs = cert ? cert->c2.str() : "none";
            r.rhs = "exact";
            r.verdict = cert.has_value() && cert->exact;
            if (cert) r.detail = cert->unit_group_member ? "unit group member" : "";
        }
    } else {
        std::vector<HyperComplex<double>> vd;
        for (const auto& x : v) vd.push_back(hc_to_double(x));
        DMatrix U = fam.kind == FamilyKind::SU ? su_delta_field(vd) : cw_field(f, vd);
        if (fam.kind == FamilyKind::SU) {
            auto res = round_delta_test(U);
            r.check = "construct-delta";
            r.anchor = "base-point-psd-criterion";
            r.lhs = format_double(res.psd_margin);
            r.rhs = ">= -1e-9";
            r.verdict = res.accepted;
        } else {
            auto cert = constant_length_test(U);
            r.lhs = cert ? format_double(cert->residual) : "none";
            r.rhs = "< 1e-9";
            r.verdict = cert.has_value() && cert->residual < 1e-9;
        }
    }
    rep.add(r);
    print_report(rep, format);
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification toolkit for constant-length fields and diagonal sphere metrics"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "table";
    app.add_option("--format", format, "output format: table|json")->capture_default_str();

    // verify-paper
    VerifyOptions vopt;
    auto* verify = app.add_subcommand("verify-paper", "run the full verification suites");
    verify->add_option("--mode", vopt.mode, "all|exact|numeric")->capture_default_str();
    verify->add_option("--only", vopt.only, "clifford|identities|constructions|firey|table2");
    verify->add_option("--family", vopt.family, "restrict to one family");
    verify->add_option("--seed", vopt.seed, "sampling seed")->capture_default_str();
    verify->add_option("--samples", vopt.cw_samples, "construction batch size")
        ->capture_default_str();
    verify->add_option("--orbit-samples", vopt.orbit_samples, "orbit scan size")
        ->capture_default_str();
    verify->add_option("--grid", vopt.grid_points, "grid points per parameter")
        ->capture_default_str();
    verify->add_option("--n", vopt.n, "family size parameter")->capture_default_str();
    verify->add_flag("!--serial", vopt.parallel, "disable the parallel kernels");

    // construct-killing
    std::string ck_family = "u", ck_vector, ck_mode = "exact";
    int ck_n = 3;
    auto* construct = app.add_subcommand("construct-killing",
                                         "constant-length or maximal-displacement field through "
                                         "a tangent vector");
    construct->add_option("--family", ck_family, "so|u|su|sp|spin9")->capture_default_str();
    construct->add_option("--n", ck_n, "size parameter")->capture_default_str();
    construct->add_option("--vector", ck_vector, "path to the tangent vector (text format)")
        ->required();
    construct->add_option("--mode", ck_mode, "exact|numeric")->capture_default_str();

    // delta-check
    std::string dc_family = "u", dc_matrix, dc_t = "1", dc_s = "1";
    int dc_n = 2, dc_samples = 2000;
    uint64_t dc_seed = 0;
    auto* dcheck = app.add_subcommand("delta-check",
                                      "base-point and sampled orbit tests for a field matrix");
    dcheck->add_option("--family", dc_family)->capture_default_str();
    dcheck->add_option("--n", dc_n)->capture_default_str();
    dcheck->add_option("--t", dc_t, "metric parameter t (rational)")->capture_default_str();
    dcheck->add_option("--s", dc_s, "metric parameter s (rational)")->capture_default_str();
    dcheck->add_option("--matrix", dc_matrix, "path to the field matrix")->required();
    dcheck->add_option("--samples", dc_samples)->capture_default_str();
    dcheck->add_option("--seed", dc_seed)->capture_default_str();

    // firey
    auto* firey = app.add_subcommand("firey", "dual-mean combination calculus");
    std::string fc_x, fc_y, fc_theta = "1/2", fc_family = "sp-split";
    auto* fcombine = firey->add_subcommand("combine", "combine two diagonal parameter sets");
    fcombine->add_option("--family", fc_family)->capture_default_str();
    fcombine->add_option("--x", fc_x, "first parameter list, e.g. 3/4,1/2")->required();
    fcombine->add_option("--y", fc_y, "second parameter list")->required();
    fcombine->add_option("--theta", fc_theta, "interpolation parameter, rational")
        ->capture_default_str();
    std::string fs_t = "3/4", fs_s = "1/2";
    auto* fs1 = firey->add_subcommand("s1", "backward interpolation parameter for (t,s)");
    fs1->add_option("--t", fs_t)->capture_default_str();
    fs1->add_option("--s", fs_s)->capture_default_str();
    std::string fd_x;
    auto* fdual = firey->add_subcommand("dual", "componentwise inverse parameters");
    fdual->add_option("--x", fd_x)->required();
    std::string fm_a1, fm_a2, fm_theta = "1/2";
    auto* fmean = firey->add_subcommand("mean", "dual 2-mean of two ellipsoids");
    fmean->add_option("--a1", fm_a1, "path to the first matrix")->required();
    fmean->add_option("--a2", fm_a2, "path to the second matrix")->required();
    fmean->add_option("--theta", fm_theta)->capture_default_str();

    // spin9
    auto* spin9 = app.add_subcommand("spin9", "spinor embedding tools");
    auto* s9verify = spin9->add_subcommand("verify", "check the printed spin(9) identities");
    std::string s9_vector;
    auto* s9field = spin9->add_subcommand("field", "constant-length field through a tangent");
    s9field->add_option("--vector", s9_vector, "path to a 16-entry tangent vector")->required();
    auto* s9dump = spin9->add_subcommand("dump-theta", "emit the 36 basis matrices");

    // table2
    std::string t2_family = "u";
    int t2_n = 2, t2_grid = 41;
    bool t2_serial = false;
    auto* table2 = app.add_subcommand("table2", "grid report against the classified regions");
    table2->add_option("--family", t2_family, "u|su|sp|sp-split|spin9")->capture_default_str();
    table2->add_option("--n", t2_n)->capture_default_str();
    table2->add_option("--grid", t2_grid)->capture_default_str();
    table2->add_flag("--serial", t2_serial, "disable the parallel grid map");

    // export
    std::string ex_what, ex_out, ex_family = "spin9";
    int ex_n = 2;
    auto* exp = app.add_subcommand("export", "emit tables and bases in the text format");
    exp->add_option("what", ex_what, "octonion-table|theta-basis|decomposition")->required();
    exp->add_option("--out", ex_out, "output path (stdout when omitted)");
    exp->add_option("--family", ex_family)->capture_default_str();
    exp->add_option("--n", ex_n)->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) return run_verify(vopt, format);
        if (*construct) return run_construct(ck_family, ck_n, ck_vector, ck_mode, format);
        if (*dcheck) {
            const Family fam = parse_family(dc_family, dc_n);
            const Decomposition& D = cached_decomposition(fam);
            Metric m{fam, parse_rat_flag(dc_t), parse_rat_flag(dc_s)};
            auto U = parse_matrix(read_file(dc_matrix), family_field(fam.kind));
            RunReport rep;
            auto base = round_delta_test(U);
            CheckRecord r;
            r.suite = "delta";
            r.check = "base-point-test";
            r.family = dc_family;
            r.t = dc_t;
            r.lhs = format_double(base.psd_margin);
            r.rhs = ">= 0";
            r.verdict = base.accepted;
            r.anchor = "base-point-psd-criterion";
            r.detail = base.reason;
            rep.add(r);
            auto scan = sampled_delta_test(to_double(U), m, D, dc_samples, dc_seed);
            CheckRecord r2;
            r2.suite = "delta";
            r2.check = "orbit-scan";
            r2.family = dc_family;
            r2.t = dc_t;
            r2.s = dc_s;
            r2.lhs = format_double(scan.worst_margin);
            r2.rhs = "<= 1e-8";
            r2.verdict = scan.violations == 0;
            r2.anchor = "adjoint-orbit-maximality";
            r2.detail = std::to_string(scan.samples) + " samples";
            rep.add(r2);
            print_report(rep, format);
            return rep.all_pass() ? 0 : 1;
        }
        if (*firey) {
            if (*fcombine) {
                MetricParams x, y;
                for (auto& tok : CLI::detail::split(fc_x, ',')) x.x.push_back(parse_rat(tok));
                for (auto& tok : CLI::detail::split(fc_y, ',')) y.x.push_back(parse_rat(tok));
                auto r = combine_metrics(x, y, parse_rat_flag(fc_theta));
                std::string out;
                for (size_t k = 0; k < r.x.size(); ++k)
                    out += (k ? "," : "") + r.x[k].str();
                std::cout << out << "\n";
                return 0;
            }
            if (*fs1) {
                std::cout << s1_for_target(parse_rat_flag(fs_t), parse_rat_flag(fs_s)).str()
                          << "\n";
                return 0;
            }
            if (*fdual) {
                MetricParams x;
                for (auto& tok : CLI::detail::split(fd_x, ',')) x.x.push_back(parse_rat(tok));
                auto r = dual_params(x);
                std::string out;
                for (size_t k = 0; k < r.x.size(); ++k)
                    out += (k ? "," : "") + r.x[k].str();
                std::cout << out << "\n";
                return 0;
            }
            if (*fmean) {
                auto A1 = to_double(parse_matrix(read_file(fm_a1), Field::R));
                auto A2 = to_double(parse_matrix(read_file(fm_a2), Field::R));
                auto M = dual_2_mean(make_ellipsoid(A1), make_ellipsoid(A2),
                                     parse_rat_flag(fm_theta).to_double());
                for (int i = 0; i < M.A.n; ++i) {
                    for (int j = 0; j < M.A.n; ++j)
                        std::cout << (j ? ", " : "") << format_double(M.A.at(i, j).c[0]);
                    std::cout << (i + 1 < M.A.n ? ";" : "") << "\n";
                }
                return 0;
            }
            std::cerr << "firey needs a subcommand\n";
            return 2;
        }
        if (*spin9) {
            if (*s9verify) {
                RunReport rep;
                rep.append(SpinEmbedding::get().verify_identities());
                print_report(rep, format);
                return rep.all_pass() ? 0 : 1;
            }
            if (*s9field) {
                return run_construct("spin9", 0, s9_vector, "exact", format);
            }
            if (*s9dump) {
                std::cout << export_theta_basis();
                return 0;
            }
            std::cerr << "spin9 needs a subcommand\n";
            return 2;
        }
        if (*table2) {
            RunReport rep;
            std::vector<TableRow> rows;
            if (t2_family == "u")
                rows = {TableRow::U};
            else if (t2_family == "su")
                rows = {TableRow::SU};
            else if (t2_family == "sp")
                rows = {TableRow::SpSp1, TableRow::Sp};
            else if (t2_family == "sp-split")
                rows = {TableRow::SpU1};
            else if (t2_family == "spin9")
                rows = {TableRow::Spin9};
            else
                throw std::runtime_error("unknown family: " + t2_family);
            for (auto row : rows) {
                auto tab = table2_report(row, row == TableRow::Spin9 ? 0 : t2_n, t2_grid,
                                         !t2_serial);
                rep.append(table2_records(tab));
            }
            print_report(rep, format);
            return rep.all_pass() ? 0 : 1;
        }
        if (*exp) {
            std::string payload;
            if (ex_what == "octonion-table")
                payload = export_octonion_table();
            else if (ex_what == "theta-basis")
                payload = export_theta_basis();
            else if (ex_what == "decomposition")
                payload = export_decomposition(parse_family(ex_family, ex_n));
            else
                throw std::runtime_error("unknown export target: " + ex_what);
            if (ex_out.empty())
                std::cout << payload;
            else
                write_file(ex_out, payload);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

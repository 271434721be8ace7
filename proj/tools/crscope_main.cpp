#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "crscope/json_io.hpp"
#include "crscope/sampling.hpp"
#include "crscope/version.hpp"

namespace {

using namespace crscope;

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitInputError = 2;

struct CommonOpts {
    double rank_tol = 1e-9;
    double eig_tol = 1e-8;
    std::uint64_t seed = 20250801;
    Index samples = 4096;
    int threads = 1;
    bool markdown = false;
    std::string out_path;
    // Flags given on the command line take precedence over file options.
    bool tol_set = false, eig_set = false, seed_set = false, samples_set = false;

    Tolerance tolerance() const { return Tolerance(rank_tol, eig_tol); }
    SearchOpts search() const {
        SearchOpts s;
        s.samples = samples;
        s.seed = seed;
        s.tol = tolerance();
        return s;
    }
    Json to_json() const {
        Json j;
        j["rank_tol"] = rank_tol;
        j["eig_tol"] = eig_tol;
        j["seed"] = seed;
        j["samples"] = samples;
        j["threads"] = threads;
        return j;
    }
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--tol", o.rank_tol, "relative singular value cutoff");
    cmd->add_option("--eig-tol", o.eig_tol, "relative eigenvalue zero band");
    cmd->add_option("--seed", o.seed, "seed for all sampling");
    cmd->add_option("--samples", o.samples, "sphere / point sample count");
    cmd->add_option("--threads", o.threads, "worker thread budget")
        ->envname("CR_SCOPE_THREADS");
    cmd->add_flag("--md", o.markdown, "render the report as markdown");
    cmd->add_option("--out", o.out_path, "write the report to a file instead of stdout");
}

Json load_problem(const std::string& path, const std::string& expected_kind) {
    Json j;
    if (path == "-") {
        j = Json::parse(std::cin);
    } else {
        std::ifstream in(path);
        if (!in) throw InputError("cannot open input file '" + path + "'");
        j = Json::parse(in);
    }
    if (!j.is_object() || !j.contains("kind") || !j.contains("payload")) {
        throw InputError("problem file must be an object with kind and payload");
    }
    if (j.at("kind").get<std::string>() != expected_kind) {
        throw InputError("expected kind '" + expected_kind + "', got '" +
                         j.at("kind").get<std::string>() + "'");
    }
    return j;
}

void mark_user_flags(const CLI::App* cmd, CommonOpts& o) {
    o.tol_set = cmd->count("--tol") > 0;
    o.eig_set = cmd->count("--eig-tol") > 0;
    o.seed_set = cmd->count("--seed") > 0;
    o.samples_set = cmd->count("--samples") > 0;
}

void apply_file_options(const Json& problem, CommonOpts& o) {
    if (!problem.contains("options") || !problem.at("options").is_object()) return;
    const Json& opt = problem.at("options");
    if (!o.tol_set && opt.contains("rank_tol")) o.rank_tol = opt.at("rank_tol").get<double>();
    if (!o.eig_set && opt.contains("eig_tol")) o.eig_tol = opt.at("eig_tol").get<double>();
    if (!o.seed_set && opt.contains("seed")) o.seed = opt.at("seed").get<std::uint64_t>();
    if (!o.samples_set && opt.contains("samples")) {
        o.samples = opt.at("samples").get<Index>();
    }
}

void render_markdown(const Json& j, std::ostream& os, int depth) {
    const std::string indent(static_cast<std::size_t>(2 * depth), ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object() || (value.is_array() && !value.empty() &&
                                      (value[0].is_object() || value[0].is_array()))) {
                os << indent << "- " << key << ":\n";
                render_markdown(value, os, depth + 1);
            } else {
                os << indent << "- " << key << ": " << value.dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        int idx = 0;
        for (const auto& value : j) {
            if (value.is_object() || value.is_array()) {
                os << indent << "- [" << idx << "]:\n";
                render_markdown(value, os, depth + 1);
            } else {
                os << indent << "- [" << idx << "]: " << value.dump() << "\n";
            }
            ++idx;
        }
    } else {
        os << indent << "- " << j.dump() << "\n";
    }
}

void emit(const Json& report, const CommonOpts& o) {
    std::ostringstream body;
    if (o.markdown) {
        body << "# crscope report\n\n";
        render_markdown(report, body, 0);
    } else {
        body << report.dump(2) << "\n";
    }
    if (o.out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(o.out_path);
        if (!out) throw InputError("cannot open output file '" + o.out_path + "'");
        out << body.str();
    }
}

Json report_header(const std::string& command, const CommonOpts& o) {
    Json j;
    j["version"] = kVersion;
    j["command"] = command;
    j["options"] = o.to_json();
    return j;
}

int run_crtype(const std::string& input, CommonOpts o) {
    const Json problem = load_problem(input, "subspace");
    apply_file_options(problem, o);
    set_thread_count(o.threads);
    const RealSubspace s = subspace_from_json(problem.at("payload"));
    const Tolerance tol = o.tolerance();
    const CRType type = cr_type_of_subspace(s, tol);

    Json rep = report_header("crtype", o);
    rep["ambient_n"] = s.ambient_n;
    rep["d"] = s.dim();
    rep["cr_dim"] = type.m;
    rep["cr_codim"] = type.h;
    rep["stratum_dim"] = stratum_dim(s.ambient_n, type.m, type.h);
    const Index k = 2 * s.ambient_n - s.dim();
    const Index hh = s.ambient_n - type.m;
    if (k >= 0 && 2 * hh >= k && hh <= k && k <= s.ambient_n) {
        rep["stratum_codim"] = stratum_codim(s.ambient_n, k, hh);
    }
    emit(rep, o);
    return kExitOk;
}

int run_quadric_analyze(const std::string& input, CommonOpts o, Index grid, double box_half,
                        bool force_scan, bool no_scan) {
    const Json problem = load_problem(input, "quadric");
    apply_file_options(problem, o);
    set_thread_count(o.threads);
    const Quadric q = quadric_from_json(problem.at("payload"));
    const Tolerance tol = o.tolerance();

    Json rep = report_header("quadric analyze", o);
    rep["m"] = q.m;
    rep["h"] = q.h;
    rep["p"] = q.p;

    if (q.p >= 1) {
        const TransversalityReport tr = is_transversal_origin(q, tol);
        Json per = Json::array();
        for (const auto& e : tr.per_equation) {
            per.push_back(Json{{"rank", e.rank}, {"required", 2 * q.m},
                               {"transversal", e.transversal}});
        }
        rep["transversality"] = Json{{"per_equation", per},
                                     {"transversal", tr.transversal},
                                     {"combined_rank", tr.combined_rank},
                                     {"combined_is_extension", tr.combined_is_extension}};
        Json kct = Json::array();
        for (Index i = 0; i < q.p; ++i) {
            const KernelCRType t = kernel_cr_type(q.B[static_cast<std::size_t>(i)],
                                                  q.C[static_cast<std::size_t>(i)], tol);
            kct.push_back(Json{{"r", t.r}, {"s", t.s}});
        }
        rep["kernel_cr_type"] = std::move(kct);
    }

    const HermitianPencil pencil = augmented_pencil(q);
    const auto two_sided = min_two_sided_signature(pencil, o.search());
    const auto weak = weak_pseudoconcavity_order(pencil, o.search());
    rep["augmented_pencil"] = Json{{"dim", pencil.dim},
                                   {"size", pencil.size()},
                                   {"q_min_two_sided", two_sided.q_min},
                                   {"two_sided_certificate", certificate_to_json(two_sided.cert)},
                                   {"weak_order", weak.q},
                                   {"weak_certificate", certificate_to_json(weak.cert)}};

    const Index scan_dim = 2 * q.m + q.h;
    const bool scan = !no_scan && q.p >= 1 && (force_scan || scan_dim <= 3);
    if (scan) {
        ParamBox box;
        box.lo = RealVector::Constant(scan_dim, -box_half);
        box.hi = RealVector::Constant(scan_dim, box_half);
        const SingularLocusScan locus = singular_locus_scan(q, box, grid, tol);
        Json clusters = Json::array();
        for (const auto& c : locus.clusters) {
            clusters.push_back(Json{{"points", static_cast<Index>(c.points.size())},
                                    {"dim", c.dim}});
        }
        rep["singular_scan"] = Json{{"grid", grid},
                                    {"box_half_width", box_half},
                                    {"total_points", locus.total_points},
                                    {"clusters", clusters}};
    } else if (q.p >= 1) {
        rep["singular_scan"] = Json{{"skipped", true},
                                    {"reason", scan_dim > 3 ? "parameter space dimension > 3; "
                                                              "pass --scan to force"
                                                            : "disabled"}};
    }
    emit(rep, o);
    return kExitOk;
}

int run_pencil_certify(const std::string& input, CommonOpts o) {
    const Json problem = load_problem(input, "pencil");
    apply_file_options(problem, o);
    set_thread_count(o.threads);
    const HermitianPencil p = pencil_from_json(problem.at("payload"));

    Json rep = report_header("pencil certify", o);
    rep["dim"] = p.dim;
    rep["size"] = p.size();
    const auto two_sided = min_two_sided_signature(p, o.search());
    const auto weak = weak_pseudoconcavity_order(p, o.search());
    rep["q_min_two_sided"] = two_sided.q_min;
    rep["two_sided_certificate"] = certificate_to_json(two_sided.cert);
    rep["weak_order"] = weak.q;
    rep["weak_certificate"] = certificate_to_json(weak.cert);
    const auto witness = pseudoconvex_witness(p, o.search());
    if (witness) {
        rep["pseudoconvex_witness"] = Json{{"found", true},
                                           {"c", real_vector_to_json(witness->c)},
                                           {"min_eigenvalue", witness->min_eigenvalue}};
    } else {
        rep["pseudoconvex_witness"] = Json{{"found", false}};
    }
    bool violated = false;
    if (p.dim % 2 == 0 && p.dim > 0 && two_sided.q_min >= p.dim / 2) {
        const SpanBoundReport span = span_dim_bound_check(p, o.tolerance());
        rep["span_bound"] = Json{{"q", span.q},
                                 {"span_dim", span.span_dim},
                                 {"bound", span.bound},
                                 {"within_bound", span.within_bound}};
        if (!span.within_bound) {
            violated = true;
            rep["span_bound"]["inconsistency"] =
                "span dimension exceeds the Hurwitz-Radon bound; the sampled q_min must "
                "overstate the true sphere minimum";
        }
    }
    emit(rep, o);
    return violated ? kExitViolated : kExitOk;
}

int run_patch_classify(const std::string& input, CommonOpts o, Index count, bool orders) {
    const Json problem = load_problem(input, "patch");
    apply_file_options(problem, o);
    set_thread_count(o.threads);
    const PatchDefinition patch = patch_from_json(problem.at("payload"));
    const Tolerance tol = o.tolerance();

    std::vector<ComplexVector> points;
    if (problem.at("payload").contains("points")) {
        for (const auto& pj : problem.at("payload").at("points")) {
            points.push_back(complex_vector_from_json(pj));
        }
    } else {
        points = sample_points(patch, count, o.seed, tol);
    }

    Json rep = report_header("patch classify", o);
    rep["n"] = patch.vars();
    rep["k"] = patch.codim();
    rep["generic_dbar_rank"] = patch.generic_dbar_rank(tol);
    Index regular = 0, singular = 0;
    Json out_points = Json::array();
    for (const auto& z : points) {
        PointReport r = classify_point(patch, z, tol);
        (r.regular ? regular : singular) += 1;
        if (orders && r.regular) {
            const HermitianPencil pencil = levi_pencil_at(patch, z, tol);
            r.weak_order = weak_pseudoconcavity_order(pencil, o.search()).q;
            if (*r.weak_order == 0) {
                if (const auto w = pseudoconvex_witness(pencil, o.search())) {
                    r.pseudoconvex_witness = w->c;
                }
            }
        }
        Json pj;
        pj["point"] = complex_vector_to_json(r.point);
        pj["on_manifold"] = r.on_manifold;
        pj["dbar_rank"] = r.dbar_rank;
        pj["cr_type"] = Json{{"m", r.cr_type.m}, {"h", r.cr_type.h}};
        pj["regular"] = r.regular;
        if (r.weak_order) pj["weak_order"] = *r.weak_order;
        if (r.pseudoconvex_witness) {
            pj["pseudoconvex_witness"] = real_vector_to_json(*r.pseudoconvex_witness);
        }
        out_points.push_back(std::move(pj));
    }
    rep["points_total"] = static_cast<Index>(points.size());
    rep["regular"] = regular;
    rep["singular"] = singular;
    rep["points"] = std::move(out_points);
    emit(rep, o);
    return kExitOk;
}

int run_maxmod_verify(const std::string& input, CommonOpts o) {
    const Json problem = load_problem(input, "maxmod");
    apply_file_options(problem, o);
    set_thread_count(o.threads);
    const Json& payload = problem.at("payload");
    if (!payload.contains("patch")) throw InputError("maxmod payload needs a patch");
    const PatchDefinition patch = patch_from_json(payload.at("patch"));
    const Tolerance tol = o.tolerance();

    std::vector<ComplexVector> points;
    if (payload.contains("points") && payload.at("points").is_array()) {
        for (const auto& pj : payload.at("points")) points.push_back(complex_vector_from_json(pj));
    } else {
        Index count = 2000;
        if (payload.contains("points") && payload.at("points").is_object()) {
            count = payload.at("points").value("count", Index{2000});
        }
        points = sample_points(patch, count, o.seed, tol);
    }

    if (!payload.contains("predicate")) throw InputError("maxmod payload needs a predicate");
    const Json& pred = payload.at("predicate");
    if (pred.value("type", std::string{}) != "ball") {
        throw InputError("maxmod predicate: only type 'ball' is supported");
    }
    const ComplexVector center = pred.contains("center")
                                     ? complex_vector_from_json(pred.at("center"))
                                     : ComplexVector::Zero(patch.vars()).eval();
    const double radius = pred.value("radius", 1.0);
    const double band = pred.value("band", 0.1);
    auto predicate = [center, radius](const ComplexVector& z) {
        return (z - center).squaredNorm() - radius * radius;
    };

    if (!payload.contains("f")) throw InputError("maxmod payload needs a holomorphic f");
    const HoloPolynomial f = holo_polynomial_from_json(payload.at("f"), patch.vars());
    const double tol_rel = payload.value("tol", 1e-6);

    const SampledDomain domain = partition_domain(patch, points, predicate, band,
                                                  "ball predicate |z-center|^2 - r^2");
    const VerificationReport vr = verify_max_modulus(domain, f, tol_rel);

    Json rep = report_header("maxmod verify", o);
    rep["max_modulus"] = verification_report_to_json(vr);
    bool violated = !vr.satisfied;

    if (payload.contains("psi_order")) {
        const Index order = payload.at("psi_order").get<Index>();
        SearchOpts search = o.search();
        search.samples = std::min<Index>(search.samples, 512);
        const PsiRegion region = psi_region(patch, points, order, search);
        rep["psi_region"] = Json{
            {"order", order},
            {"psi_points", static_cast<Index>(region.psi_points.size())},
            {"complement_points", static_cast<Index>(region.complement_points.size())},
            {"unclassified", static_cast<Index>(region.unclassified.size())}};
        const VerificationReport pr = verify_psi_bound(patch, points, f, order, tol_rel, search);
        rep["psi_bound"] = verification_report_to_json(pr);
    }
    emit(rep, o);
    return violated ? kExitViolated : kExitOk;
}

void write_fixture(const std::filesystem::path& dir, const std::string& name, const Json& j) {
    std::ofstream out(dir / name);
    if (!out) throw InputError("cannot write fixture " + name);
    out << j.dump(2) << "\n";
}

int run_examples(const std::string& name, const std::string& write_dir, CommonOpts o) {
    if (!write_dir.empty()) {
        const std::filesystem::path dir(write_dir);
        std::filesystem::create_directories(dir);
        write_fixture(dir, "clifford8.json", catalog_entry_to_json(example_catalog("clifford8")));
        write_fixture(dir, "r1r2_7.json", catalog_entry_to_json(example_catalog("r1r2_7")));
        write_fixture(dir, "adams_m8.json", catalog_entry_to_json(example_catalog("adams_m8")));
        write_fixture(dir, "mprime.json", catalog_entry_to_json(example_catalog("mprime")));
        write_fixture(dir, "mlambda_1.json", catalog_entry_to_json(example_catalog("mlambda(1)")));
        write_fixture(dir, "mlambda_i.json", catalog_entry_to_json(example_catalog("mlambda(i)")));
        write_fixture(dir, "mlambda_1pi.json",
                      catalog_entry_to_json(example_catalog("mlambda(1+i)")));
        write_fixture(dir, "mk_2_2.json", catalog_entry_to_json(example_catalog("mk(2,2)")));
        write_fixture(dir, "ak_1.json", problem_file("patch", patch_to_json(make_ak_patch(1))));
        write_fixture(dir, "ak_2.json", problem_file("patch", patch_to_json(make_ak_patch(2))));
        write_fixture(dir, "ex19_n2.json",
                      problem_file("patch", patch_to_json(make_ex19_patch(2))));
        write_fixture(dir, "mk_patch_n2_k2.json",
                      problem_file("patch", patch_to_json(make_mk_patch(2, 2.0))));
        write_fixture(dir, "sphere_c2.json",
                      problem_file("patch", patch_to_json(make_sphere_patch(2))));

        // Max modulus counterexample on the totally real line: e^{-z^2}
        // replaced by its order-12 Taylor polynomial in z^2.
        Json mm;
        mm["patch"] = patch_to_json(make_real_line_patch());
        Json pts = Json::array();
        const Index grid = 4001;
        for (Index i = 0; i < grid; ++i) {
            const double x = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(grid - 1);
            ComplexVector z(1);
            z(0) = Complex(x, 0.0);
            pts.push_back(complex_vector_to_json(z));
        }
        mm["points"] = std::move(pts);
        mm["predicate"] = Json{{"type", "ball"},
                               {"center", complex_vector_to_json(ComplexVector::Zero(1))},
                               {"radius", 1.0},
                               {"band", 1e-9}};
        mm["f"] = holo_polynomial_to_json(HoloPolynomial::exp_minus_z2_taylor(12));
        mm["tol"] = 1e-6;
        mm["psi_order"] = 1;
        write_fixture(dir, "totally_real_line.json", problem_file("maxmod", std::move(mm)));
        std::cout << "wrote fixtures to " << write_dir << "\n";
        return kExitOk;
    }
    if (name.empty()) throw InputError("examples: give a name or --write-dir");
    const Json j = catalog_entry_to_json(example_catalog(name));
    if (o.out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(o.out_path);
        if (!out) throw InputError("cannot open output file '" + o.out_path + "'");
        out << j.dump(2) << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"CR-type classification, Hermitian pencil certificates and maximum modulus "
                 "checks for quadric models"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string input;

    auto* crtype = app.add_subcommand("crtype", "CR type of a real linear subspace");
    crtype->add_option("input", input, "problem file (kind: subspace), or - for stdin")
        ->required();
    add_common(crtype, o);

    auto* quadric = app.add_subcommand("quadric", "quadric model analysis");
    auto* analyze = quadric->add_subcommand("analyze", "transversality and singular locus");
    Index grid = 20;
    double box_half = 1.0;
    bool force_scan = false, no_scan = false;
    analyze->add_option("input", input, "problem file (kind: quadric)")->required();
    analyze->add_option("--grid", grid, "scan grid points per axis");
    analyze->add_option("--box", box_half, "scan box half width");
    analyze->add_flag("--scan", force_scan, "force the singular locus scan");
    analyze->add_flag("--no-scan", no_scan, "skip the singular locus scan");
    add_common(analyze, o);

    auto* pencil = app.add_subcommand("pencil", "Hermitian pencil certificates");
    auto* certify = pencil->add_subcommand("certify", "two-sided signature and weak order");
    certify->add_option("input", input, "problem file (kind: pencil)")->required();
    add_common(certify, o);

    auto* patch = app.add_subcommand("patch", "polynomial patch classification");
    auto* classify = patch->add_subcommand("classify", "CR classification of sampled points");
    Index count = 64;
    bool orders = false;
    classify->add_option("input", input, "problem file (kind: patch)")->required();
    classify->add_option("--count", count, "points to sample when none are given");
    classify->add_flag("--orders", orders, "compute pseudoconcavity orders at regular points");
    add_common(classify, o);

    auto* maxmod = app.add_subcommand("maxmod", "maximum modulus verification");
    auto* verify = maxmod->add_subcommand("verify", "sampled interior vs boundary maxima");
    verify->add_option("input", input, "problem file (kind: maxmod)")->required();
    add_common(verify, o);

    std::string example_name, write_dir;
    auto* examples = app.add_subcommand("examples", "named fixtures from the catalog");
    examples->add_option("name", example_name, "mk(n,k) | mlambda(c) | mprime | clifford8 | "
                                               "r1r2_7 | adams_m8");
    examples->add_option("--write-dir", write_dir, "write the full fixture set to a directory");
    examples->add_option("--out", o.out_path, "write the fixture to a file");

    CLI11_PARSE(app, argc, argv);

    try {
        set_thread_count(o.threads);
        if (crtype->parsed()) {
            mark_user_flags(crtype, o);
            return run_crtype(input, o);
        }
        if (quadric->parsed() && analyze->parsed()) {
            mark_user_flags(analyze, o);
            return run_quadric_analyze(input, o, grid, box_half, force_scan, no_scan);
        }
        if (pencil->parsed() && certify->parsed()) {
            mark_user_flags(certify, o);
            return run_pencil_certify(input, o);
        }
        if (patch->parsed() && classify->parsed()) {
            mark_user_flags(classify, o);
            return run_patch_classify(input, o, count, orders);
        }
        if (maxmod->parsed() && verify->parsed()) {
            mark_user_flags(verify, o);
            return run_maxmod_verify(input, o);
        }
        if (examples->parsed()) return run_examples(example_name, write_dir, o);
        std::cerr << "no subcommand given\n";
        return kExitInputError;
    } catch (const nlohmann::json::parse_error& e) {
        std::cerr << "input error: malformed JSON: " << e.what() << "\n";
        return kExitInputError;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const DegeneracyError& e) {
        std::cerr << "numerical degeneracy: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

#include "toriq/errors.hpp"
#include "toriq/report.hpp"
#include "toriq/spec_input.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

// exit codes: 0 success, 1 domain error, 2 usage/parse error,
// 3 quantize ran but the two dimension counts disagreed
constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTheoremFailed = 3;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw toriq::Error("cannot open input file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct CommonArgs {
    std::string input = "-";
    std::string format = "text";
    long long max_box = toriq::kDefaultMaxBox;
    bool quiet = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("input", args.input, "polytope spec file, or - for stdin")
        ->default_str("-");
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_str("text");
    cmd->add_option("--max-box", args.max_box, "lattice enumeration guard")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--quiet", args.quiet, "print only the headline value");
}

toriq::HalfspacePolytope load(const CommonArgs& args) {
    return toriq::realize(toriq::parse_spec(read_input(args.input)));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"toriq: quantization dimensions of toric manifolds from moment polytopes"};
    app.require_subcommand(1);

    CommonArgs args;
    long long sweep_m = 3;

    CLI::App* validate = app.add_subcommand("validate", "check the Delzant condition");
    CLI::App* verts = app.add_subcommand("vertices", "enumerate the vertices");
    CLI::App* lattice = app.add_subcommand("lattice", "enumerate the integer points");
    CLI::App* family = app.add_subcommand("family", "facet intersection family and codimension");
    CLI::App* construct = app.add_subcommand("construct", "projection, kernel, L and nu");
    CLI::App* quantize = app.add_subcommand("quantize", "full quantization report");
    CLI::App* sweep = app.add_subcommand("sweep", "dimension per dilation factor");
    for (CLI::App* cmd : {validate, verts, lattice, family, construct, quantize, sweep})
        add_common(cmd, args);
    sweep->add_option("--m", sweep_m, "largest dilation factor")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    const bool json = args.format == "json";
    const toriq::QuantizeOptions opts{toriq::Int(args.max_box)};

    try {
        if (validate->parsed()) {
            toriq::HalfspacePolytope P = load(args);
            toriq::DelzantCertificate cert = toriq::validate_delzant(P);
            if (args.quiet) std::cout << "delzant\n";
            else std::cout << (json ? render_validate_json(P, cert) : render_validate_text(P, cert));
        } else if (verts->parsed()) {
            toriq::HalfspacePolytope P = load(args);
            std::vector<toriq::Vertex> vs = toriq::vertices(P);
            if (args.quiet) std::cout << vs.size() << "\n";
            else std::cout << (json ? render_vertices_json(P, vs) : render_vertices_text(P, vs));
        } else if (lattice->parsed()) {
            toriq::HalfspacePolytope P = load(args);
            std::vector<toriq::IntVector> pts = toriq::lattice_points(P, opts.max_box);
            if (args.quiet) std::cout << pts.size() << "\n";
            else std::cout << (json ? toriq::render_lattice_json(pts) : toriq::render_lattice_text(pts));
        } else if (family->parsed()) {
            toriq::HalfspacePolytope P = load(args);
            toriq::DelzantCertificate cert = toriq::validate_delzant(P);
            toriq::FacetFamily F = toriq::facet_family(P, cert);
            std::size_t codim = toriq::complement_codimension(F);
            auto witnesses = toriq::minimal_missing_sets(F);
            if (args.quiet) std::cout << F.members().size() << "\n";
            else std::cout << (json ? render_family_json(F, codim, witnesses)
                                    : render_family_text(F, codim, witnesses));
        } else if (construct->parsed()) {
            toriq::HalfspacePolytope P = load(args);
            toriq::ConstructionData C = toriq::build_construction(P);
            if (args.quiet) std::cout << toriq::to_string(C.nu) << "\n";
            else std::cout << (json ? render_construct_json(P, C) : render_construct_text(P, C));
        } else if (quantize->parsed()) {
            toriq::HalfspacePolytope P = load(args);
            toriq::QuantizationReport r = toriq::quantize(P, opts);
            if (args.quiet) std::cout << r.dimension() << "\n";
            else std::cout << (json ? render_quantize_json(r) : render_quantize_text(r));
            if (!r.theorem_verified) {
                std::cerr << "toriq: dimension check failed: " << r.bijection.failure << "\n";
                return kExitTheoremFailed;
            }
        } else if (sweep->parsed()) {
            toriq::HalfspacePolytope P = load(args);
            auto rows = toriq::dilate_sweep(P, sweep_m, opts);
            if (args.quiet) {
                for (const auto& [m, d] : rows) std::cout << m << " " << d << "\n";
            } else {
                std::cout << (json ? toriq::render_sweep_json(rows) : toriq::render_sweep_text(rows));
            }
        }
    } catch (const toriq::ParseError& e) {
        std::cerr << "toriq: " << e.what() << "\n";
        return kExitUsage;
    } catch (const toriq::SchemaError& e) {
        std::cerr << "toriq: " << e.what() << "\n";
        return kExitUsage;
    } catch (const toriq::Error& e) {
        std::cerr << "toriq: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}

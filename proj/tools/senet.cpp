// Command-line surface for building, querying and comparing the complexes
// behind higher-order system models.

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "senet/senet.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string fvector_line(const std::vector<std::size_t>& f) {
    std::string out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(f[i]);
    }
    return out;
}

std::string member_braces(const senet::VertexUniverse& u, const senet::Simplex& s) {
    return "{" + senet::render_member(u, s) + "}";
}

fs::path ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec && !fs::is_directory(dir))
        senet::fail(senet::ErrorKind::parse,
                    "cannot create output directory '" + dir.string() + "'");
    return dir;
}

/// Zero-padded default participant ids (v0..v9, v00..v14, ...) so that
/// lexicographic id order matches numeric order for any n.
std::vector<std::string> default_participants(std::size_t n) {
    const std::size_t width = std::to_string(n == 0 ? 0 : n - 1).size();
    std::vector<std::string> ids;
    ids.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::string digits = std::to_string(i);
        ids.push_back("v" + std::string(width - digits.size(), '0') + digits);
    }
    return ids;
}

void print_subset_dependency(const senet::SesStructure& ses,
                             const senet::SubsetDependencyReport& report) {
    if (report.holds) {
        std::cout << "subset dependency: holds\n";
        return;
    }
    std::cout << "subset dependency: fails; missing subsets:\n";
    for (const auto& s : report.missing)
        std::cout << "  " << member_braces(ses.universe(), s) << '\n';
    if (report.truncated) std::cout << "  (witness list truncated)\n";
    std::cout << "note: the built complex closes every interaction, so the raw\n"
                 "      family's lower-order gaps are filled in the output\n";
}

void cmd_build(const fs::path& document_path, const senet::RunConfig& config,
               const fs::path& out_dir) {
    const auto doc = senet::read_ses_document(document_path);
    const auto ses = doc.build(config.ses_options());

    std::cout << "system: " << ses.social_count() << " social, "
              << ses.ecological_count() << " ecological, "
              << ses.interactions().size() << " interactions, "
              << ses.constants().size() << " constants\n";

    const auto partition = senet::partition_interactions(ses);
    std::cout << "partition: " << partition.social_pure.size() << " social-pure, "
              << partition.ecological_pure.size() << " ecological-pure, "
              << partition.cross.size() << " cross\n";

    print_subset_dependency(ses, senet::check_subset_dependency(ses, config.witness_limit));

    const auto complex = senet::complex_of_ses(ses, config.simplex_cap);
    std::cout << "validation: "
              << complex.validate(config.witness_limit).to_text(complex.universe());
    std::cout << "complex: " << complex.member_count() << " members, dimension "
              << complex.dimension() << ", f-vector ("
              << fvector_line(complex.f_vector()) << ")\n";

    const fs::path out_path =
        ensure_dir(out_dir) / (document_path.stem().string() + ".scx");
    senet::write_complex_file(out_path, complex);
    std::cout << "wrote " << out_path.string() << '\n';
}

void cmd_query(const fs::path& complex_path, const std::string& query,
               const std::string& argument, const senet::RunConfig& config) {
    const auto complex = senet::read_complex_file(complex_path, config.simplex_cap);
    const auto& universe = complex.universe();

    if (query == "skeleton") {
        if (argument.empty())
            throw CLI::ValidationError("query", "skeleton requires a dimension argument");
        std::size_t p = 0;
        try {
            std::size_t consumed = 0;
            const long long value = std::stoll(argument, &consumed);
            if (consumed != argument.size()) throw std::invalid_argument(argument);
            if (value < 0)
                senet::fail(senet::ErrorKind::range, "skeleton dimension must be >= 0");
            p = static_cast<std::size_t>(value);
        } catch (const senet::Error&) {
            throw;
        } catch (const std::exception&) {
            throw CLI::ValidationError("query", "skeleton dimension must be an integer");
        }
        std::cout << senet::serialize_complex(complex.p_skeleton(p));
        return;
    }
    if (!argument.empty())
        throw CLI::ValidationError("query", "'" + query + "' takes no argument");

    if (query == "dimension") {
        std::cout << complex.dimension() << '\n';
    } else if (query == "fvector") {
        std::cout << fvector_line(complex.f_vector()) << '\n';
    } else if (query == "facets") {
        std::cout << "# facets (members of dimension dim-1, dim=" << complex.dimension()
                  << ")\n";
        const auto result = complex.facets();
        if (result.degenerate)
            std::cout << "# warning: complex dimension < 1, facet set is empty\n";
        for (const auto& s : result.facets)
            std::cout << senet::render_member(universe, s) << '\n';
    } else if (query == "maximal") {
        std::cout << "# maximal simplices (contained in no other member)\n";
        for (const auto& s : complex.maximal_simplices())
            std::cout << senet::render_member(universe, s) << '\n';
    } else if (query == "boundary") {
        auto members = complex.boundary();
        std::set<senet::Simplex> family(members.begin(), members.end());
        std::cout << senet::serialize_complex(
            senet::SimplicialComplex::from_family(universe, family, complex.simplex_cap()));
    } else {
        throw CLI::ValidationError("query", "unknown query '" + query + "'");
    }
}

struct EvolveArtifacts {
    senet::GrowthResult result;
    std::vector<fs::path> complex_files;
};

EvolveArtifacts write_evolution(const senet::VertexUniverse& participants,
                                unsigned last_step, const senet::RunConfig& config,
                                const fs::path& out_dir) {
    auto result = senet::run_growth(participants, last_step, config.simplex_cap);
    ensure_dir(out_dir);

    senet::write_text_file(out_dir / "ledger.tsv", senet::ledger_to_tsv(result.ledger));
    senet::write_text_file(out_dir / "ledger.json",
                           senet::ledger_to_json(result.ledger).dump(2) + "\n");

    std::vector<fs::path> files;
    json manifest_steps = json::array();
    for (const auto& step : result.steps) {
        const fs::path file = out_dir / ("step-" + std::to_string(step.step) + ".scx");
        senet::write_complex_file(file, step.cumulative);
        files.push_back(file);
        manifest_steps.push_back({
            {"step", step.step},
            {"group_size", step.group_size},
            {"emitted", step.emitted.size()},
            {"complex_file", file.filename().string()},
            {"members", step.cumulative.member_count()},
            {"dimension", step.cumulative.dimension()},
        });
    }

    json manifest{
        {"universe", result.network.universe().ids()},
        {"time_index", result.network.time_index()},
        {"static", result.network.is_static()},
        {"steps", manifest_steps},
    };
    senet::write_text_file(out_dir / "manifest.json", manifest.dump(2) + "\n");

    return EvolveArtifacts{std::move(result), std::move(files)};
}

void cmd_evolve(std::size_t n, unsigned last_step, const senet::RunConfig& config,
                const fs::path& out_dir) {
    const auto participants =
        senet::VertexUniverse::from_ids(default_participants(n));
    const auto artifacts = write_evolution(participants, last_step, config, out_dir);
    const auto& network = artifacts.result.network;

    std::cout << senet::ledger_to_tsv(artifacts.result.ledger);
    std::cout << "network: " << (network.is_static() ? "static" : "dynamic") << " ("
              << network.time_index().size() << " steps)\n";
    const auto& final_complex = network.complexes().back();
    std::cout << "final complex: " << final_complex.member_count()
              << " members, dimension " << final_complex.dimension() << ", f-vector ("
              << fvector_line(final_complex.f_vector()) << ")\n";
    std::cout << "wrote " << out_dir.string() << "/{ledger.tsv, ledger.json, manifest.json, "
              << "step-1.scx .. step-" << last_step << ".scx}\n";
}

void print_compare(const senet::SimplicialComplex& a, const senet::SimplicialComplex& b,
                   const std::string& name_a, const std::string& name_b) {
    const auto ga = senet::to_underlying_graph(a);
    const auto gb = senet::to_underlying_graph(b);
    const bool identical = senet::graphs_identical(ga, gb);

    std::cout << "underlying graphs identical: " << (identical ? "yes" : "no") << '\n';
    std::cout << "  " << name_a << ": " << ga.vertices().size() << " vertices, "
              << ga.edges().size() << " edges\n";
    std::cout << "  " << name_b << ": " << gb.vertices().size() << " vertices, "
              << gb.edges().size() << " edges\n";

    const auto collision = senet::skeleton_collision(a, b);
    std::cout << "skeleton collision: " << (collision.collision ? "yes" : "no") << '\n';
    if (collision.collision) {
        const auto& owner = collision.witness_owner == 1 ? name_a : name_b;
        std::cout << "  witness: " << member_braces(a.universe(), *collision.witness)
                  << " (dimension " << collision.witness->dimension() << ", only in "
                  << owner << ")\n";
    }

    std::cout << "loss report " << name_a << ":\n"
              << senet::loss_report_table(senet::loss_report(a));
    std::cout << "loss report " << name_b << ":\n"
              << senet::loss_report_table(senet::loss_report(b));
}

void cmd_compare(const fs::path& path_a, const fs::path& path_b,
                 const senet::RunConfig& config) {
    const auto a = senet::read_complex_file(path_a, config.simplex_cap);
    const auto b = senet::read_complex_file(path_b, config.simplex_cap);
    print_compare(a, b, path_a.filename().string(), path_b.filename().string());
}

void cmd_demo_saigata(const senet::RunConfig& config, const fs::path& out_dir) {
    const std::vector<std::string> names{"vi", "vj", "vk", "vl", "vm"};
    const auto participants = senet::VertexUniverse::from_ids(names);

    std::cout << "== group-growth run over five participants ==\n";
    const auto artifacts = write_evolution(participants, 4, config, out_dir);
    std::cout << senet::ledger_to_tsv(artifacts.result.ledger);

    // The same system as an ingestion document: the participants plus every
    // group that interacted during the run.
    senet::SesDocument doc;
    doc.social_ids = names;
    for (const auto& step : artifacts.result.steps)
        for (const auto& group : step.emitted) {
            std::vector<std::string> ids;
            for (auto v : group.vertices()) ids.push_back(participants.id_of(v));
            doc.interactions.push_back(std::move(ids));
        }
    doc.constants = {"mandatory-participation", "rules-bind-all-members"};
    const fs::path doc_path = out_dir / "saigata.ses";
    senet::write_text_file(doc_path, senet::render_ses_document(doc));

    auto options = config.ses_options();
    options.strict_kinds = false; // participants only: a single-kind toy system
    const auto ses = doc.build(options);
    std::cout << "\n== system document " << doc_path.string() << " ==\n";
    print_subset_dependency(ses, senet::check_subset_dependency(ses, config.witness_limit));

    const auto built = senet::complex_of_ses(ses, config.simplex_cap);
    senet::write_complex_file(out_dir / "saigata.scx", built);
    const auto& final_complex = artifacts.result.network.complexes().back();
    std::cout << "document complex matches step-4 complex: "
              << (built == final_complex ? "yes" : "no") << '\n';

    const auto& step1 = artifacts.result.network.complex_at(1);
    senet::write_text_file(out_dir / "step-1.net",
                           senet::graph_to_pajek(senet::to_underlying_graph(step1)));
    senet::write_text_file(out_dir / "step-4.net",
                           senet::graph_to_pajek(senet::to_underlying_graph(final_complex)));
    senet::write_text_file(
        out_dir / "loss-step-1.json",
        senet::loss_report_json(senet::loss_report(step1)).dump(2) + "\n");
    senet::write_text_file(
        out_dir / "loss-step-4.json",
        senet::loss_report_json(senet::loss_report(final_complex)).dump(2) + "\n");

    std::cout << "\n== pairwise projection: step 1 vs step 4 ==\n";
    print_compare(step1, final_complex, "step-1", "step-4");

    std::cout << "\nwrote " << out_dir.string()
              << "/{ledger.tsv, ledger.json, manifest.json, step-1..4.scx, "
                 "saigata.ses, saigata.scx, step-1.net, step-4.net, "
                 "loss-step-1.json, loss-step-4.json}\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"senet: higher-order network models of social-ecological systems\n"
                 "as abstract simplicial complexes"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "read options from an INI file (flags win)");
    app.footer("Exit codes:\n"
               "  0 success\n"
               "  1 internal error\n"
               "  2 usage error\n"
               "  3 parse error (malformed documents or complex files)\n"
               "  4 validation error (closure violations, unknown ids, universe mismatch)\n"
               "  5 range error (steps, dimensions, configuration values)\n"
               "  6 disjointness violation (an id on both the social and ecological side)\n"
               "  7 empty universe (a required vertex-kind side has no vertices)\n"
               "  8 size guard (simplex cardinality above --simplex-cap)");

    senet::RunConfig config;
    std::string out_dir;
    app.add_option("--simplex-cap", config.simplex_cap,
                   "maximum simplex cardinality (2..62)")
        ->capture_default_str();
    app.add_flag("--strict-kinds,!--allow-single-kind", config.strict_kinds,
                 "require both social and ecological vertices (default on)");
    app.add_option("--witness-limit", config.witness_limit,
                   "maximum witnesses per report section")
        ->capture_default_str();
    app.add_option("--out", out_dir, "output directory (default '.')");

    std::string document_path;
    auto* build = app.add_subcommand(
        "build", "build the complex described by a system document");
    build->add_option("document", document_path, "system ingestion document")
        ->required();

    std::string query_file, query_kind, query_arg;
    auto* query = app.add_subcommand("query", "query a serialized complex");
    query->add_option("file", query_file, "complex file")->required();
    query
        ->add_option("kind", query_kind,
                     "one of: dimension, fvector, facets, maximal, boundary, skeleton")
        ->required()
        ->check(CLI::IsMember(
            {"dimension", "fvector", "facets", "maximal", "boundary", "skeleton"}));
    query->add_option("arg", query_arg, "query argument (skeleton dimension)");

    std::size_t evolve_n = 5;
    unsigned evolve_last = 0;
    auto* evolve = app.add_subcommand(
        "evolve", "run the iterative group-growth construction");
    evolve->add_option("-n,--participants", evolve_n, "number of participants")
        ->required();
    evolve->add_option("-s,--last-step", evolve_last, "final growth step")->required();

    std::string compare_a, compare_b;
    auto* compare = app.add_subcommand(
        "compare", "project two complexes to graphs and report the information loss");
    compare->add_option("a", compare_a, "first complex file")->required();
    compare->add_option("b", compare_b, "second complex file")->required();

    auto* demo = app.add_subcommand(
        "demo-saigata", "packaged five-participant walkthrough (all artifacts)");

    try {
        app.parse(argc, argv);
        config.validate();
        if (build->parsed()) {
            cmd_build(document_path, config, out_dir.empty() ? "." : out_dir);
        } else if (query->parsed()) {
            cmd_query(query_file, query_kind, query_arg, config);
        } else if (evolve->parsed()) {
            cmd_evolve(evolve_n, evolve_last, config, out_dir.empty() ? "." : out_dir);
        } else if (compare->parsed()) {
            cmd_compare(compare_a, compare_b, config);
        } else if (demo->parsed()) {
            cmd_demo_saigata(config, out_dir.empty() ? "saigata-demo" : out_dir);
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const senet::Error& e) {
        std::cerr << "error (" << senet::to_string(e.kind()) << "): " << e.what() << '\n';
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

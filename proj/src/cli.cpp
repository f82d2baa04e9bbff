#include "halin/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>
#include <sstream>

#include "halin/epg.hpp"
#include "halin/io.hpp"
#include "halin/rooting.hpp"
#include "halin/search.hpp"
#include "halin/tuc.hpp"
#include "halin/verify.hpp"
#include "halin/vpg.hpp"

namespace halin {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << content;
}

RepresentationDocument build_document(const TucDecomposition& d, RepKind kind) {
    RepresentationDocument doc;
    if (d.internal_count() == 1) {
        if (kind == RepKind::VpgL) {
            VpgFrame f = make_wheel_vpg_frame(d);
            doc.rep = build_lvpg(f);
            doc.provenance = {f.root, -1, f.order};
        } else {
            EpgFrame f = make_wheel_epg_frame(d);
            doc.rep = kind == RepKind::EpgC ? build_c_epg(f) : build_s_epg(f);
            doc.provenance = {f.root, -1, f.order};
        }
        return doc;
    }
    int base_index = find_base_pair(d).index;
    if (kind == RepKind::VpgL) {
        VpgFrame f = make_vpg_frame(d);
        doc.rep = build_lvpg(f);
        doc.provenance = {f.root, base_index, f.order};
    } else {
        EpgFrame f = make_epg_frame(d);
        doc.rep = kind == RepKind::EpgC ? build_c_epg(f) : build_s_epg(f);
        doc.provenance = {f.root, base_index, f.order};
    }
    return doc;
}

int run_build(const std::string& graph_path, RepKind kind, const std::string& svg_path,
              const std::string& out_path, std::ostream& out) {
    Graph g = parse_graph(read_file(graph_path));
    TucDecomposition d = decompose(g);
    RepresentationDocument doc = build_document(d, kind);
    VerifyReport report = verify_representation(g, doc.rep);
    if (!report.passed) {
        out << report.to_text();
        out << "verification FAILED (" << report.mismatch_count << " mismatches, "
            << report.bend_violations.size() << " bend violations)\n";
        return 1;
    }
    std::string text = emit_document(doc);
    if (out_path.empty())
        out << text;
    else
        write_file(out_path, text);
    if (!svg_path.empty()) write_file(svg_path, emit_svg(doc.rep, g));
    return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"grid-path representations of tree-union-cycle graphs"};
    app.require_subcommand(1);

    std::string graph_path, doc_path, svg_path, out_path;
    int grid = 0;
    std::uint64_t budget = 10'000'000'000ULL;
    std::uint64_t seed = 0;
    int internal = 1;
    bool allow_degree_two = false;

    auto* validate = app.add_subcommand("validate", "decompose a graph and report its class");
    validate->add_option("graph", graph_path, "graph file")->required();

    auto* vpg = app.add_subcommand("vpg", "build the one-bend L representation");
    vpg->add_option("graph", graph_path, "graph file")->required();
    vpg->add_option("--svg", svg_path, "write a drawing here");
    vpg->add_option("--out", out_path, "write the document here instead of stdout");

    auto* epg_c = app.add_subcommand("epg-c", "build the two-bend C representation");
    epg_c->add_option("graph", graph_path, "graph file")->required();
    epg_c->add_option("--svg", svg_path, "write a drawing here");
    epg_c->add_option("--out", out_path, "write the document here instead of stdout");

    auto* epg_s = app.add_subcommand("epg-s", "build the two-bend S representation");
    epg_s->add_option("graph", graph_path, "graph file")->required();
    epg_s->add_option("--svg", svg_path, "write a drawing here");
    epg_s->add_option("--out", out_path, "write the document here instead of stdout");

    auto* verify = app.add_subcommand("verify", "check a representation document against a graph");
    verify->add_option("graph", graph_path, "graph file")->required();
    verify->add_option("document", doc_path, "representation document")->required();

    auto* search = app.add_subcommand("search-b0", "decide zero-bend representability");
    search->add_option("graph", graph_path, "graph file")->required();
    search->add_option("--grid", grid, "grid size (default: twice the vertex count)");
    search->add_option("--budget", budget, "node budget before giving up");

    auto* gen = app.add_subcommand("gen", "emit a random instance");
    gen->add_option("--seed", seed, "random seed")->required();
    gen->add_option("--internal", internal, "number of internal tree vertices")->required();
    gen->add_flag("--allow-degree-two", allow_degree_two,
                  "permit degree-two vertices (non-Halin instances)");

    std::vector<std::string> argv_store = {"halin"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(argv_store.size());
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (app.got_subcommand(validate)) {
            Graph g = parse_graph(read_file(graph_path));
            TucDecomposition d = decompose(g);
            out << "tree-union-cycle: yes\n";
            out << "internal vertices:";
            for (int v : d.internal_vertices()) out << ' ' << v;
            out << "\ncycle:";
            for (int v : d.cycle) out << ' ' << v;
            out << "\nhalin: " << (is_halin(d) ? "yes" : "no") << '\n';
            return 0;
        }
        if (app.got_subcommand(vpg)) return run_build(graph_path, RepKind::VpgL, svg_path, out_path, out);
        if (app.got_subcommand(epg_c)) return run_build(graph_path, RepKind::EpgC, svg_path, out_path, out);
        if (app.got_subcommand(epg_s)) return run_build(graph_path, RepKind::EpgS, svg_path, out_path, out);
        if (app.got_subcommand(verify)) {
            Graph g = parse_graph(read_file(graph_path));
            RepresentationDocument doc = parse_document(read_file(doc_path));
            VerifyReport report = verify_representation(g, doc.rep);
            out << report.to_text();
            if (report.passed) {
                out << "verified: " << report.pairs.size() << " pairs, " << report.contact_count
                    << " in contact\n";
                return 0;
            }
            out << "verification FAILED (" << report.mismatch_count << " mismatches, "
                << report.bend_violations.size() << " bend violations)\n";
            return 1;
        }
        if (app.got_subcommand(search)) {
            Graph g = parse_graph(read_file(graph_path));
            if (grid == 0) grid = normalize_grid_bound(g.size());
            SearchOptions opts;
            opts.node_budget = budget;
            SearchOutcome outcome = search_b0_vpg(g, grid, opts);
            if (outcome.status == SearchOutcome::Status::Sat) {
                RepresentationDocument doc;
                doc.rep = witness_representation(*outcome.witness);
                VerifyReport report = verify_representation(g, doc.rep);
                if (!report.passed) throw Error("search produced an invalid witness");
                out << "SAT nodes=" << outcome.nodes_explored << '\n';
                out << emit_document(doc);
                return 0;
            }
            if (outcome.status == SearchOutcome::Status::Unsat) {
                out << "UNSAT nodes=" << outcome.nodes_explored << '\n';
                return 1;
            }
            out << "ABORTED nodes=" << outcome.nodes_explored << '\n';
            return 2;
        }
        if (app.got_subcommand(gen)) {
            out << format_graph(gen_halin(seed, internal, allow_degree_two));
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace halin

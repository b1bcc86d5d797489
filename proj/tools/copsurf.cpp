#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "copsurf/copsurf.hpp"

using namespace copsurf;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

void emit(const json& j, const std::string& out) {
    std::string text = j.dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
    } else {
        write_text_file(out, text);
    }
}

EmbeddingScheme load_scheme(const std::string& path) {
    auto s = embedding_from_json(read_json_file(path));
    return s;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

GenusMode parse_mode(const std::string& m) {
    if (m == "orientable") return GenusMode::Orientable;
    if (m == "nonorientable") return GenusMode::NonOrientable;
    if (m == "any") return GenusMode::Any;
    throw InvalidArgument("unknown genus mode '" + m + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cop numbers, signed rotation systems and covering-map strategy transfer"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);
    int code = 0;
    std::string out;

    // gen
    auto* gen = app.add_subcommand("gen", "Print a graph from a named family as graph6");
    std::string family;
    std::vector<long long> params;
    std::optional<std::uint64_t> seed;
    gen->add_option("family", family, "path cycle complete complete_bipartite grid petersen random_gnp or a platonic solid")
        ->required();
    gen->add_option("params", params, "Integer parameters (random_gnp: n percent)");
    gen->add_option("--seed", seed, "Seed for random families");
    gen->callback([&] { std::cout << write_graph6(generate(family, params, seed)) << "\n"; });

    // copnum
    auto* copnum = app.add_subcommand("copnum", "Compute the cop number");
    std::string graph_arg;
    std::uint64_t max_states = SolveOptions{}.max_states;
    copnum->add_option("graph", graph_arg, "graph6 string or file")->required();
    copnum->add_option("--max-states", max_states, "State budget per solve");
    copnum->add_option("-o,--out", out, "Write JSON here instead of stdout");
    copnum->callback([&] {
        auto t0 = std::chrono::steady_clock::now();
        Graph g = load_graph_arg(graph_arg);
        auto c = cop_number(g, {max_states});
        auto j = solve_json(c.result, c.value, ms_since(t0));
        j["graph6"] = write_graph6(g);
        emit(j, out);
    });

    // solve
    auto* solve = app.add_subcommand("solve", "Solve the k-cop game");
    std::size_t k = 1;
    std::string strategy_out;
    solve->add_option("graph", graph_arg, "graph6 string or file")->required();
    solve->add_option("-k,--cops", k, "Number of cops")->required();
    solve->add_option("--max-states", max_states, "State budget");
    solve->add_option("--strategy-out", strategy_out, "Write the extracted cop strategy (copwin only)");
    solve->add_option("-o,--out", out, "Write JSON here instead of stdout");
    solve->callback([&] {
        auto t0 = std::chrono::steady_clock::now();
        Graph g = load_graph_arg(graph_arg);
        auto r = solve_k_copwin(g, k, {max_states});
        auto j = solve_json(r, std::nullopt, ms_since(t0));
        j["graph6"] = write_graph6(g);
        if (!strategy_out.empty()) {
            if (!r.copwin()) throw NoStrategyError("graph is not " + std::to_string(k) + "-copwin");
            write_text_file(strategy_out, to_json(extract_cop_strategy(r), g).dump() + "\n");
        }
        emit(j, out);
    });

    // dismantle
    auto* dis = app.add_subcommand("dismantle", "Dismantling order");
    dis->add_option("graph", graph_arg, "graph6 string or file")->required();
    dis->callback([&] {
        auto d = dismantle(load_graph_arg(graph_arg));
        emit({{"dismantlable", d.dismantlable}, {"order", d.order}, {"irreducible", d.irreducible}}, out);
    });

    // play
    auto* playc = app.add_subcommand("play", "Play a cop strategy against the optimal robber");
    std::string strategy_file;
    std::size_t limit = 1000;
    playc->add_option("graph", graph_arg, "graph6 string or file (ignored with --strategy)");
    playc->add_option("--strategy", strategy_file, "Cop strategy JSON; default is the solver's optimal strategy");
    playc->add_option("--limit", limit, "Maximum cop moves");
    playc->add_option("-o,--out", out, "Write the transcript here instead of stdout");
    playc->callback([&] {
        Graph g;
        CopStrategy cops;
        std::size_t kk = 0;
        if (!strategy_file.empty()) {
            auto loaded = strategy_from_json(read_json_file(strategy_file));
            g = loaded.graph;
            cops = loaded.strategy;
            kk = cops.cops();
        } else {
            if (graph_arg.empty()) throw InvalidArgument("play needs a graph or --strategy");
            g = load_graph_arg(graph_arg);
            auto c = cop_number(g);
            kk = c.value;
            cops = extract_cop_strategy(c.result);
        }
        RobberStrategy robber(solve_k_copwin(g, kk));
        auto tr = play(g, cops, robber, limit);
        emit(to_json(tr), out);
        if (tr.outcome != Outcome::Capture) code = kExitFail;
    });

    // transfer
    auto* transfer = app.add_subcommand("transfer", "Transfer a cover strategy to the base graph");
    std::string cover_file;
    bool simulate = false, verify_flag = false;
    transfer->add_option("--cover", cover_file, "Covering-map JSON (source = cover graph)")->required();
    transfer->add_option("--strategy", strategy_file, "Cop strategy JSON on the cover graph")->required();
    transfer->add_flag("--simulate", simulate, "Play the transferred strategy against the optimal base robber");
    transfer->add_flag("--verify", verify_flag, "Exhaustively verify the transferred strategy");
    transfer->add_option("--limit", limit, "Maximum cop moves when simulating");
    transfer->add_option("-o,--out", out, "Write JSON here instead of stdout");
    transfer->callback([&] {
        auto map = covering_from_json(read_json_file(cover_file));
        auto loaded = strategy_from_json(read_json_file(strategy_file));
        if (!(loaded.graph == map.source)) throw InvalidArgument("strategy graph differs from the cover graph");
        auto sim = transfer_strategy(map, loaded.strategy);
        const std::size_t kk = loaded.strategy.cops();
        json j = {{"base_graph6", write_graph6(map.target)}, {"cops", kk}, {"placement", sim.place()}};
        if (simulate) {
            RobberStrategy robber(solve_k_copwin(map.target, kk));
            auto tr = play(map.target, sim, robber, limit);
            j["transcript"] = to_json(tr);
            if (tr.outcome != Outcome::Capture) code = kExitFail;
        }
        if (verify_flag) {
            auto w = verify_winning(map.target, sim, kk);
            j["verify"] = {{"winning", w.winning},
                           {"explored", w.explored},
                           {"worst_cop_moves", w.worst_cop_moves},
                           {"failure", w.failure}};
            if (!w) code = kExitFail;
        }
        emit(j, out);
    });

    // faces
    auto* faces = app.add_subcommand("faces", "Trace the faces of an embedding");
    std::string scheme_file;
    faces->add_option("embedding", scheme_file, "Embedding JSON")->required()->check(CLI::ExistingFile);
    faces->add_option("-o,--out", out, "Write JSON here instead of stdout");
    faces->callback([&] { emit(faces_json(load_scheme(scheme_file)), out); });

    // genus
    auto* genus = app.add_subcommand("genus", "Euler genus of an embedding, or minimum genus of a graph");
    bool exhaustive = false;
    std::string mode = "orientable", witness_out;
    std::uint64_t budget = GenusSearchOptions{}.budget;
    unsigned threads = 0;
    genus->add_option("input", graph_arg, "Embedding JSON file, or a graph (with --exhaustive)")->required();
    genus->add_flag("--exhaustive", exhaustive, "Search all schemes of a graph");
    genus->add_option("--mode", mode, "orientable, nonorientable or any");
    genus->add_option("--budget", budget, "Maximum number of schemes to enumerate");
    genus->add_option("--threads", threads, "Worker threads (0 = hardware)");
    genus->add_option("--witness-out", witness_out, "Write the minimising scheme here");
    genus->add_option("-o,--out", out, "Write JSON here instead of stdout");
    genus->callback([&] {
        if (!exhaustive) {
            auto s = load_scheme(graph_arg);
            emit({{"euler_genus", euler_genus(s)}, {"orientable", is_orientable_scheme(s)},
                  {"face_count", face_count(s)}, {"euler_characteristic", euler_characteristic(s)}},
                 out);
            return;
        }
        auto r = min_euler_genus(load_graph_arg(graph_arg), parse_mode(mode), {budget, threads});
        json j = {{"mode", mode}, {"euler_genus", r.euler_genus}, {"orientable", r.orientable}, {"space", r.space}};
        if (auto og = r.orientable_genus()) j["orientable_genus"] = *og;
        if (!witness_out.empty()) write_text_file(witness_out, to_json(r.witness).dump() + "\n");
        emit(j, out);
    });

    // crosscap
    auto* crosscap = app.add_subcommand("crosscap", "Add a crosscap to an embedding");
    crosscap->add_option("embedding", scheme_file, "Embedding JSON")->required()->check(CLI::ExistingFile);
    crosscap->add_option("-o,--out", out, "Write the new scheme here instead of stdout");
    crosscap->callback([&] {
        auto s = load_scheme(scheme_file);
        auto x = add_crosscap(s);
        std::cerr << "euler genus " << euler_genus(s) << " -> " << euler_genus(x) << "\n";
        emit(to_json(x), out);
    });

    // doublecover
    auto* dcov = app.add_subcommand("doublecover", "Orientation double cover of a signed scheme");
    std::string map_out;
    dcov->add_option("embedding", scheme_file, "Embedding JSON")->required()->check(CLI::ExistingFile);
    dcov->add_option("--map-out", map_out, "Write the covering map JSON here");
    dcov->add_option("-o,--out", out, "Write the cover scheme here instead of stdout");
    dcov->callback([&] {
        auto dc = double_cover(load_scheme(scheme_file));
        if (!map_out.empty()) write_text_file(map_out, to_json(dc.map).dump() + "\n");
        emit(to_json(dc.cover), out);
    });

    // weakcover
    auto* weak = app.add_subcommand("weakcover", "Check a vertex map for the weak-cover property");
    std::string check_file, source_arg, target_arg;
    weak->add_option("--check", check_file, "Map JSON: a covering map, or {\"p\": [...]} with graphs given")
        ->required();
    weak->add_option("source", source_arg, "Source graph (overrides the map file)");
    weak->add_option("target", target_arg, "Target graph (overrides the map file)");
    weak->callback([&] {
        json j = read_json_file(check_file);
        Graph source = source_arg.empty() ? parse_graph6(detail::json_get<std::string>(j, "source_graph6"))
                                          : load_graph_arg(source_arg);
        Graph target = target_arg.empty() ? parse_graph6(detail::json_get<std::string>(j, "target_graph6"))
                                          : load_graph_arg(target_arg);
        auto p = detail::json_get<std::vector<Vertex>>(j, "p");
        auto check = check_weak_cover(p, source, target);
        json r = {{"weak_cover", check.ok()}};
        if (check) {
            r["two_sheeted"] = is_two_sheeted(p, source, target);
        } else {
            r["problems"] = check.describe();
            json viol = json::array();
            for (const auto& v : check.violations)
                viol.push_back({{"vertex", v.vertex}, {"missing", v.missing}, {"extra", v.extra}});
            r["violations"] = viol;
            r["unhit"] = check.unhit;
            code = kExitFail;
        }
        emit(r, out);
    });

    // bounds
    auto* bnd = app.add_subcommand("bounds", "Upper bounds on surface cop numbers");
    bool table = false, nonorientable = false;
    std::uint64_t max_genus = 7, g = 0;
    std::string format = "csv", method;
    bnd->add_flag("--table", table, "Print the comparison table");
    bnd->add_option("--max-genus", max_genus, "Last genus in the table");
    bnd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    bnd->add_option("--genus", g, "Single genus");
    bnd->add_flag("--nonorientable", nonorientable, "Non-orientable surface");
    bnd->add_option("--method", method,
                    "quilliot, schroder (orientable); andreae, nowakowski_schroder, cover_transfer (non-orientable)");
    bnd->callback([&] {
        if (table) {
            if (max_genus < 1) throw InvalidArgument("--max-genus must be at least 1");
            auto rows = bounds_table(max_genus);
            if (format == "csv") {
                std::cout << bounds_table_csv(rows);
            } else {
                emit(to_json(rows), out);
            }
            return;
        }
        json j = {{"genus", g}, {"nonorientable", nonorientable}};
        if (nonorientable) {
            j["andreae"] = nonorientable_upper_bound(g, NonOrientableMethod::Andreae);
            j["nowakowski_schroder"] = nonorientable_upper_bound(g, NonOrientableMethod::NowakowskiSchroder);
            j["cover_transfer"] = nonorientable_upper_bound(g, NonOrientableMethod::CoverTransfer);
        } else {
            j["quilliot"] = orientable_upper_bound(g, OrientableMethod::Quilliot);
            j["schroder"] = orientable_upper_bound(g, OrientableMethod::Schroder);
        }
        if (!method.empty()) {
            if (!j.contains(method)) throw InvalidArgument("method '" + method + "' does not apply here");
            std::cout << j[method].get<std::uint64_t>() << "\n";
            return;
        }
        emit(j, out);
    });

    // verify
    auto* ver = app.add_subcommand("verify", "Run the instance pipeline over an embedding corpus");
    std::string corpus_dir;
    unsigned jobs = 1;
    ver->add_option("corpus", corpus_dir, "Directory of embedding JSON files")->required();
    ver->add_option("-j,--jobs", jobs, "Worker threads");
    ver->add_option("-o,--out", out, "Write the report here instead of stdout");
    ver->callback([&] {
        auto report = verify_theorem(corpus_dir, jobs);
        emit(report.to_json(), out);
        std::cerr << report.passes << " passed, " << report.failures << " failed, " << report.input_errors
                  << " input errors\n";
        code = report.exit_code();
    });

    // corpus
    auto* corpus = app.add_subcommand("corpus", "Corpus management");
    corpus->require_subcommand(1);
    auto* crun = corpus->add_subcommand("run", "Run a command over a corpus");
    std::string command, inputs_arg;
    crun->add_option("command", command, "copnum, dismantle, genus (graph6 file) or faces, crosscap (directory)")
        ->required();
    crun->add_option("inputs", inputs_arg, "graph6 file or embedding directory")->required();
    crun->add_option("-j,--jobs", jobs, "Worker threads");
    crun->add_option("-o,--out", out, "Write the report here instead of stdout");
    crun->callback([&] {
        std::vector<std::string> inputs;
        if (std::filesystem::is_directory(inputs_arg)) {
            for (const auto& p : detail::list_files(inputs_arg, ".json")) inputs.push_back(p.string());
        } else {
            inputs = read_graph6_corpus(inputs_arg);
        }
        auto run = run_corpus(command, inputs, jobs);
        emit(run.report, out);
        code = run.exit_code();
    });
    auto* cbuild = corpus->add_subcommand("build", "Regenerate the shipped corpus");
    cbuild->add_option("dir", corpus_dir, "Output directory")->required();
    cbuild->callback([&] { write_default_corpus(corpus_dir); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInput;
    } catch (const InvariantError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    } catch (const StrategyHoleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return code;
}

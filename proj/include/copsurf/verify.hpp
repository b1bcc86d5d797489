#pragma once

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <string>
#include <vector>

#include "copsurf/bounds.hpp"
#include "copsurf/corpus.hpp"
#include "copsurf/covering.hpp"
#include "copsurf/embedding.hpp"
#include "copsurf/game.hpp"
#include "copsurf/io.hpp"
#include "copsurf/solver.hpp"
#include "copsurf/transfer.hpp"

namespace copsurf {

struct VerificationReport {
    std::string corpus;
    std::vector<json> records;
    std::size_t passes = 0;
    std::size_t failures = 0;
    std::size_t input_errors = 0;

    int exit_code() const { return input_errors ? 2 : failures ? 1 : 0; }

    json to_json() const {
        return {{"tool", kToolName},
                {"version", kToolVersion},
                {"corpus", corpus},
                {"seed", nullptr},
                {"records", records},
                {"summary", {{"instances", records.size()}, {"passes", passes}, {"failures", failures},
                             {"input_errors", input_errors}}}};
    }
};

namespace detail {

class Checks {
public:
    void require(bool ok, const std::string& what) {
        list_.push_back({{"check", what}, {"pass", ok}});
        if (!ok) failed_.push_back(what);
    }
    json list() const { return list_; }
    const std::vector<std::string>& failed() const { return failed_; }

private:
    json list_ = json::array();
    std::vector<std::string> failed_;
};

inline double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

/// Non-orientable scheme: cover, cop numbers, strategy transfer, genus and bounds.
inline void verify_upper(const EmbeddingScheme& s, std::size_t eg, json& rec, Checks& checks) {
    const Graph base = s.graph();
    auto dc = double_cover(s);
    const Graph& cover = dc.map.source;
    const bool cover_connected = is_connected(cover);
    const bool cover_orientable = is_orientable_scheme(dc.cover);
    checks.require(cover_connected, "cover is connected");
    checks.require(cover_orientable, "cover is orientable");
    const long long chi = euler_characteristic(s);
    const long long cover_chi = euler_characteristic(dc.cover);
    checks.require(cover_chi == 2 * chi, "cover Euler characteristic is twice the base");
    checks.require(face_count(dc.cover) == 2 * face_count(s), "cover has twice as many faces");
    json genus = {{"base_euler_genus", eg}, {"base_euler_characteristic", chi},
                  {"cover_euler_characteristic", cover_chi}, {"cover_connected", cover_connected},
                  {"cover_orientable", cover_orientable}};
    if (cover_connected) {
        std::size_t cover_eg = euler_genus(dc.cover);
        genus["cover_euler_genus"] = cover_eg;
        genus["cover_orientable_genus"] = cover_eg / 2;
        checks.require(cover_eg + 2 == 2 * eg, "cover orientable genus is base genus minus one");
    }
    rec["genus"] = genus;
    rec["cover_graph6"] = write_graph6(cover);

    auto cb = cop_number(base);
    auto cc = cop_number(cover);
    rec["base_cop_number"] = cb.value;
    rec["cover_cop_number"] = cc.value;
    checks.require(cb.value <= cc.value, "c(base) <= c(cover)");

    CopStrategy strategy = extract_cop_strategy(cc.result);
    auto on_cover = verify_winning(cover, strategy, cc.value);
    checks.require(on_cover.winning, "cover strategy wins on the cover");
    auto sim = transfer_strategy(dc.map, strategy);
    auto on_base = verify_winning(base, sim, cc.value);
    const std::size_t rank_bound = (static_cast<std::size_t>(cc.result.placement_rank()) + 1) / 2;
    rec["transfer"] = {{"cops", cc.value},
                       {"winning", on_base.winning},
                       {"explored", on_base.explored},
                       {"worst_cop_moves", on_base.worst_cop_moves},
                       {"rank_bound_cop_moves", rank_bound},
                       {"failure", on_base.failure}};
    checks.require(on_base.winning, "transferred strategy wins on the base");
    checks.require(on_base.winning && on_base.worst_cop_moves <= rank_bound, "capture within the cover rank bound");

    const auto base_bound = nonorientable_upper_bound(eg, NonOrientableMethod::CoverTransfer);
    const auto ns_bound = nonorientable_upper_bound(eg, NonOrientableMethod::NowakowskiSchroder);
    rec["bounds"] = {{"here_bound", base_bound}, {"ns_bound", ns_bound}};
    checks.require(cb.value <= base_bound, "c(base) within the non-orientable bound");
    checks.require(cb.value <= ns_bound, "c(base) within 2g+1");
    if (cover_connected) {
        const auto cover_bound = orientable_upper_bound(eg - 1, OrientableMethod::Schroder);
        rec["bounds"]["cover_bound"] = cover_bound;
        checks.require(cc.value <= cover_bound, "c(cover) within the orientable bound");
    }
}

/// Orientable scheme: add a crosscap and check the Euler genus arithmetic.
inline void verify_lower(const EmbeddingScheme& s, std::size_t eg, json& rec, Checks& checks) {
    auto x = add_crosscap(s);
    const std::size_t xeg = euler_genus(x);
    const bool x_orientable = is_orientable_scheme(x);
    rec["crosscap"] = {{"euler_genus", xeg}, {"orientable", x_orientable}, {"bound", eg + 1}};
    checks.require(!x_orientable, "crosscap scheme is non-orientable");
    checks.require(xeg <= eg + 1, "crosscap Euler genus <= 2*genus + 1");
    auto cb = cop_number(s.graph());
    rec["base_cop_number"] = cb.value;
    const auto bound = orientable_upper_bound(eg / 2, OrientableMethod::Schroder);
    rec["bounds"] = {{"orientable_bound", bound}};
    checks.require(cb.value <= bound, "c(base) within the orientable bound");
}

inline json verify_instance(const std::filesystem::path& file) {
    auto t0 = std::chrono::steady_clock::now();
    json rec = {{"embedding_id", file.stem().string()}};
    std::string text;
    EmbeddingScheme s;
    try {
        text = read_text_file(file);
        rec["input_hash"] = fnv1a_hex(text);
        s = embedding_from_json(json::parse(text));
        require_valid(s, true);
    } catch (const std::exception& e) {
        rec["input_error"] = e.what();
        rec["pass"] = false;
        return rec;
    }
    Checks checks;
    try {
        const std::size_t eg = euler_genus(s);
        const bool orientable = is_orientable_scheme(s);
        rec["graph6"] = write_graph6(s.graph());
        rec["orientable"] = orientable;
        rec["euler_genus"] = eg;
        rec["direction"] = orientable ? "lower" : "upper";
        if (orientable) {
            verify_lower(s, eg, rec, checks);
        } else {
            verify_upper(s, eg, rec, checks);
        }
    } catch (const std::exception& e) {
        checks.require(false, std::string("exception: ") + e.what());
    }
    rec["checks"] = checks.list();
    rec["failures"] = checks.failed();
    rec["pass"] = checks.failed().empty();
    rec["elapsed_ms"] = ms_since(t0);
    return rec;
}

inline std::vector<std::filesystem::path> list_files(const std::filesystem::path& dir, const std::string& ext) {
    std::vector<std::filesystem::path> out;
    if (!std::filesystem::is_directory(dir)) throw InvalidArgument("not a directory: " + dir.string());
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ext) out.push_back(entry.path());
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline void sort_records(std::vector<json>& records) {
    auto key = [](const json& r) {
        return std::pair{r.value("input_hash", std::string()), r.value("input", r.value("embedding_id", std::string()))};
    };
    std::stable_sort(records.begin(), records.end(), [&](const json& a, const json& b) { return key(a) < key(b); });
}

} // namespace detail

/// Run the instance pipeline on every *.json embedding in `corpus`.
inline VerificationReport verify_theorem(const std::filesystem::path& corpus, unsigned jobs = 1) {
    auto files = detail::list_files(corpus, ".json");
    VerificationReport report;
    report.corpus = corpus.filename().string();
    report.records = parallel_map(files.size(), jobs, [&](std::size_t i) { return detail::verify_instance(files[i]); });
    detail::sort_records(report.records);
    for (const auto& r : report.records) {
        if (r.contains("input_error")) ++report.input_errors;
        else if (r["pass"].get<bool>()) ++report.passes;
        else ++report.failures;
    }
    return report;
}

struct CorpusRun {
    json report;
    std::size_t errors = 0;

    int exit_code() const { return errors ? 2 : 0; }
};

/// Apply a solver or embedding command to every input. Graph commands
/// (copnum, dismantle, genus) take graph6 lines; embedding commands (faces,
/// crosscap) take embedding JSON files. Output is independent of `jobs`.
inline CorpusRun run_corpus(const std::string& command, const std::vector<std::string>& inputs, unsigned jobs = 1) {
    static const std::vector<std::string> graph_commands{"copnum", "dismantle", "genus"};
    static const std::vector<std::string> scheme_commands{"faces", "crosscap"};
    const bool on_graphs = std::ranges::find(graph_commands, command) != graph_commands.end();
    if (!on_graphs && std::ranges::find(scheme_commands, command) == scheme_commands.end()) {
        throw InvalidArgument("unknown corpus command '" + command + "'");
    }
    auto one = [&](std::size_t i) -> json {
        const std::string& input = inputs[i];
        json rec = {{"input", input}};
        auto t0 = std::chrono::steady_clock::now();
        try {
            if (on_graphs) {
                rec["input_hash"] = fnv1a_hex(input);
                Graph g = parse_graph6(input);
                if (command == "copnum") {
                    rec["cop_number"] = cop_number(g).value;
                } else if (command == "dismantle") {
                    auto d = dismantle(g);
                    rec["dismantlable"] = d.dismantlable;
                    rec["order"] = d.order;
                } else {
                    auto r = min_euler_genus(g, GenusMode::Orientable);
                    rec["euler_genus"] = r.euler_genus;
                    rec["orientable_genus"] = r.orientable_genus().value_or(r.euler_genus / 2);
                }
            } else {
                std::string text = read_text_file(input);
                rec["input_hash"] = fnv1a_hex(text);
                auto s = embedding_from_json(json::parse(text));
                if (command == "faces") {
                    rec["result"] = faces_json(s);
                } else {
                    auto x = add_crosscap(s);
                    rec["euler_genus_before"] = euler_genus(s);
                    rec["euler_genus_after"] = euler_genus(x);
                }
            }
        } catch (const std::exception& e) {
            rec["error"] = e.what();
        }
        rec["elapsed_ms"] = detail::ms_since(t0);
        return rec;
    };
    std::vector<json> records = parallel_map(inputs.size(), jobs, one);
    detail::sort_records(records);

    CorpusRun run;
    json histogram = json::object();
    for (const auto& r : records) {
        if (r.contains("error")) ++run.errors;
        if (r.contains("cop_number")) {
            std::string key = std::to_string(r["cop_number"].get<std::size_t>());
            histogram[key] = histogram.value(key, 0) + 1;
        }
    }
    json summary = {{"count", records.size()}, {"errors", run.errors}};
    if (command == "copnum") summary["cop_number_histogram"] = histogram;
    run.report = {{"tool", kToolName},   {"version", kToolVersion}, {"command", command},
                  {"seed", nullptr},     {"records", records},      {"summary", summary}};
    return run;
}

} // namespace copsurf

// Command-line driver: exact solving, approximation, preprocessing,
// kernelization, verification, instance generation, and the hitting-set
// instance transformer. Exit codes: 0 success, 1 infeasible/rejected,
// 2 input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "vecon/approx.hpp"
#include "vecon/exact.hpp"
#include "vecon/flow.hpp"
#include "vecon/hardness.hpp"
#include "vecon/io.hpp"
#include "vecon/kernel.hpp"
#include "vecon/reduction.hpp"

namespace {

using nlohmann::json;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw vecon::input_error("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

struct Emitter {
    std::string json_target; // empty, "-", or a path
    bool timings = false;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    bool json_to_stdout() const { return json_target == "-"; }

    void print(const std::string& text) const {
        if (!json_to_stdout()) std::cout << text;
    }

    void emit(const std::string& command, const std::string& digest,
              std::optional<std::uint64_t> seed, json result) const {
        if (json_target.empty()) return;
        json report;
        report["schema"] = 1;
        report["command"] = command;
        report["input_digest"] = digest;
        report["seed"] = seed ? json(*seed) : json(nullptr);
        if (timings) {
            auto elapsed = std::chrono::steady_clock::now() - start;
            report["timing_ms"] =
                std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        } else {
            report["timing_ms"] = nullptr;
        }
        report["result"] = std::move(result);
        std::string text = report.dump(2) + "\n";
        if (json_to_stdout()) {
            std::cout << text;
        } else {
            std::ofstream file(json_target, std::ios::binary);
            if (!file) throw vecon::input_error("cannot open json output: " + json_target);
            file << text;
        }
    }
};

json vertex_list(const vecon::vertex_set& vs) {
    return json(vs);
}

int cmd_solve(const std::string& input, bool exact, int cap, const Emitter& emitter) {
    if (!exact)
        throw vecon::input_error("solve requires --exact (no other backend is built in)");
    std::string text = read_input(input);
    vecon::Instance inst = vecon::parse_instance(text);
    vecon::ExactResult res = vecon::brute_force_opt(inst, cap);
    if (!vecon::verify_solution(inst, res.witness))
        throw vecon::error("internal: witness failed verification");
    bool feasible = res.opt <= inst.budget;

    std::ostringstream out;
    out << "opt " << res.opt << '\n';
    out << "solution";
    for (int v : res.witness) out << ' ' << v;
    out << '\n';
    out << "status " << (feasible ? "yes" : "no") << '\n';
    emitter.print(out.str());

    json result;
    result["feasible"] = feasible;
    result["opt"] = res.opt;
    result["witness"] = vertex_list(res.witness);
    emitter.emit("solve", vecon::content_digest(text), std::nullopt, result);
    return feasible ? 0 : 1;
}

int cmd_approx(const std::string& input, const std::string& mode, int threads,
               const Emitter& emitter) {
    std::string text = read_input(input);
    vecon::Instance inst = vecon::parse_instance(text);
    vecon::vertex_set solution;
    if (mode == "d") {
        solution = vecon::approximate_d(inst);
    } else if (mode == "opt2") {
        solution = vecon::approximate_opt_squared(inst, threads);
    } else {
        throw vecon::input_error("unknown mode '" + mode + "', expected d or opt2");
    }
    if (!vecon::verify_solution(inst, solution))
        throw vecon::error("internal: approximation output failed verification");

    std::ostringstream out;
    out << "solution";
    for (int v : solution) out << ' ' << v;
    out << '\n' << "size " << solution.size() << '\n';
    emitter.print(out.str());

    json result;
    result["mode"] = mode;
    result["size"] = solution.size();
    result["solution"] = vertex_list(solution);
    emitter.emit("approx", vecon::content_digest(text), std::nullopt, result);
    return 0;
}

int cmd_reduce(const std::string& input, const Emitter& emitter) {
    std::string text = read_input(input);
    vecon::Instance inst = vecon::parse_instance(text);
    auto [reduced, trace] = vecon::exhaust_rule1(inst);
    bool rejected = vecon::rule2_check(reduced) == vecon::Rule2Verdict::rejected;
    std::string reduced_text = vecon::serialize_instance(reduced);

    emitter.print(reduced_text);

    json steps = json::array();
    for (const auto& step : trace.steps) {
        json entry;
        entry["rule"] = step.rule;
        entry["vertex"] = step.vertex;
        entry["demand_before"] = step.demand_before;
        steps.push_back(entry);
    }
    json result;
    result["rejected"] = rejected;
    result["steps"] = steps;
    result["instance"] = reduced_text;
    emitter.emit("reduce", vecon::content_digest(text), std::nullopt, result);
    return rejected ? 1 : 0;
}

int cmd_kernel(const std::string& input, const vecon::ReplacementLimits& caps, bool selftest,
               int exact_cap, const Emitter& emitter) {
    std::string text = read_input(input);
    vecon::Instance inst = vecon::parse_instance(text);
    vecon::KernelReport report = vecon::kernelize(inst, caps);
    std::string kernel_text = vecon::serialize_instance(report.output);

    std::string selftest_state = "skipped";
    if (selftest) {
        vecon::Instance reparsed = vecon::parse_instance(kernel_text);
        bool in_cap = inst.graph.vertex_count() <= exact_cap &&
                      reparsed.graph.vertex_count() <= exact_cap;
        if (in_cap) {
            bool in_yes = vecon::brute_force_opt(inst, exact_cap).opt <= inst.budget;
            bool out_yes = !report.rejected &&
                           vecon::brute_force_opt(reparsed, exact_cap).opt <= reparsed.budget;
            selftest_state = (in_yes == out_yes) ? "pass" : "fail";
        }
    }

    emitter.print(kernel_text);

    json ysets = json::array();
    for (const auto& y : report.ysets) {
        json entry;
        entry["vertices"] = vertex_list(y.vertices);
        entry["boundary"] = vertex_list(y.boundary);
        entry["witness"] = y.witness;
        ysets.push_back(entry);
    }
    json replacements = json::array();
    for (const auto& r : report.replacements) {
        json entry;
        entry["piece"] = vertex_list(r.piece);
        entry["new_piece_size"] = r.new_piece_size;
        replacements.push_back(entry);
    }
    json result;
    result["rejected"] = report.rejected;
    result["kernel"] = kernel_text;
    result["n"] = report.output.graph.vertex_count();
    result["m"] = report.output.graph.edge_count();
    result["k"] = report.output.budget;
    result["d"] = report.output.bound();
    result["torso_set"] = vertex_list(report.torso_set);
    result["ysets"] = ysets;
    result["replacements"] = replacements;
    result["selftest"] = selftest_state;
    emitter.emit("kernel", vecon::content_digest(text), std::nullopt, result);

    if (selftest_state == "fail") return 1;
    return report.rejected ? 1 : 0;
}

int cmd_verify(const std::string& input, const std::string& solution_path,
               const Emitter& emitter) {
    std::string text = read_input(input);
    vecon::Instance inst = vecon::parse_instance(text);
    std::string solution_text = read_input(solution_path);
    vecon::vertex_set solution = vecon::parse_solution(solution_text, inst.graph);
    bool feasible = vecon::verify_solution(inst, solution);

    emitter.print(std::string("feasible ") + (feasible ? "yes" : "no") + "\n");

    json result;
    result["feasible"] = feasible;
    result["solution"] = vertex_list(solution);
    emitter.emit("verify", vecon::content_digest(text), std::nullopt, result);
    return feasible ? 0 : 1;
}

int cmd_gen(const vecon::GenParams& params, const Emitter& emitter) {
    vecon::Instance inst = vecon::gen_random(params);
    std::string text = vecon::serialize_instance(inst);
    emitter.print(text);

    json result;
    result["instance"] = text;
    result["n"] = params.n;
    result["edge_prob"] = params.edge_prob;
    result["demand_dist"] = params.demand_dist;
    result["d"] = params.d;
    result["k"] = params.k;
    emitter.emit("gen", vecon::content_digest(text), params.seed, result);
    return 0;
}

int cmd_fromhs(const std::string& input, const Emitter& emitter) {
    std::string text = read_input(input);
    vecon::HittingSetInstance hs = vecon::parse_hs(text);
    vecon::Instance inst = vecon::reduce_hs_to_vc(hs);
    std::string out_text = vecon::serialize_instance(inst);
    emitter.print(out_text);

    json result;
    result["instance"] = out_text;
    result["n"] = inst.graph.vertex_count();
    result["m"] = inst.graph.edge_count();
    result["budget"] = inst.budget;
    result["d"] = inst.bound();
    emitter.emit("fromhs", vecon::content_digest(text), std::nullopt, result);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"vecon: vector connectivity toolkit"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    std::string input = "-";
    std::string json_target;
    bool timings = false;
    app.add_option("--json", json_target, "write the run report to a file, or - for stdout");
    app.add_flag("--timings", timings, "include wall-clock timing in the report");

    auto* solve = app.add_subcommand("solve", "exact optimum by exhaustive search");
    bool exact = false;
    int exact_cap = vecon::kDefaultExactCap;
    solve->add_option("--input", input, "instance file, or - for stdin");
    solve->add_flag("--exact", exact, "use the exhaustive solver");
    solve->add_option("--exact-cap", exact_cap, "vertex cap for exhaustive search");

    auto* approx = app.add_subcommand("approx", "local-ratio approximation");
    std::string mode = "d";
    int threads = 1;
    approx->add_option("--input", input, "instance file, or - for stdin");
    approx->add_option("--mode", mode, "d (factor-d) or opt2 (guessing wrapper)");
    approx->add_option("--threads", threads, "parallel guesses in opt2 mode");

    auto* reduce = app.add_subcommand("reduce", "demand-forgetting preprocessing");
    reduce->add_option("--input", input, "instance file, or - for stdin");

    auto* kernel = app.add_subcommand("kernel", "kernelization pipeline");
    vecon::ReplacementLimits caps;
    bool selftest = false;
    kernel->add_option("--input", input, "instance file, or - for stdin");
    kernel->add_option("--max-new-vertices", caps.max_new_vertices,
                       "cap on fresh vertices per replacement piece");
    kernel->add_option("--full-kernel-d", caps.full_kernel_d,
                       "attempt piece replacement only up to this demand bound");
    kernel->add_option("--exact-cap", exact_cap, "vertex cap for --selftest equivalence");
    kernel->add_flag("--selftest", selftest,
                     "re-check input/output equivalence by brute force when small enough");

    auto* verify = app.add_subcommand("verify", "check a candidate solution");
    std::string solution_path;
    verify->add_option("--input", input, "instance file, or - for stdin");
    verify->add_option("--solution", solution_path, "file with solution vertex ids")
        ->required();

    auto* gen = app.add_subcommand("gen", "seeded random instance");
    vecon::GenParams params;
    gen->add_option("--n", params.n, "vertex count");
    gen->add_option("--edge-prob", params.edge_prob, "edge probability");
    gen->add_option("--demand-dist", params.demand_dist, "uniform | zero | sparse:<p>");
    gen->add_option("--d", params.d, "demand bound");
    gen->add_option("--k", params.k, "budget");
    gen->add_option("--seed", params.seed, "random seed");

    auto* fromhs = app.add_subcommand("fromhs", "hitting-set instance transformer");
    fromhs->add_option("--input", input, "hitting set file, or - for stdin");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Emitter emitter{json_target, timings};
    try {
        if (solve->parsed()) return cmd_solve(input, exact, exact_cap, emitter);
        if (approx->parsed()) return cmd_approx(input, mode, threads, emitter);
        if (reduce->parsed()) return cmd_reduce(input, emitter);
        if (kernel->parsed()) return cmd_kernel(input, caps, selftest, exact_cap, emitter);
        if (verify->parsed()) return cmd_verify(input, solution_path, emitter);
        if (gen->parsed()) return cmd_gen(params, emitter);
        if (fromhs->parsed()) return cmd_fromhs(input, emitter);
    } catch (const vecon::input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const vecon::capacity_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pres/json_io.hpp"

using namespace pres;
using nlohmann::json;

namespace {

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<int> parse_set(const std::string& csv) {
    std::vector<int> s;
    std::istringstream is(csv);
    std::string tok;
    while (std::getline(is, tok, ',')) s.push_back(std::stoi(tok));
    return s;
}

int run(CLI::App& app, int argc, char** argv) {
    app.require_subcommand(1);

    std::string group_spec, fn_spec;
    int max_k = 0, workers = 1, steps = 1;
    bool no_symmetry = false, with_vg = false, check_exact = false, repair = false;
    std::string strategy = "average";
    std::string set_csv, g_spec, out_path, model_name = "pres", assignment_path, table_name, dump_mf;
    std::string two_to_one;
    int q_arg = 0, v_arg = 0, max_p = 0, max_q = 0;
    std::uint64_t iters = 0, budget = 0;
    std::optional<std::uint64_t> seed;
    double time_budget = 0;

    auto add_group = [&](CLI::App* cmd, bool need_fn) {
        cmd->add_option("--group", group_spec, "group spec, e.g. zn:8 or gf:9:poly=2,2,1")->required();
        auto* fn = cmd->add_option("--fn", fn_spec, "function spec, e.g. pow:2 or table:0,0,1");
        if (need_fn) fn->required();
    };
    auto make_function = [&] { return FunctionTable::parse(Group::parse(group_spec), fn_spec); };

    CLI::App* pres_cmd = app.add_subcommand("pres", "exact permutation resemblance");
    add_group(pres_cmd, true);
    pres_cmd->add_option("--max-k", max_k, "stop after value sets of this size");
    pres_cmd->add_option("--workers", workers, "parallel subset scanners");
    pres_cmd->add_flag("--no-symmetry", no_symmetry, "do not pin 0 into the value set");
    pres_cmd->add_option("--dump-mf", dump_mf, "also write the subtraction table as CSV");

    CLI::App* brute_cmd = app.add_subcommand("bruteforce-pres", "definition-level oracle (q <= 5)");
    add_group(brute_cmd, true);

    CLI::App* greedy_cmd = app.add_subcommand("greedy", "iterative subtable construction");
    add_group(greedy_cmd, true);
    greedy_cmd->add_option("--steps", steps, "step budget k");
    greedy_cmd->add_option("--strategy", strategy, "average | greedy")
        ->check(CLI::IsMember({"average", "greedy"}));

    CLI::App* bound_cmd = app.add_subcommand("bound", "closed-form bounds");
    bound_cmd->add_option("--group", group_spec)->required();
    bound_cmd->add_option("--fn", fn_spec);
    bound_cmd->add_option("--two-to-one", two_to_one, "even | odd")
        ->check(CLI::IsMember({"even", "odd"}));
    bound_cmd->add_flag("--check", check_exact, "also solve exactly and flag conflicts");

    CLI::App* cover_cmd = app.add_subcommand("cover", "cover predicate, optionally with repair");
    add_group(cover_cmd, true);
    cover_cmd->add_option("--set", set_csv, "comma-separated element indices")->required();
    cover_cmd->add_flag("--repair", repair, "run the assignment-repair loop on the cover");
    cover_cmd->add_option("--iters", iters, "repair iteration cap N, 0 = 10*q^2");
    cover_cmd->add_option("--seed", seed, "randomized repair choices");

    CLI::App* expect_cmd = app.add_subcommand("expect-bound", "expected-cover inequality table");
    expect_cmd->add_option("--q", q_arg)->required();
    expect_cmd->add_option("--v", v_arg)->required();

    CLI::App* du_cmd = app.add_subcommand("du", "differential statistics of f");
    add_group(du_cmd, true);
    du_cmd->add_option("--g", g_spec, "second function spec for the product bound check");

    CLI::App* dumin_cmd = app.add_subcommand("du-min", "minimum DU over all permutations");
    dumin_cmd->add_option("--group", group_spec)->required();
    dumin_cmd->add_option("--budget", budget, "node budget, 0 = unlimited");

    CLI::App* export_cmd = app.add_subcommand("export-lp", "write the integer program as an LP file");
    export_cmd->add_option("--model", model_name, "pres | du")->check(CLI::IsMember({"pres", "du"}));
    export_cmd->add_option("--group", group_spec)->required();
    export_cmd->add_option("--fn", fn_spec);
    export_cmd->add_flag("--with-vg", with_vg, "add image-size counting to the du model");
    export_cmd->add_option("--out", out_path, "output path")->required();

    CLI::App* verify_cmd = app.add_subcommand("verify", "check an assignment against a model");
    verify_cmd->add_option("--model", model_name, "pres | du")->check(CLI::IsMember({"pres", "du"}));
    verify_cmd->add_option("--group", group_spec)->required();
    verify_cmd->add_option("--fn", fn_spec);
    verify_cmd->add_flag("--with-vg", with_vg);
    verify_cmd->add_option("--assignment", assignment_path, "JSON file {\"vars\":{...}}")->required();

    CLI::App* repro_cmd = app.add_subcommand("repro", "recompute published table rows");
    repro_cmd->add_option("--table", table_name, "T3 | T4 | T8 | T9")->required();
    repro_cmd->add_option("--max-p", max_p, "largest prime/order to recompute");
    repro_cmd->add_option("--max-q", max_q, "alias of --max-p");
    repro_cmd->add_option("--time-budget", time_budget, "seconds before remaining rows are skipped");
    repro_cmd->add_option("--workers", workers);

    app.parse(argc, argv);

    if (pres_cmd->parsed()) {
        FunctionTable f = make_function();
        if (!dump_mf.empty()) {
            std::ofstream csv(dump_mf);
            if (!csv) throw std::runtime_error("cannot write " + dump_mf);
            csv << subtraction_table_csv(build_subtraction_table(f));
        }
        PresOptions opts;
        opts.max_k = max_k;
        opts.workers = workers;
        opts.symmetry = !no_symmetry;
        PresResult r = solve_pres_exact(f, opts);
        emit(to_json(r));
        return r.found ? 0 : 1;
    }
    if (brute_cmd->parsed()) {
        emit(json{{"schema_version", kSchemaVersion}, {"pres", pres_bruteforce_oracle(make_function())}});
        return 0;
    }
    if (greedy_cmd->parsed()) {
        FunctionTable f = make_function();
        GreedyTrace t = algorithm1(f, steps,
                                   strategy == "greedy" ? GreedyStrategy::Greedy : GreedyStrategy::Average);
        json j = to_json(t);
        j["admissible"] = check_admissible(t.final_A.cells, f);
        j["range_is_G"] = (int)range_of(t.final_A).size() == f.size();
        emit(j);
        return 0;
    }
    if (bound_cmd->parsed()) {
        GroupPtr g = Group::parse(group_spec);
        json j{{"schema_version", kSchemaVersion}};
        if (!two_to_one.empty()) j["bound"] = two_to_one_bound(g->order(), two_to_one == "odd");
        if (!fn_spec.empty()) {
            FunctionTable f = FunctionTable::parse(g, fn_spec);
            auto [lo, hi] = generic_bounds(f);
            j["lower"] = lo;
            j["upper"] = hi;
            if (check_exact) {
                PresResult r = solve_pres_exact(f);
                j["pres"] = r.value;
                if (j.contains("bound")) j["conflict"] = r.value > j["bound"].get<long long>();
            }
        }
        emit(j);
        return 0;
    }
    if (cover_cmd->parsed()) {
        FunctionTable f = make_function();
        std::vector<int> s = parse_set(set_csv);
        json j = to_json(is_cover(f, s));
        if (repair) {
            Alg2Result r = algorithm2(f, s, iters, seed);
            json jr{{"success", r.success},
                    {"iterations", r.iterations},
                    {"leftover_rows", r.leftover_rows}};
            if (r.success) jr["A"] = to_json(r.a);
            j["repair"] = jr;
            emit(j);
            return r.success ? 0 : 1;
        }
        emit(j);
        return 0;
    }
    if (expect_cmd->parsed()) {
        emit(to_json(expected_cover_bound(q_arg, v_arg), q_arg, v_arg));
        return 0;
    }
    if (du_cmd->parsed()) {
        FunctionTable f = make_function();
        json j{{"schema_version", kSchemaVersion},
               {"V", f.image_size()},
               {"u", f.uniformity()},
               {"is_permutation", f.is_permutation()},
               {"delta", f.differential_uniformity()}};
        if (!g_spec.empty()) {
            FunctionTable g2 = FunctionTable::parse(f.group(), g_spec);
            j["product_bound"] = to_json(du_product_bound_check(f, g2));
        }
        emit(j);
        return 0;
    }
    if (dumin_cmd->parsed()) {
        emit(to_json(min_du_permutation_search(Group::parse(group_spec), budget)));
        return 0;
    }
    if (export_cmd->parsed()) {
        GroupPtr g = Group::parse(group_spec);
        IpModel model;
        if (model_name == "pres") {
            model = build_pres_ip(make_function());
        } else {
            std::optional<FunctionTable> f;
            if (!fn_spec.empty()) f = FunctionTable::parse(g, fn_spec);
            model = build_du_ip(g, f ? &*f : nullptr, with_vg);
        }
        export_lp(model, out_path);
        emit(json{{"schema_version", kSchemaVersion},
                  {"out", out_path},
                  {"variables", model.vars.size()},
                  {"constraints", model.cons.size()}});
        return 0;
    }
    if (verify_cmd->parsed()) {
        GroupPtr g = Group::parse(group_spec);
        Assignment a = load_assignment(assignment_path);
        VerifyReport rep;
        if (model_name == "pres") {
            rep = verify_pres_solution(make_function(), a);
        } else {
            std::optional<FunctionTable> f;
            if (!fn_spec.empty()) f = FunctionTable::parse(g, fn_spec);
            rep = verify_du_solution(g, f ? &*f : nullptr, a, with_vg);
        }
        emit(to_json(rep));
        return rep.ok() ? 0 : 1;
    }
    if (repro_cmd->parsed()) {
        ReproLimits limits;
        limits.max_q = max_p > 0 ? max_p : max_q;
        limits.time_budget = time_budget;
        limits.workers = workers;
        ReproReport rep = repro_appendix(fixture_table_from_name(table_name), limits);
        emit(to_json(rep));
        return rep.mismatches == 0 ? 0 : 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"permutation resemblance toolkit"};
    try {
        return run(app, argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints help or the usage error
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

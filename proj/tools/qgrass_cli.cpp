#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#ifdef _OPENMP
#include <omp.h>
#endif

#include "qgrass/config.hpp"
#include "qgrass/enumerate.hpp"
#include "qgrass/errors.hpp"
#include "qgrass/families.hpp"
#include "qgrass/json_io.hpp"
#include "qgrass/qcalc.hpp"
#include "qgrass/verifier.hpp"

namespace {

using namespace qgrass;
using nlohmann::ordered_json;

// Flag bundle shared by the parameterized subcommands.
struct PointFlags {
    long n = 1, k = 1, t = 1, s = 1;
    int q = 2;
    std::optional<long> x, l;

    void attach(CLI::App* cmd, bool with_x = false, bool with_l = false) {
        cmd->add_option("--q", q, "prime-power field order")->capture_default_str();
        cmd->add_option("--n", n, "ambient dimension")->capture_default_str();
        cmd->add_option("--k", k, "member dimension")->capture_default_str();
        cmd->add_option("--t", t, "intersection threshold")->capture_default_str();
        cmd->add_option("--s", s, "violation allowance")->capture_default_str();
        if (with_x) cmd->add_option("--x", x, "evaluation point x (t <= x <= k)");
        if (with_l) cmd->add_option("--l", l, "auxiliary multiplier l");
    }

    ParamPoint point() const {
        ParamPoint p;
        p.n = n;
        p.k = k;
        p.t = t;
        p.s = s;
        p.q = q;
        p.x = x;
        p.l = l;
        return p;
    }
};

// body is always newline-terminated by its producers
void emit(const std::string& body, const std::string& out_path) {
    std::cout << body;
    if (!out_path.empty()) write_text_file(out_path, body);
}

int run(int argc, char** argv) {
    CLI::App app{"exact enumeration and formula verification for subspace families"};
    app.require_subcommand(1);

    long budget_flag = -1;
    int jobs_flag = -1;
    app.add_option("--budget", budget_flag, "max subspaces any enumeration may emit");
    app.add_option("--jobs", jobs_flag, "worker threads (0 = library default)");

    // qbinom
    auto* cmd_qbinom = app.add_subcommand("qbinom", "Gaussian binomial [a b]_q");
    long qb_a = 0, qb_b = 0;
    int qb_q = 2;
    cmd_qbinom->add_option("--a", qb_a)->required();
    cmd_qbinom->add_option("--b", qb_b)->required();
    cmd_qbinom->add_option("--q", qb_q)->capture_default_str();

    // nprime
    auto* cmd_nprime = app.add_subcommand("nprime", "counting-lemma value N'(m1,h1;m,h)");
    cmd_nprime->set_help_flag("--help", "print help"); // frees -h for the --h option
    long np_m1 = 0, np_h1 = 0, np_m = 0, np_h = 0, np_e = 0, np_l = 0;
    int np_q = 2;
    cmd_nprime->add_option("--m1", np_m1)->required();
    cmd_nprime->add_option("--h1", np_h1)->required();
    cmd_nprime->add_option("--m", np_m)->required();
    cmd_nprime->add_option("--h", np_h)->required();
    cmd_nprime->add_option("--e", np_e)->required();
    cmd_nprime->add_option("--l", np_l)->required();
    cmd_nprime->add_option("--q", np_q)->capture_default_str();

    // f-eval / g-eval
    auto* cmd_feval = app.add_subcommand("f-eval", "evaluate f1/f2/f3 exactly");
    std::string f_which;
    PointFlags f_flags;
    cmd_feval->add_option("--which", f_which)->required()->check(CLI::IsMember({"f1", "f2", "f3"}));
    f_flags.attach(cmd_feval, /*with_x=*/true, /*with_l=*/true);

    auto* cmd_geval = app.add_subcommand("g-eval", "evaluate g1/g2/g3 exactly");
    std::string g_which;
    PointFlags g_flags;
    cmd_geval->add_option("--which", g_which)->required()->check(CLI::IsMember({"g1", "g2", "g3"}));
    g_flags.attach(cmd_geval);

    // identity
    auto* cmd_identity = app.add_subcommand("identity", "check eq1 / eq66 against enumeration");
    std::string id_which;
    PointFlags id_flags;
    std::string id_out;
    bool id_timings = false;
    cmd_identity->add_option("--which", id_which)->required()->check(CLI::IsMember({"eq1", "eq66"}));
    id_flags.attach(cmd_identity);
    cmd_identity->add_option("--out", id_out, "write the certificate here");
    cmd_identity->add_flag("--timings", id_timings, "record wall-clock runtime");

    // lemma-check
    auto* cmd_lemma = app.add_subcommand("lemma-check", "run one lemma over a grid");
    std::string lm_id, lm_grid, lm_out, lm_format = "csv";
    PointFlags lm_flags;
    cmd_lemma->add_option("--id", lm_id, "lemma id (see --list)")->default_val("");
    cmd_lemma->add_option("--grid", lm_grid,
                          "grid file, 'inline' for the flag point, empty for the default grid");
    lm_flags.attach(cmd_lemma, true, true);
    cmd_lemma->add_option("--out", lm_out);
    cmd_lemma->add_option("--format", lm_format)->check(CLI::IsMember({"json", "csv"}));
    bool lm_list = false;
    cmd_lemma->add_flag("--list", lm_list, "print known lemma ids and exit");

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "list all k-subspaces of F_q^n");
    PointFlags en_flags;
    std::string en_out;
    en_flags.attach(cmd_enum);
    cmd_enum->add_option("--out", en_out, "write the family JSON here");

    // construct
    auto* cmd_construct = app.add_subcommand("construct", "build a named example pair");
    std::string cs_which, cs_out_f, cs_out_g;
    PointFlags cs_flags;
    cmd_construct->add_option("--which", cs_which)
        ->required()
        ->check(CLI::IsMember({"almost", "cover"}));
    cs_flags.attach(cmd_construct);
    cmd_construct->add_option("--out-f", cs_out_f);
    cmd_construct->add_option("--out-g", cs_out_g);

    // certify-pair
    auto* cmd_certify = app.add_subcommand("certify-pair", "certificate for a family pair");
    std::string cp_f, cp_g, cp_out;
    long cp_t = 1, cp_s = 1;
    bool cp_timings = false;
    cmd_certify->add_option("--F", cp_f)->required();
    cmd_certify->add_option("--G", cp_g)->required();
    cmd_certify->add_option("--t", cp_t)->capture_default_str();
    cmd_certify->add_option("--s", cp_s)->capture_default_str();
    cmd_certify->add_option("--out", cp_out);
    cmd_certify->add_flag("--timings", cp_timings);

    // tau
    auto* cmd_tau = app.add_subcommand("tau", "covering number and minimum covers");
    std::string tau_f, tau_out;
    long tau_t = 1;
    cmd_tau->add_option("--F", tau_f)->required();
    cmd_tau->add_option("--t", tau_t)->capture_default_str();
    cmd_tau->add_option("--out", tau_out, "write {tau, covers} JSON here");

    // closure
    auto* cmd_closure = app.add_subcommand("closure", "greedy maximal completion of a pair");
    std::string cl_f, cl_g, cl_out_f, cl_out_g;
    long cl_t = 1, cl_s = 1;
    cmd_closure->add_option("--F", cl_f)->required();
    cmd_closure->add_option("--G", cl_g)->required();
    cmd_closure->add_option("--t", cl_t)->capture_default_str();
    cmd_closure->add_option("--s", cl_s)->capture_default_str();
    cmd_closure->add_option("--out-f", cl_out_f);
    cmd_closure->add_option("--out-g", cl_out_g);

    // sequence
    auto* cmd_sequence = app.add_subcommand("sequence", "disjointness sequence trace");
    std::string sq_f, sq_g, sq_out;
    long sq_t = 1;
    cmd_sequence->add_option("--F", sq_f)->required();
    cmd_sequence->add_option("--G", sq_g)->required();
    cmd_sequence->add_option("--t", sq_t)->capture_default_str();
    cmd_sequence->add_option("--out", sq_out);

    // suite
    auto* cmd_suite = app.add_subcommand("suite", "run a named report suite");
    std::string su_name, su_out, su_format;
    bool su_timings = false, su_list = false;
    cmd_suite->add_option("--name", su_name)->default_val("");
    cmd_suite->add_option("--out", su_out);
    cmd_suite->add_option("--format", su_format)->check(CLI::IsMember({"json", "csv"}));
    cmd_suite->add_flag("--timings", su_timings);
    cmd_suite->add_flag("--list", su_list, "print known suites and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // fold CLI11's usage-error codes into 2
    }

    const Config cfg = config_from_env();
    const long budget = budget_flag >= 0 ? budget_flag : cfg.enumeration_budget;
    if (budget < 1) throw IoError("budget must be >= 1");
    const int jobs = jobs_flag >= 0 ? jobs_flag : cfg.jobs;
#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
#endif

    if (cmd_qbinom->parsed()) {
        std::cout << to_decimal(qbinom(qb_a, qb_b, qb_q)) << '\n';
        return 0;
    }

    if (cmd_nprime->parsed()) {
        std::cout << to_decimal(nprime_count(np_m1, np_h1, np_m, np_h, np_e, np_l, np_q))
                  << '\n';
        return 0;
    }

    if (cmd_feval->parsed()) {
        FWhich w = f_which == "f1" ? FWhich::f1 : f_which == "f2" ? FWhich::f2 : FWhich::f3;
        std::cout << to_decimal(f_eval(w, f_flags.point())) << '\n';
        return 0;
    }

    if (cmd_geval->parsed()) {
        GWhich w = g_which == "g1" ? GWhich::g1 : g_which == "g2" ? GWhich::g2 : GWhich::g3;
        std::cout << to_decimal(g_eval(w, g_flags.point())) << '\n';
        return 0;
    }

    if (cmd_identity->parsed()) {
        const std::string kind = id_which == "eq1" ? "eq1" : "eq66-upper";
        Certificate c = count_vs_formula(kind, id_flags.point(), {}, budget, id_timings);
        emit(certificate_to_string(c), id_out);
        return c.pass ? 0 : 1;
    }

    if (cmd_lemma->parsed()) {
        if (lm_list) {
            for (const auto& id : known_lemmas()) std::cout << id << '\n';
            return 0;
        }
        if (lm_id.empty())
            throw UnknownLemma("(none given; pass --id or --list)");
        std::vector<ParamPoint> grid;
        if (lm_grid.empty()) {
            auto it = cfg.suite_grids.find(lm_id);
            grid = it != cfg.suite_grids.end() ? it->second : default_grid(lm_id);
        } else if (lm_grid == "inline") {
            grid = {lm_flags.point()};
        } else {
            grid = load_points(lm_grid);
        }
        std::vector<LemmaVerdict> verdicts = lemma_grid_check(lm_id, grid);
        std::string body;
        if (lm_format == "json") {
            ordered_json j;
            j["lemma_id"] = lm_id;
            j["notes"] = lemma_notes(lm_id);
            ordered_json arr = ordered_json::array();
            for (const auto& v : verdicts) arr.push_back(verdict_to_json(v));
            j["verdicts"] = std::move(arr);
            body = j.dump(2) + "\n";
        } else {
            body = verdicts_to_csv(verdicts);
        }
        emit(body, lm_out);
        for (const auto& v : verdicts)
            if (v.hypothesis_met && !v.claim_holds) return 1;
        return 0;
    }

    if (cmd_enum->parsed()) {
        Ambient amb(en_flags.q, static_cast<int>(en_flags.n));
        Family fam(amb, en_flags.k, all_subspaces(amb, en_flags.k, budget));
        std::cout << fam.size() << '\n';
        if (!en_out.empty()) save_family(en_out, fam);
        return 0;
    }

    if (cmd_construct->parsed()) {
        auto which = cs_which == "almost" ? ExampleKind::almost : ExampleKind::cover;
        auto [f, g] = build_example_pair(which, cs_flags.point(), {}, budget);
        if (!cs_out_f.empty()) save_family(cs_out_f, f);
        if (!cs_out_g.empty()) save_family(cs_out_g, g);
        ordered_json j;
        j["size_f"] = f.size();
        j["size_g"] = g.size();
        std::cout << j.dump() << '\n';
        return 0;
    }

    if (cmd_certify->parsed()) {
        Family f = load_family(cp_f), g = load_family(cp_g);
        Certificate c = certify_pair(f, g, cp_t, cp_s, budget, cp_timings);
        emit(certificate_to_string(c), cp_out);
        return c.pass ? 0 : 1;
    }

    if (cmd_tau->parsed()) {
        Family f = load_family(tau_f);
        CoverResult r = tau_and_covers(f, tau_t, budget);
        std::cout << r.tau << '\n';
        if (!tau_out.empty()) {
            ordered_json j;
            j["t"] = r.t;
            j["tau"] = r.tau;
            ordered_json covers = ordered_json::array();
            for (const auto& s : r.minimal_covers) covers.push_back(subspace_to_rows(s));
            j["minimal_covers"] = std::move(covers);
            write_text_file(tau_out, j.dump(2) + "\n");
        }
        return 0;
    }

    if (cmd_closure->parsed()) {
        Family f = load_family(cl_f), g = load_family(cl_g);
        auto [cf, cg] = maximal_closure(f, g, cl_t, cl_s, budget);
        if (!cl_out_f.empty()) save_family(cl_out_f, cf);
        if (!cl_out_g.empty()) save_family(cl_out_g, cg);
        ordered_json j;
        j["size_f"] = cf.size();
        j["size_g"] = cg.size();
        j["added_f"] = cf.size() - f.size();
        j["added_g"] = cg.size() - g.size();
        std::cout << j.dump() << '\n';
        return 0;
    }

    if (cmd_sequence->parsed()) {
        Family f = load_family(sq_f), g = load_family(sq_g);
        SequenceTrace tr = disjointness_sequence(f, g, sq_t);
        bool ok = sequence_trace_valid(tr, f, g, sq_t);
        if (!sq_out.empty()) write_text_file(sq_out, trace_to_json(tr, f, g).dump(2) + "\n");
        std::cout << tr.m << '\n';
        return ok ? 0 : 1;
    }

    if (cmd_suite->parsed()) {
        if (su_list) {
            for (const auto& s : known_suites()) std::cout << s << '\n';
            return 0;
        }
        if (su_name.empty()) throw UnknownSuite("(none given; pass --name or --list)");
        SuiteSummary sum = grid_report(su_name, su_out, su_format, budget, su_timings);
        std::cout << "pass=" << sum.pass << " fail=" << sum.fail
                  << " skipped=" << sum.skipped << '\n';
        return sum.fail > 0 ? 1 : 0;
    }

    return 2; // unreachable: require_subcommand(1)
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const qgrass::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

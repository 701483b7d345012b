// Command-line front end: inspect rc-graphs, compute Schubert polynomials,
// run the insertion algorithm and its inverse, and cross-check LR
// coefficients. Results go to stdout, diagnostics to stderr.
//
// Exit codes: 0 success, 1 malformed input, 2 unsupported case (the paper's
// preconditions fail), 3 broken internal invariant (a bug; the message holds
// the witness).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rcgraph/rcgraph.hpp"

namespace {

using rcgraph::io::json;

std::vector<int> parse_csv(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int value = std::stoi(item, &pos);
        if (pos != item.size())
            throw std::invalid_argument("not a comma-separated list of integers: " + text);
        out.push_back(value);
    }
    return out;
}

rcgraph::Permutation parse_permutation(const std::string& text)
{
    return rcgraph::Permutation(parse_csv(text));
}

rcgraph::Partition parse_partition(const std::string& text)
{
    if (text.empty())
        return rcgraph::Partition{};
    return rcgraph::Partition(parse_csv(text));
}

json load_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    return j;
}

rcgraph::Graph load_graph(const std::string& path)
{
    return rcgraph::io::graph_from_json(load_json(path));
}

rcgraph::RcGraph load_rcgraph(const std::string& path)
{
    rcgraph::Graph g = load_graph(path);
    if (!rcgraph::is_rcgraph(g))
        throw std::invalid_argument(path + ": graph is not reduced");
    return rcgraph::RcGraph(g);
}

// Ambient size for oracle products; the environment variable only supplies a
// default for the --n options.
int default_ambient(int fallback)
{
    if (const char* env = std::getenv("RCGRAPH_AMBIENT_N")) {
        try {
            return std::max(fallback, std::stoi(env));
        } catch (...) {
            throw std::invalid_argument("RCGRAPH_AMBIENT_N must be an integer");
        }
    }
    return fallback;
}

void emit_trace(const rcgraph::InsertionTrace& trace)
{
    for (const rcgraph::StepRecord& rec : trace.steps)
        std::cout << rcgraph::io::to_json(rec).dump() << "\n";
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"rc-graph insertion toolkit"};
    app.require_subcommand(1);

    // perm: basic statistics of a permutation.
    std::string perm_w;
    int perm_r = 0;
    CLI::App* perm = app.add_subcommand("perm", "length, code and descent data of a permutation");
    perm->add_option("--w", perm_w, "one-line notation, comma separated")->required();
    perm->add_option("--r", perm_r, "also report r-shuffle / r-semi-shuffle data");

    // rc: structural queries on a graph.
    CLI::App* rc = app.add_subcommand("rc", "structural queries on a graph");
    rc->require_subcommand(1);
    std::string rc_graph_path;
    int rc_n = 0;
    CLI::App* rc_perm = rc->add_subcommand("permutation", "permutation and reducedness");
    rc_perm->add_option("--graph", rc_graph_path, "graph JSON file")->required();
    CLI::App* rc_word = rc->add_subcommand("word", "letters in reading order");
    rc_word->add_option("--graph", rc_graph_path, "graph JSON file")->required();
    rc_word->add_option("--n", rc_n, "staircase size (default: smallest fit)");
    CLI::App* rc_exp = rc->add_subcommand("exponent", "per-row crossing counts");
    rc_exp->add_option("--graph", rc_graph_path, "graph JSON file")->required();

    // schubert: polynomial of a permutation.
    std::string schubert_w;
    int schubert_n = 0;
    CLI::App* schubert = app.add_subcommand("schubert", "Schubert polynomial of w");
    schubert->add_option("--w", schubert_w, "one-line notation")->required();
    schubert->add_option("--n", schubert_n, "ambient size (default: support of w)");

    // insert.
    std::string ins_r_path, ins_y_path;
    int ins_r = 0;
    bool ins_trace = false, ins_render = false;
    CLI::App* ins = app.add_subcommand("insert", "insert an rc-graph Y into R");
    ins->add_option("--R", ins_r_path, "rc-graph JSON file")->required();
    ins->add_option("--Y", ins_y_path, "rc-graph JSON file of an r-shuffle")->required();
    ins->add_option("--r", ins_r, "descent position")->required();
    ins->add_flag("--trace", ins_trace, "emit one JSON record per step");
    ins->add_flag("--render", ins_render, "print the ASCII diagram after each step");

    // inverse.
    std::string inv_u_path, inv_t_path, inv_w;
    int inv_r = 0;
    bool inv_trace = false;
    CLI::App* inv = app.add_subcommand("inverse", "recover (R, Y) from (U, T)");
    inv->add_option("--U", inv_u_path, "rc-graph JSON file")->required();
    inv->add_option("--T", inv_t_path, "tableau JSON file")->required();
    inv->add_option("--w", inv_w, "starting permutation, comma separated")->required();
    inv->add_option("--r", inv_r, "descent position")->required();
    inv->add_flag("--trace", inv_trace, "emit one JSON record per step");

    // lr.
    std::string lr_w, lr_lambda, lr_method = "all";
    int lr_r = 0, lr_n = 0;
    CLI::App* lr = app.add_subcommand("lr", "generalized LR coefficients c^u_{w v(lambda,r)}");
    lr->add_option("--w", lr_w, "one-line notation")->required();
    lr->add_option("--lambda", lr_lambda, "partition, comma separated (may be empty)");
    lr->add_option("--r", lr_r, "descent position")->required();
    lr->add_option("--method", lr_method, "chains | insertion | oracle | all")
        ->check(CLI::IsMember({"chains", "insertion", "oracle", "all"}));
    lr->add_option("--n", lr_n, "ambient size (default: derived from the inputs)");

    // verify.
    std::string verify_case;
    int verify_max_perm = 4, verify_max_boxes = 4, verify_jobs = 1, verify_max_r = 3;
    CLI::App* verify = app.add_subcommand("verify", "exhaustive three-way sweeps");
    verify->add_option("--case", verify_case, "semi | hook")
        ->required()
        ->check(CLI::IsMember({"semi", "hook"}));
    verify->add_option("--max-perm-size", verify_max_perm, "sweep w over S_n for this n");
    verify->add_option("--max-boxes", verify_max_boxes, "largest hook size (hook case)");
    verify->add_option("--max-r", verify_max_r, "largest descent position");
    verify->add_option("--jobs", verify_jobs, "worker threads");

    // render.
    std::string render_graph_path;
    int render_n = 0;
    CLI::App* render = app.add_subcommand("render", "ASCII diagram of a graph");
    render->add_option("--graph", render_graph_path, "graph JSON file")->required();
    render->add_option("--n", render_n, "grid size (default: smallest staircase)");

    try {
        app.parse(argc, argv);

        if (*perm) {
            rcgraph::Permutation w = parse_permutation(perm_w);
            json out{{"perm", w.images()},
                     {"length", rcgraph::length(w)},
                     {"code", rcgraph::code(w)},
                     {"descents", rcgraph::descents(w)}};
            if (perm_r > 0) {
                out["r"] = perm_r;
                out["is_r_shuffle"] = rcgraph::is_r_shuffle(w, perm_r);
                out["is_r_semi_shuffle"] = rcgraph::is_r_semi_shuffle(w, perm_r);
                if (rcgraph::is_r_shuffle(w, perm_r))
                    out["lambda"] = rcgraph::partition_of_shuffle(w, perm_r).parts();
            }
            std::cout << out.dump() << "\n";
        } else if (*rc) {
            rcgraph::Graph g = load_graph(rc_graph_path);
            if (*rc_perm) {
                rcgraph::Permutation w = rcgraph::permutation_of(g);
                std::cout << json{{"perm", w.images()},
                                  {"length", rcgraph::length(w)},
                                  {"crossings", g.size()},
                                  {"reduced", rcgraph::is_rcgraph(g)}}
                                 .dump()
                          << "\n";
            } else if (*rc_word) {
                int n = rc_n > 0 ? rc_n : std::max(1, g.staircase_bound());
                std::cout << json{{"n", n}, {"word", rcgraph::word_of_graph(g, n)}}.dump() << "\n";
            } else {
                std::cout << json{{"exponent", rcgraph::exponent(g)}}.dump() << "\n";
            }
        } else if (*schubert) {
            rcgraph::Permutation w = parse_permutation(schubert_w);
            int n = schubert_n > 0 ? schubert_n : default_ambient(std::max(1, w.window()));
            std::cout << rcgraph::io::to_json(rcgraph::schubert_polynomial(w, n)).dump() << "\n";
        } else if (*ins) {
            rcgraph::RcGraph r_graph = load_rcgraph(ins_r_path);
            rcgraph::RcGraph y = load_rcgraph(ins_y_path);
            rcgraph::InsertionResult res = rcgraph::insert(r_graph, y, ins_r);
            if (ins_trace)
                emit_trace(res.trace);
            if (ins_render) {
                rcgraph::Graph cur = r_graph.graph().rows_at_least(ins_r);
                for (const rcgraph::StepRecord& rec : res.trace.steps) {
                    for (const rcgraph::Place& p : rec.removed)
                        cur = cur.without(p);
                    for (const rcgraph::Place& p : rec.added)
                        cur = cur.with(p);
                    std::cout << "step (" << rec.row << "," << rec.index << ") "
                              << rcgraph::to_string(rec.kind) << "\n"
                              << rcgraph::render_ascii(cur);
                }
            }
            std::cout << json{{"U", rcgraph::io::to_json(res.graph.graph())},
                              {"T", rcgraph::io::to_json(res.tableau)},
                              {"u", res.graph.permutation().images()}}
                             .dump()
                      << "\n";
        } else if (*inv) {
            rcgraph::RcGraph u = load_rcgraph(inv_u_path);
            rcgraph::TranspositionTableau t = rcgraph::io::tableau_from_json(load_json(inv_t_path));
            rcgraph::Permutation w = parse_permutation(inv_w);
            rcgraph::InverseResult res = rcgraph::inverse_insert(u, t, w, inv_r);
            if (inv_trace)
                emit_trace(res.trace);
            std::cout << json{{"R", rcgraph::io::to_json(res.r_graph.graph())},
                              {"Y", rcgraph::io::to_json(res.y.graph())}}
                             .dump()
                      << "\n";
        } else if (*lr) {
            rcgraph::Permutation w = parse_permutation(lr_w);
            rcgraph::Partition lambda = parse_partition(lr_lambda);
            int n = lr_n > 0 ? lr_n : default_ambient(rcgraph::sweep_ambient(w, lambda, lr_r));
            json results = json::array();
            if (lr_method == "all") {
                rcgraph::VerifyReport report = rcgraph::verify_triple(w, lambda, lr_r, n);
                std::cout << rcgraph::io::to_json(report).dump() << "\n";
            } else {
                rcgraph::CoefficientMap map;
                if (lr_method == "chains") {
                    map = rcgraph::count_chains(w, lambda, lr_r);
                } else if (lr_method == "insertion") {
                    map = rcgraph::lr_via_insertion(w, lambda, lr_r, n);
                } else {
                    rcgraph::SchubertExpansion e =
                        rcgraph::lr_oracle(w, rcgraph::shuffle_from_partition(lambda, lr_r));
                    for (const auto& [u, c] : e.coeffs())
                        map[u] = c;
                }
                for (const auto& [u, c] : map)
                    results.push_back(json{{"u", u.images()}, {"c", c}});
                std::cout << json{{"w", w.images()},
                                  {"lambda", lambda.parts()},
                                  {"r", lr_r},
                                  {"method", lr_method},
                                  {"results", results}}
                                 .dump()
                          << "\n";
            }
        } else if (*verify) {
            std::vector<rcgraph::SweepCase> cases =
                verify_case == "semi"
                    ? rcgraph::semi_shuffle_cases(verify_max_perm, verify_max_r)
                    : rcgraph::hook_cases(verify_max_perm, verify_max_boxes, verify_max_r);
            std::cerr << "sweeping " << cases.size() << " (w, lambda, r) cases with "
                      << verify_jobs << " job(s)\n";
            rcgraph::SweepOutcome outcome =
                rcgraph::run_sweep(cases, verify_jobs, verify_case == "hook", true);
            std::cout << json{{"case", verify_case},
                              {"cases", outcome.cases},
                              {"coefficient_sum", outcome.coefficient_sum},
                              {"round_trips", outcome.round_trips}}
                             .dump()
                      << "\n";
        } else if (*render) {
            rcgraph::Graph g = load_graph(render_graph_path);
            std::cout << rcgraph::render_ascii(g, render_n);
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // anything malformed maps to 1
    } catch (const rcgraph::invariant_error& e) {
        std::cerr << "internal invariant failure: " << e.what() << "\n";
        return 3;
    } catch (const rcgraph::unsupported_case_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "chanmaj/acceptance.hpp"
#include "chanmaj/channel.hpp"
#include "chanmaj/conditional.hpp"
#include "chanmaj/entropy.hpp"
#include "chanmaj/json_io.hpp"
#include "chanmaj/majorize.hpp"
#include "chanmaj/relative.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

struct cli_options {
    double abs_eps = 1e-9;
    double rel_eps = 1e-9;
    std::uint64_t seed = 0;
    bool pretty = false;
    unsigned jobs = 1;

    chanmaj::tolerance tol() const { return chanmaj::tolerance{abs_eps, rel_eps}; }
};

void emit(const chanmaj::json& result, const cli_options& opts,
          const chanmaj::json& certificate = {}, const chanmaj::json& diagnostics = chanmaj::json::array()) {
    chanmaj::json envelope{{"ok", true}, {"result", result}, {"diagnostics", diagnostics},
                           {"version", kVersion}};
    if (!certificate.is_null()) envelope["certificate"] = certificate;
    std::cout << (opts.pretty ? envelope.dump(2) : envelope.dump()) << "\n";
}

chanmaj::json witness_to_json(const chanmaj::majorization_witness& w) {
    using namespace chanmaj;
    if (const auto* chain = std::get_if<t_chain_witness>(&w)) {
        json steps = json::array();
        for (const auto& s : chain->steps)
            steps.push_back(json{{"i", s.i}, {"j", s.j}, {"t", s.t}});
        return json{{"kind", "t_chain"},
                    {"perm_p", chain->perm_p},
                    {"perm_q", chain->perm_q},
                    {"steps", std::move(steps)}};
    }
    if (const auto* ds = std::get_if<doubly_stochastic_witness>(&w))
        return json{{"kind", "doubly_stochastic"}, {"matrix", to_json(ds->d)}};
    const auto& gaps = std::get<ky_fan_gap_witness>(w);
    return json{{"kind", "ky_fan_gaps"}, {"gaps", gaps.gaps}};
}

int run_maj_vec(const std::string& a_path, const std::string& b_path, bool with_witness,
                const cli_options& opts) {
    using namespace chanmaj;
    const prob_vector a = parse_prob_vector(load_json_file(a_path), opts.tol());
    const prob_vector b = parse_prob_vector(load_json_file(b_path), opts.tol());
    const bool fwd = majorizes(a, b, opts.tol());
    const bool rev = majorizes(b, a, opts.tol());
    json result{{"majorizes", fwd}, {"reverse", rev}};
    json cert;
    if (with_witness && fwd)
        cert = witness_to_json(majorization_witness{witness_doubly_stochastic(a, b, opts.tol())});
    emit(result, opts, cert);
    return 0;
}

int run_maj_rel(const std::string& x_path, const std::string& y_path, const std::string& svg_path,
                const cli_options& opts) {
    using namespace chanmaj;
    const dichotomy_pair x = parse_pair(load_json_file(x_path), opts.tol());
    const dichotomy_pair y = parse_pair(load_json_file(y_path), opts.tol());
    const relative_decision d = relatively_majorizes(x, y, opts.tol());
    const lorenz_curve cx = lower_lorenz(standardize_pair(x, opts.tol()), false, opts.tol());
    const lorenz_curve cy = lower_lorenz(standardize_pair(y, opts.tol()), false, opts.tol());
    json result{{"relatively_majorizes", d.holds},
                {"lorenz_x", to_json(cx)},
                {"lorenz_y", to_json(cy)}};
    json cert;
    if (d.holds && d.transport) {
        cert = json{{"kind", "stochastic_transport"}, {"matrix", to_json(*d.transport)}};
    } else if (d.violation) {
        cert = json{{"kind", "lorenz_violation"},
                    {"a", d.violation->a},
                    {"lhs_b", d.violation->lhs_b},
                    {"rhs_b", d.violation->rhs_b}};
    }
    if (!svg_path.empty()) {
        std::ofstream out(svg_path);
        if (!out) throw std::invalid_argument("cannot write SVG file: " + svg_path);
        out << lorenz_svg(cx);
    }
    emit(result, opts, cert);
    return 0;
}

int run_maj_cond(const std::string& p_path, const std::string& q_path, const cli_options& opts) {
    using namespace chanmaj;
    const joint_dist p = parse_joint(load_json_file(p_path), opts.tol());
    const joint_dist q = parse_joint(load_json_file(q_path), opts.tol());
    const cond_decision d = conditionally_majorizes(p, q, opts.tol());
    json result{{"conditionally_majorizes", d.holds}};
    json cert;
    if (d.mixing) cert = json{{"kind", "mixing_matrix"}, {"matrix", to_json(*d.mixing)}};
    if (d.refuter) cert = json{{"kind", "refuting_s"}, {"matrix", to_json(*d.refuter)}};
    emit(result, opts, cert);
    return 0;
}

int run_maj_chan(const std::string& n_path, const std::string& m_path, bool with_witness,
                 const cli_options& opts) {
    using namespace chanmaj;
    const channel n = parse_channel(load_json_file(n_path), opts.tol());
    const channel m = parse_channel(load_json_file(m_path), opts.tol());
    const channel_decision d = channel_majorizes(n, m, opts.tol(), opts.jobs);
    json result{{"channel_majorizes", d.holds}};
    json cert;
    if (d.holds && with_witness) {
        json weights = json::array();
        for (const auto& w : d.weights) weights.push_back(w);
        cert = json{{"kind", "column_mixing_weights"}, {"weights", std::move(weights)}};
    }
    if (!d.holds && d.refuting_s) {
        cert = json{{"kind", "refuting_s"},
                    {"s", *d.refuting_s},
                    {"failing_column", d.failing_column}};
    }
    emit(result, opts, cert);
    return 0;
}

int run_std_form(const std::string& n_path, const cli_options& opts) {
    using namespace chanmaj;
    const channel n = parse_channel(load_json_file(n_path), opts.tol());
    emit(to_json(standard_form(n, opts.tol())), opts);
    return 0;
}

chanmaj::entropy_spec parse_spec(const std::string& text) {
    using chanmaj::entropy_spec;
    if (text == "shannon") return entropy_spec::shannon();
    if (text == "min") return entropy_spec::min_entropy();
    if (text == "max") return entropy_spec::max_entropy();
    if (text.rfind("renyi:", 0) == 0) return entropy_spec::renyi(std::stod(text.substr(6)));
    throw std::invalid_argument("unknown entropy spec: " + text);
}

int run_entropy(const std::string& spec_text, const std::string& ext, const std::string& n_path,
                const cli_options& opts) {
    using namespace chanmaj;
    const channel n = parse_channel(load_json_file(n_path), opts.tol());
    const entropy_spec spec = parse_spec(spec_text);
    double value = 0.0;
    json diagnostics = json::array();
    if (ext == "max") {
        value = channel_entropy_max_ext(n, spec, opts.tol());
    } else if (ext == "min") {
        if (spec.id != entropy_spec::kind::shannon)
            throw std::invalid_argument("--ext min is implemented for --spec shannon only");
        value = channel_entropy_min_ext_shannon(n, opts.tol());
        diagnostics.push_back("single-copy value; a lower bound for the maximal extension");
    } else if (ext == "choi") {
        value = choi_entropy(n);
        diagnostics.push_back("not invariant on equivalence classes; not a channel entropy");
    } else if (ext == "kl-rand") {
        if (spec.id != entropy_spec::kind::shannon)
            throw std::invalid_argument("--ext kl-rand is defined with the KL divergence (shannon)");
        value = kl_randomizing_entropy(n, opts.tol());
    } else {
        throw std::invalid_argument("unknown extension: " + ext);
    }
    emit(chanmaj::json{{"value_bits", value}}, opts, {}, diagnostics);
    return 0;
}

int run_game_chan(const std::string& n_path, const std::string& t_path, const cli_options& opts) {
    using namespace chanmaj;
    const channel n = parse_channel(load_json_file(n_path), opts.tol());
    const json jt = load_json_file(t_path);
    if (!jt.contains("ell") || !jt.contains("t"))
        throw std::invalid_argument("game file: needs keys \"ell\" and \"t\"");
    const auto ell = jt.at("ell").get<std::size_t>();
    const vec flat = jt.at("t").get<vec>();
    if (ell == 0 || flat.size() % ell != 0)
        throw std::invalid_argument("game file: \"t\" length must be a multiple of \"ell\"");
    const game_spec g(ell, flat.size() / ell, prob_vector(flat, opts.tol()));
    emit(json{{"payoff", t_game_payoff(n, g, opts.tol())}}, opts);
    return 0;
}

int run_game_cond(const std::string& p_path, const std::string& t_path, const cli_options& opts) {
    using namespace chanmaj;
    const joint_dist p = parse_joint(load_json_file(p_path), opts.tol());
    const json jt = load_json_file(t_path);
    if (!jt.contains("T")) throw std::invalid_argument("game file: needs key \"T\"");
    mat t;
    for (const auto& row : jt.at("T")) t.push_back(row.get<vec>());
    const cond_game g = validate_cond_game(std::move(t), opts.tol());
    emit(json{{"payoff", cond_game_payoff(p, g, opts.tol())}}, opts);
    return 0;
}

int run_bounds(const std::vector<std::string>& paths, const cli_options& opts) {
    using namespace chanmaj;
    std::vector<prob_vector> a;
    for (const auto& path : paths) a.push_back(parse_prob_vector(load_json_file(path), opts.tol()));
    emit(json{{"lower", optimal_lower_bound(a, opts.tol()).entries()},
              {"upper", optimal_upper_bound(a, opts.tol()).entries()}},
         opts);
    return 0;
}

int run_selftest(bool fast) {
    const auto results = chanmaj::acceptance::run_all(fast);
    std::size_t failed = 0;
    for (const auto& r : results) {
        std::printf("%-4s %-45s %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
        if (!r.pass) ++failed;
    }
    std::printf("%zu/%zu criteria passed\n", results.size() - failed, results.size());
    return failed == 0 ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Majorization decisions and channel entropies for classical channels"};
    app.require_subcommand(1);
    cli_options opts;
    app.add_option("--abs-eps", opts.abs_eps, "absolute tolerance (default 1e-9)");
    app.add_option("--rel-eps", opts.rel_eps, "relative tolerance (default 1e-9)");
    app.add_option("--seed", opts.seed, "seed for randomized helpers");
    app.add_option("--jobs", opts.jobs, "parallel LP solves for per-column decisions");
    app.add_flag("--pretty", opts.pretty, "multi-line JSON output");

    std::string path_a, path_b, svg_path, spec_text, ext_text, game_path;
    std::vector<std::string> bound_paths;
    bool with_witness = false;
    bool fast = false;

    auto* maj = app.add_subcommand("maj", "majorization decisions");
    maj->require_subcommand(1);
    auto* maj_vec = maj->add_subcommand("vec", "probability vector majorization");
    maj_vec->add_option("A", path_a)->required();
    maj_vec->add_option("B", path_b)->required();
    maj_vec->add_flag("--witness", with_witness, "emit a doubly stochastic witness");
    auto* maj_rel = maj->add_subcommand("rel", "relative majorization of pairs");
    maj_rel->add_option("X", path_a)->required();
    maj_rel->add_option("Y", path_b)->required();
    maj_rel->add_option("--lorenz", svg_path, "write the lower Lorenz curve of X as SVG");
    auto* maj_cond = maj->add_subcommand("cond", "conditional majorization of joints");
    maj_cond->add_option("P", path_a)->required();
    maj_cond->add_option("Q", path_b)->required();
    auto* maj_chan = maj->add_subcommand("chan", "channel majorization");
    maj_chan->add_option("N", path_a)->required();
    maj_chan->add_option("M", path_b)->required();
    maj_chan->add_flag("--witness", with_witness, "emit per-column mixing weights");

    auto* std_form_cmd = app.add_subcommand("std-form", "standard form of a channel");
    std_form_cmd->add_option("N", path_a)->required();

    auto* entropy_cmd = app.add_subcommand("entropy", "channel entropy extensions");
    entropy_cmd->add_option("--spec", spec_text, "shannon|min|max|renyi:alpha")->required();
    entropy_cmd->add_option("--ext", ext_text, "max|min|choi|kl-rand")->required();
    entropy_cmd->add_option("N", path_a)->required();

    auto* game = app.add_subcommand("game", "game payoffs");
    game->require_subcommand(1);
    auto* game_chan = game->add_subcommand("chan", "t-game on a channel");
    game_chan->add_option("N", path_a)->required();
    game_chan->add_option("--t", game_path, "joint (w,k) game file")->required();
    auto* game_cond = game->add_subcommand("cond", "conditional T-game on a joint");
    game_cond->add_option("P", path_a)->required();
    game_cond->add_option("--T", game_path, "substochastic game matrix file")->required();

    auto* bounds_cmd = app.add_subcommand("bounds", "optimal lower/upper bound vectors");
    bounds_cmd->add_option("vectors", bound_paths, "vector files")->required()->expected(-1);

    auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance suite");
    selftest_cmd->add_flag("--fast", fast, "reduced randomized instance counts");

    CLI11_PARSE(app, argc, argv);

    try {
        if (maj_vec->parsed()) return run_maj_vec(path_a, path_b, with_witness, opts);
        if (maj_rel->parsed()) return run_maj_rel(path_a, path_b, svg_path, opts);
        if (maj_cond->parsed()) return run_maj_cond(path_a, path_b, opts);
        if (maj_chan->parsed()) return run_maj_chan(path_a, path_b, with_witness, opts);
        if (std_form_cmd->parsed()) return run_std_form(path_a, opts);
        if (entropy_cmd->parsed()) return run_entropy(spec_text, ext_text, path_a, opts);
        if (game_chan->parsed()) return run_game_chan(path_a, game_path, opts);
        if (game_cond->parsed()) return run_game_cond(path_a, game_path, opts);
        if (bounds_cmd->parsed()) return run_bounds(bound_paths, opts);
        if (selftest_cmd->parsed()) return run_selftest(fast);
    } catch (const std::invalid_argument& e) {
        std::cerr << chanmaj::json{{"ok", false}, {"error", e.what()}, {"version", kVersion}}.dump()
                  << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << chanmaj::json{{"ok", false}, {"error", e.what()}, {"version", kVersion}}.dump()
                  << "\n";
        return 2;
    }
    return 1;
}

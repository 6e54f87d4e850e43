// combid: command-line front end for the identity checkers.
//
// Exit codes: 0 PASS, 1 FAIL, 2 input or usage error, 3 cap exceeded.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif
#include <nlohmann/json.hpp>

#include <combid/combid.hpp>
#include <combid/io.hpp>

using namespace combid;
using ojson = nlohmann::ordered_json;

namespace {

enum Exit { exit_pass = 0, exit_fail = 1, exit_input = 2, exit_cap = 3 };

struct Report {
    std::string command;
    std::string digest;
    std::string mode = "rational";
    std::vector<std::pair<std::string, std::string>> values;
    ojson details = ojson::object();
    std::string verdict = "PASS";

    template <class T>
    void value(std::string name, const T &v)
    {
        values.emplace_back(std::move(name), to_string(v));
    }

    // Records a check; any false check turns the verdict to FAIL.
    void check(const std::string &name, bool ok)
    {
        details[name] = ok;
        if (!ok)
            verdict = "FAIL";
    }
};

class Digest {
public:
    void add(std::string_view s)
    {
        for (unsigned char c : s) {
            h_ ^= c;
            h_ *= 0x100000001b3ULL;
        }
        h_ ^= 0xff;
        h_ *= 0x100000001b3ULL;
    }

    std::string hex() const
    {
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h_));
        return buf;
    }

private:
    std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

struct Inputs {
    Digest digest;

    nlohmann::json load(const std::string &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw input_error("cannot read '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        const std::string text = ss.str();
        digest.add(text);
        return io::parse_json(text);
    }
};

std::string mode_name(Mode m) { return m == Mode::rational ? "rational" : "symbolic"; }

template <class T>
void matrix_values(Report &rep, const std::string &name, const Matrix<T> &m)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            rep.value(name + "[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]", m(i, j));
}

void print_text(const Report &rep, std::ostream &out)
{
    std::vector<std::pair<std::string, std::string>> lines{
        {"command", rep.command}, {"digest", rep.digest}, {"mode", rep.mode}};
    for (const auto &v : rep.values)
        lines.push_back(v);
    for (const auto &[k, v] : rep.details.items())
        lines.emplace_back(k, v.is_string() ? v.get<std::string>() : v.dump());
    lines.emplace_back("verdict", rep.verdict);
    std::size_t width = 0;
    for (const auto &l : lines)
        width = std::max(width, l.first.size());
    for (const auto &[k, v] : lines)
        out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
}

void print_json(const Report &rep, std::ostream &out)
{
    ojson j;
    j["command"] = rep.command;
    j["inputs_digest"] = rep.digest;
    j["mode"] = rep.mode;
    ojson values = ojson::array();
    for (const auto &[k, v] : rep.values)
        values.push_back({{"name", k}, {"value", v}});
    j["values"] = values;
    j["verdict"] = rep.verdict;
    j["details"] = rep.details;
    out << j.dump(2) << '\n';
}

struct Options {
    std::string graph, matrix, rhs;
    std::vector<std::string> matrices;
    std::size_t r = 0;
    std::string sources, sinks, coeffs;
    std::vector<std::size_t> verify_identity;
    bool permanent = false;
    bool pie = false;
    bool json = false;
};

// --- subcommands ------------------------------------------------------------

template <class T>
void matrix_form(Report &rep, const std::string &cmd, const Matrix<T> &m)
{
    if (cmd == "det") {
        rep.value("det", det(m));
    } else if (cmd == "per") {
        rep.value("per", per(m));
    } else {
        const auto cp = charpoly(m);
        for (std::size_t k = 0; k < cp.size(); ++k)
            rep.value("coeff[x^" + std::to_string(cp.size() - 1 - k) + "]", cp[k]);
    }
}

void run_matrix_form(Report &rep, Inputs &in, const std::string &cmd, const Options &o)
{
    auto m = io::read_matrix(in.load(o.matrix));
    const Mode mode = io::unify_modes({&m.entries});
    rep.mode = mode_name(mode);
    if (mode == Mode::rational)
        matrix_form(rep, cmd, io::to_matrix<Rational>(m));
    else
        matrix_form(rep, cmd, io::to_matrix<MPoly>(m));
}

template <class T>
void newton_graph(Report &rep, const Digraph<T> &g, std::size_t r)
{
    rep.value("c_" + std::to_string(r), closed_walk_sum(g, r));
    for (std::size_t k = 1; k <= r; ++k)
        rep.value("l_" + std::to_string(k), linear_sub_signed_sum(g, k));
    const T res = newton_residual(g, r);
    rep.value("residual", res);
    rep.check("residual_zero", is_zero(res));
}

template <class T>
void newton_coeffs(Report &rep, const std::vector<T> &e, std::size_t r)
{
    const auto c = newton_corollary_check(e, r);
    for (std::size_t k = 0; k < c.power_sums.size(); ++k)
        rep.value("p_" + std::to_string(k + 1), c.power_sums[k]);
    rep.check("coefficients_match", c.coefficients_match());
    rep.check("residuals_vanish", c.residuals_vanish());
}

void run_newton(Report &rep, Inputs &in, const Options &o)
{
    if (o.r == 0)
        throw input_error("newton needs --r >= 1");
    if (!o.graph.empty() == !o.coeffs.empty())
        throw input_error("newton needs exactly one of --graph or --coeffs");
    if (!o.graph.empty()) {
        auto g = io::read_digraph(in.load(o.graph));
        const Mode mode = io::unify_modes({&g.weights});
        rep.mode = mode_name(mode);
        if (mode == Mode::rational)
            newton_graph(rep, io::to_digraph<Rational>(g), o.r);
        else
            newton_graph(rep, io::to_digraph<MPoly>(g), o.r);
    } else {
        auto e = io::parse_literal_list(o.coeffs);
        const Mode mode = io::unify_modes({&e});
        rep.mode = mode_name(mode);
        if (mode == Mode::rational)
            newton_coeffs(rep, io::weights_as<Rational>(e), o.r);
        else
            newton_coeffs(rep, io::weights_as<MPoly>(e), o.r);
    }
}

template <class T>
void involution(Report &rep, const Digraph<T> &g, std::size_t r)
{
    const auto v = verify_theorem_proof(g, r);
    rep.details["pairs"] = v.total_pairs;
    rep.details["good_pairs"] = v.good_pairs;
    rep.details["bad_pairs"] = v.bad_pairs;
    rep.value("total_weight", v.total_weight);
    rep.value("good_weight", v.good_weight);
    rep.value("l_" + std::to_string(r), v.signed_sum);
    rep.check("involution", v.involution_ok);
    rep.check("all_bad_beyond_n", v.all_bad_ok);
    rep.check("good_weight_matches", v.good_ok);
    rep.check("cancellation", v.cancellation_ok);
    if (!v.failures.empty())
        rep.details["first_failure"] = v.failures.front();
}

void run_involution(Report &rep, Inputs &in, const Options &o)
{
    auto g = io::read_digraph(in.load(o.graph));
    const Mode mode = io::unify_modes({&g.weights});
    rep.mode = mode_name(mode);
    if (mode == Mode::rational)
        involution(rep, io::to_digraph<Rational>(g), o.r);
    else
        involution(rep, io::to_digraph<MPoly>(g), o.r);
}

template <class T>
void lgv(Report &rep, const Digraph<T> &g, const Options &o)
{
    const auto src = io::parse_vertex_list(o.sources);
    const auto snk = io::parse_vertex_list(o.sinks);
    if (o.permanent) {
        const auto p = per_check(g, src, snk);
        matrix_values(rep, "path_matrix", p.path_matrix);
        rep.value("per", p.per);
        rep.value("system_sum", p.system_sum);
        rep.details["systems"] = p.systems;
        rep.check("per_equals_system_sum", p.ok());
    } else {
        const auto l = lgv_check(g, src, snk);
        matrix_values(rep, "path_matrix", l.path_matrix);
        rep.value("det", l.det);
        rep.value("vd_signed_sum", l.vd_signed_sum);
        rep.value("all_signed_sum", l.all_signed_sum);
        rep.details["vd_systems"] = l.vd_systems;
        rep.details["systems"] = l.all_systems;
        rep.check("det_equals_vd_sum", l.det == l.vd_signed_sum);
        rep.check("det_equals_all_sum", l.det == l.all_signed_sum);
    }
}

void run_lgv(Report &rep, Inputs &in, const Options &o)
{
    auto g = io::read_digraph(in.load(o.graph));
    const Mode mode = io::unify_modes({&g.weights});
    rep.mode = mode_name(mode);
    if (mode == Mode::rational)
        lgv(rep, io::to_digraph<Rational>(g), o);
    else
        lgv(rep, io::to_digraph<MPoly>(g), o);
}

void run_cramer(Report &rep, Inputs &in, const Options &o)
{
    if (!o.verify_identity.empty()) {
        const std::size_t n = o.verify_identity[0];
        const std::size_t k = o.verify_identity[1];
        if (k < 1 || k > n)
            throw input_error("--verify-identity needs 1 <= k <= n");
        rep.mode = "symbolic";
        const auto c = verify_cramer_identity(n, k - 1);
        rep.value("det_path_matrix", c.det_path_matrix);
        rep.value("expected", c.expected);
        rep.value("difference", c.difference);
        rep.details["vd_systems"] = c.vd_systems;
        rep.check("identity", c.difference.is_zero());
        rep.check("vd_sum_equals_expected", c.vd_signed_sum == c.expected);
        rep.check("factorization", c.factorization_ok);
        return;
    }
    if (o.matrix.empty() || o.rhs.empty())
        throw input_error("cramer needs --matrix and --rhs, or --verify-identity n k");
    auto a = io::read_matrix(in.load(o.matrix));
    auto b = io::read_vector(in.load(o.rhs));
    if (io::unify_modes({&a.entries, &b}) != Mode::rational)
        throw input_error("cramer solving needs rational entries");
    const auto x = cramer_solve({io::to_matrix<Rational>(a), io::weights_as<Rational>(b)});
    for (std::size_t j = 0; j < x.size(); ++j)
        rep.value(unknown_name(j), x[j]);
    rep.check("solves_system", true);
}

template <class T>
void sumident(Report &rep, const std::vector<Matrix<T>> &s, const Options &o)
{
    const std::size_t n = s.front().rows();
    const bool hypothesis = s.size() >= n + 1;
    rep.details["n"] = n;
    rep.details["count"] = s.size();
    rep.details["hypothesis"] = hypothesis;
    if (o.permanent) {
        const T v = alternating_sum_per(s);
        rep.value("alternating_per", v);
        if (hypothesis)
            rep.check("per_sum_zero", is_zero(v));
    } else {
        const T v = alternating_sum_det(s);
        rep.value("alternating_det", v);
        rep.value("alternating_det_theorem_sign", alternating_sum_det(s, SignConvention::alternating));
        if (hypothesis)
            rep.check("det_sum_zero", is_zero(v));
    }
    if (o.pie) {
        const auto p = pie_decomposition_check(s);
        rep.value("all_boxes_signed", p.all_boxes_signed);
        rep.value("all_boxes_unsigned", p.all_boxes_unsigned);
        rep.details["systems"] = p.systems;
        rep.details["all_boxes_systems"] = p.all_boxes_systems;
        rep.check("path_matrix", p.path_matrix_ok);
        rep.check("confined_det", p.confined_det_ok);
        rep.check("confined_per", p.confined_per_ok);
        rep.check("inclusion_exclusion", p.pie_ok);
        rep.check("all_boxes_class_empty", p.empty_class_ok());
    }
}

void run_sumident(Report &rep, Inputs &in, const Options &o)
{
    std::vector<io::MatrixInput> ms;
    for (const auto &path : o.matrices)
        ms.push_back(io::read_matrix(in.load(path)));
    std::vector<std::vector<Weight> *> groups;
    for (auto &m : ms)
        groups.push_back(&m.entries);
    const Mode mode = io::unify_modes(groups);
    rep.mode = mode_name(mode);
    auto convert = [&]<class T>() {
        std::vector<Matrix<T>> s;
        for (const auto &m : ms)
            s.push_back(io::to_matrix<T>(m));
        sumident(rep, s, o);
    };
    if (mode == Mode::rational)
        convert.template operator()<Rational>();
    else
        convert.template operator()<MPoly>();
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact checks of combinatorial linear-algebra identities"};
    app.require_subcommand(1);
    Options o;

    auto json_flag = [&](CLI::App *sub) { sub->add_flag("--json", o.json, "Print the report as JSON"); };

    std::vector<CLI::App *> subs;
    for (const char *name : {"det", "per", "charpoly"}) {
        auto *s = app.add_subcommand(name, std::string(name) + " of a square matrix");
        s->add_option("--matrix", o.matrix, "Matrix JSON file")->required();
        json_flag(s);
        subs.push_back(s);
    }

    auto *newton = app.add_subcommand("newton", "Newton identity residual on a digraph, or power sums from coefficients");
    newton->add_option("--graph", o.graph, "Digraph JSON file");
    newton->add_option("--coeffs", o.coeffs, "Comma-separated e_1..e_n");
    newton->add_option("--r", o.r, "Walk length")->required();
    json_flag(newton);
    subs.push_back(newton);

    auto *inv = app.add_subcommand("involution", "Exhaustive check of the sign-reversing involution");
    inv->add_option("--graph", o.graph, "Digraph JSON file")->required();
    inv->add_option("--r", o.r, "Walk length")->required();
    json_flag(inv);
    subs.push_back(inv);

    auto *lgv = app.add_subcommand("lgv", "Path matrix determinant against path systems");
    lgv->add_option("--graph", o.graph, "Acyclic digraph JSON file")->required();
    lgv->add_option("--sources", o.sources, "Comma-separated source vertices")->required();
    lgv->add_option("--sinks", o.sinks, "Comma-separated sink vertices")->required();
    lgv->add_flag("--permanent", o.permanent, "Check the permanent instead");
    json_flag(lgv);
    subs.push_back(lgv);

    auto *cramer = app.add_subcommand("cramer", "Solve A x = b, or verify the digraph identity");
    cramer->add_option("--matrix", o.matrix, "Coefficient matrix JSON file");
    cramer->add_option("--rhs", o.rhs, "Right-hand side JSON file");
    cramer->add_option("--verify-identity", o.verify_identity, "n k (1 <= k <= n)")->expected(2);
    json_flag(cramer);
    subs.push_back(cramer);

    auto *sum = app.add_subcommand("sumident", "Alternating subset sums of det or per");
    sum->add_option("--matrices", o.matrices, "Matrix JSON files")->required()->expected(1, -1);
    sum->add_flag("--permanent", o.permanent, "Use the permanent");
    sum->add_flag("--pie", o.pie, "Run the inclusion-exclusion decomposition check");
    json_flag(sum);
    subs.push_back(sum);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_input;
    }

    const CLI::App *active = app.get_subcommands().front();
    const std::string cmd = active->get_name();

    Report rep;
    Inputs in;
    rep.command = cmd;
    for (int i = 2; i < argc; ++i)
        rep.command += std::string(" ") + argv[i];
    in.digest.add(cmd);
    in.digest.add(std::to_string(o.r) + "|" + o.sources + "|" + o.sinks + "|" + o.coeffs + "|" +
                  std::to_string(o.permanent) + std::to_string(o.pie));
    for (auto v : o.verify_identity)
        in.digest.add(std::to_string(v));

    int code = exit_pass;
    try {
        if (cmd == "det" || cmd == "per" || cmd == "charpoly")
            run_matrix_form(rep, in, cmd, o);
        else if (cmd == "newton")
            run_newton(rep, in, o);
        else if (cmd == "involution")
            run_involution(rep, in, o);
        else if (cmd == "lgv")
            run_lgv(rep, in, o);
        else if (cmd == "cramer")
            run_cramer(rep, in, o);
        else
            run_sumident(rep, in, o);
        code = rep.verdict == "PASS" ? exit_pass : exit_fail;
    } catch (const singular_matrix &e) {
        rep.verdict = "ERROR";
        rep.details["error"] = e.what();
        code = exit_input;
    } catch (const cap_exceeded &e) {
        rep.verdict = "ERROR";
        rep.details["error"] = std::string("cap exceeded: ") + e.what();
        code = exit_cap;
    } catch (const input_error &e) {
        rep.verdict = "ERROR";
        rep.details["error"] = e.what();
        code = exit_input;
    } catch (const std::logic_error &e) {
        rep.verdict = "FAIL";
        rep.details["error"] = e.what();
        code = exit_fail;
    }
    rep.digest = in.digest.hex();

    if (o.json)
        print_json(rep, std::cout);
    else
        print_text(rep, std::cout);
    if (rep.details.contains("error"))
        std::cerr << "error: " << rep.details["error"].get<std::string>() << '\n';
    return code;
}

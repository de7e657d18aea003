#include "knotshake/cli.hpp"
#include "knotshake/json_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

namespace knotshake {

namespace {

struct Options {
    std::string expr;
    long n = 2;
    long k = 1;
    long g = 0;
    long h = 0;
    std::optional<long> genus;
    long cap = 64;
    std::string resolution;
    std::string file;
    bool fail_on_obstructed = false;
    bool averaged = false;
    bool inertia = false;
    unsigned parallel = 1;
};

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

json signatures_json(const InvariantCarrier& c, long n)
{
    json sigs = json::array();
    for (long k = 0; k <= n / 2; ++k)
        sigs.push_back({{"k", k}, {"sigma", c.signature(RootOfUnity(k, n))}});
    return sigs;
}

int cmd_invariants(const Options& o, std::ostream& out)
{
    const KnotExprPtr k = parse_knot_expr(o.expr);
    const InvariantCarrier c = carrier_of(*k);
    emit(out, {{"expr", to_string(*k)},
               {"delta", to_json(c.delta())},
               {"arf", arf(c).bit},
               {"n", o.n},
               {"branched_order", to_json(branched_cover_order(c, o.n))},
               {"signatures", signatures_json(c, o.n)}});
    return exit_code::ok;
}

int cmd_shake(const Options& o, std::ostream& out)
{
    const ShakeReport r = shake_slice_report(*parse_knot_expr(o.expr), o.n);
    emit(out, to_json(r));
    return o.fail_on_obstructed && !r.verdict ? exit_code::obstructed : exit_code::ok;
}

int cmd_signature(const Options& o, std::ostream& out)
{
    const KnotExprPtr k = parse_knot_expr(o.expr);
    const InvariantCarrier c = carrier_of(*k);
    const RootOfUnity w(o.k, o.n);
    json j = {{"k", o.k}, {"n", o.n}, {"sigma", c.signature(w)}};
    const SeifertMatrix* v = c.matrix();
    if (o.inertia && !v)
        throw DomainError("inertia needs a Seifert matrix; this expression is formula backed");
    if (o.inertia)
        j["inertia"] = to_json(tl_inertia(*v, w.reduced()));
    if (o.averaged)
        j["averaged"] = to_json(tl_signature_averaged(c, w));
    emit(out, j);
    return exit_code::ok;
}

int cmd_shaking_matrix(const Options& o, std::ostream& out)
{
    const SeifertMatrix v = seifert_matrix_of(*parse_knot_expr(o.expr));
    emit(out, {{"k", o.k}, {"n", o.n}, {"matrix", to_json(shaking_matrix(v, o.k, o.n).matrix())}});
    return exit_code::ok;
}

int cmd_witness(const Options& o, std::ostream& out)
{
    const SeifertMatrix v = seifert_matrix_of(*parse_knot_expr(o.expr));
    emit(out, to_json(shake1_genus_witness(v, o.g, o.h)));
    return exit_code::ok;
}

int cmd_bounds(const Options& o, std::ostream& out)
{
    const KnotExprPtr k = parse_knot_expr(o.expr);
    const InvariantCarrier c = carrier_of(*k);
    ShakingBounds b;
    if (o.genus) {
        const GenusWitness w = shake1_genus_witness(seifert_matrix_of(*k), *o.genus, 0);
        b = shaking_number_bounds(c, w, o.cap);
    } else {
        b = shaking_number_bounds(c, std::nullopt, o.cap);
    }
    emit(out, {{"lower", b.lower}, {"upper", b.upper ? json(*b.upper) : json(nullptr)}});
    return exit_code::ok;
}

int cmd_casson_gordon(const Options& o, std::ostream& out)
{
    emit(out, {{"value", to_json(casson_gordon_sigma(*parse_knot_expr(o.expr), o.n, o.k).value)}});
    return exit_code::ok;
}

int cmd_multisig(const Options& o, std::ostream& out)
{
    std::ifstream in(o.file);
    if (!in)
        throw DomainError("cannot open form file: " + o.file);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error&) {
        throw DomainError("malformed form file: " + o.file);
    }
    const GroupRingForm f = group_ring_form_from_json(j);
    const Multisignature m = multisignature(f);
    emit(out, {{"n", f.n()}, {"alpha", m.alpha}, {"l4s", l4s_coordinates(m)}});
    return exit_code::ok;
}

int cmd_jump(const Options& o, std::ostream& out)
{
    const auto res = parse_rational(o.resolution);
    if (!res)
        throw DomainError("malformed resolution: " + o.resolution);
    const auto b = first_jump_bracket(carrier_of(*parse_knot_expr(o.expr)), *res);
    emit(out, {{"interval", b ? json::array({to_json(b->first), to_json(b->second)}) : json(nullptr)}});
    return exit_code::ok;
}

int cmd_parse(const Options& o, std::ostream& out)
{
    emit(out, {{"expr", to_string(*parse_knot_expr(o.expr))}});
    return exit_code::ok;
}

std::string batch_line(const std::string& line)
{
    json result;
    int status = exit_code::ok;
    try {
        const json rec = json::parse(line);
        if (!rec.is_object() || !rec.contains("command") || !rec["command"].is_string())
            throw DomainError("batch record needs a \"command\" string");
        const std::string command = rec["command"].get<std::string>();
        if (command == "batch")
            throw DomainError("nested batch records are not allowed");
        std::vector<std::string> args{command};
        if (rec.contains("expr")) {
            if (!rec["expr"].is_string())
                throw DomainError("batch \"expr\" must be a string");
            args.push_back(rec["expr"].get<std::string>());
        }
        if (rec.contains("params")) {
            for (const auto& [key, value] : rec["params"].items()) {
                if (value.is_boolean()) {
                    if (value.get<bool>())
                        args.push_back("--" + key);
                } else {
                    args.push_back("--" + key);
                    args.push_back(value.is_string() ? value.get<std::string>() : value.dump());
                }
            }
        }
        std::ostringstream out, err;
        status = run_command(args, out, err);
        const std::string text = out.str();
        if (text.empty())
            result = {{"error", err.str()}};
        else
            result = json::parse(text);
    } catch (const json::parse_error& e) {
        status = exit_code::usage;
        result = {{"error", std::string("malformed batch record: ") + e.what()}};
    } catch (const std::exception& e) {
        status = exit_code::usage;
        result = {{"error", e.what()}};
    }
    return json{{"status", status}, {"result", result}}.dump();
}

int cmd_batch(const Options& o, std::ostream& out)
{
    std::ifstream in(o.file);
    if (!in)
        throw DomainError("cannot open batch file: " + o.file);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);)
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            lines.push_back(line);

    std::vector<std::string> results(lines.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < lines.size();)
            results[i] = batch_line(lines[i]);
    };
    const std::size_t width = std::clamp<std::size_t>(o.parallel, 1, std::max<std::size_t>(lines.size(), 1));
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < width; ++w)
        pool.emplace_back(worker);
    worker();
    pool.clear();

    for (const std::string& r : results)
        out << r << '\n';
    return exit_code::ok;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Knot invariants and shake-slice obstructions", "knotshake"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    Options o;

    auto with_expr = [&](CLI::App* sub) {
        sub->add_option("expr", o.expr, "Knot expression")->required();
        return sub;
    };

    auto* invariants = with_expr(app.add_subcommand("invariants", "Alexander polynomial, Arf, cover order, signatures"));
    invariants->add_option("--n", o.n, "Root of unity order")->check(CLI::PositiveNumber);

    auto* shake = with_expr(app.add_subcommand("shake", "Three-condition Z/n-shake slice test"));
    shake->add_option("--n", o.n)->required();
    shake->add_flag("--fail-on-obstructed", o.fail_on_obstructed, "Exit 3 when the verdict is false");

    auto* signature = with_expr(app.add_subcommand("signature", "Tristram-Levine signature at zeta_n^k"));
    signature->add_option("--k", o.k)->required();
    signature->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
    signature->add_flag("--averaged", o.averaged, "Also report the averaged signature");
    signature->add_flag("--inertia", o.inertia, "Also report the inertia of the form");

    auto* shaking = with_expr(app.add_subcommand("shaking-matrix", "Seifert matrix of the (k, n) shaking"));
    shaking->add_option("--k", o.k)->required();
    shaking->add_option("--n", o.n)->required();

    auto* witness = with_expr(app.add_subcommand("witness", "Genus-h slice surface witness"));
    witness->add_option("--g", o.g)->required();
    witness->add_option("--h", o.h)->required();

    auto* bounds = with_expr(app.add_subcommand("bounds", "Bounds on the 1-shaking number"));
    bounds->add_option("--g", o.genus, "Genus with an h = 0 witness");
    bounds->add_option("--cap", o.cap, "Largest sampled root of unity order")->check(CLI::PositiveNumber);

    auto* cg = with_expr(app.add_subcommand("casson-gordon", "Casson-Gordon signature of n-surgery"));
    cg->add_option("--n", o.n)->required();
    cg->add_option("--k", o.k)->required();

    auto* multisig = app.add_subcommand("multisig", "Multisignature of a group-ring form");
    multisig->add_option("--form", o.file, "Form file")->required();

    auto* jump = with_expr(app.add_subcommand("jump", "Bracket the first signature jump"));
    jump->add_option("--resolution", o.resolution, "Bracket width p/q")->required();

    auto* parse = with_expr(app.add_subcommand("parse", "Canonical form of a knot expression"));

    auto* batch = app.add_subcommand("batch", "Run JSON-lines records");
    batch->add_option("file", o.file)->required();
    batch->add_option("--parallel", o.parallel, "Worker count")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_code::ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return exit_code::usage;
    }

    const std::pair<CLI::App*, int (*)(const Options&, std::ostream&)> table[] = {
        {invariants, cmd_invariants}, {shake, cmd_shake},       {signature, cmd_signature},
        {shaking, cmd_shaking_matrix}, {witness, cmd_witness},  {bounds, cmd_bounds},
        {cg, cmd_casson_gordon},      {multisig, cmd_multisig}, {jump, cmd_jump},
        {parse, cmd_parse},           {batch, cmd_batch},
    };
    try {
        for (const auto& [sub, fn] : table)
            if (sub->parsed())
                return fn(o, out);
    } catch (const ParseError& e) {
        emit(out, {{"error", e.what()}, {"offset", e.offset()}});
        return exit_code::usage;
    } catch (const std::exception& e) {
        emit(out, {{"error", e.what()}});
        return exit_code::computation;
    }
    err << "no subcommand\n";
    return exit_code::usage;
}

} // namespace knotshake

#include "llsem/cli.hpp"

#include "llsem/encodings.hpp"
#include "llsem/parser.hpp"
#include "llsem/rewrite.hpp"
#include "llsem/semantics.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

namespace llsem {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string file;
    std::vector<std::string> assign;
    std::size_t max_steps = kDefaultMaxSteps;
    bool trace = false;
    bool canonical = false;
    std::size_t probe_depth = 2;
    std::uint64_t seed = 0;
    std::string point;
    std::string vector;
    std::vector<std::string> inputs;
    bool json = false;
    std::string name;
    std::vector<std::size_t> numbers;
    std::string formula = "A";
    std::string binder = "x";
};

SpaceAssignment parse_assign(const std::vector<std::string>& items) {
    SpaceAssignment out;
    for (const auto& item : items) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
            throw UsageError("--assign expects VAR=DIM, got '" + item + "'");
        }
        std::string var = item.substr(0, eq), dim = item.substr(eq + 1);
        if (dim.find_first_not_of("0123456789") != std::string::npos) {
            throw UsageError("--assign dimension must be a positive integer, got '" + dim + "'");
        }
        std::size_t d = std::stoul(dim);
        if (d == 0) throw UsageError("--assign dimension must be positive for " + var);
        out[var] = d;
    }
    return out;
}

Vect parse_flag_coords(const std::string& flag, const std::string& text) {
    try {
        return parse_coords(text);
    } catch (const ParseError& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

std::string read_input(const std::string& file, std::istream& in) {
    std::ostringstream buf;
    if (file == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream f(file, std::ios::binary);
    if (!f) throw DomainError("cannot read " + file);
    buf << f.rdbuf();
    return buf.str();
}

// "file:line:col: message" for a byte offset.
std::string locate(const std::string& file, const std::string& text, std::size_t offset) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return file + ":" + std::to_string(line) + ":" + std::to_string(col);
}

Proof load_proof(const Options& o, std::istream& in) {
    std::string text = read_input(o.file, in);
    Proof p = [&] {
        try {
            return parse_proof(text);
        } catch (const ParseError& e) {
            throw DomainError(locate(o.file, text, e.span().start) + ": " + e.what());
        }
    }();
    auto bad = validate(p);
    if (!bad.empty()) {
        std::string msg;
        for (const auto& v : bad) msg += o.file + ": at " + nlohmann::json(v.path).dump() + ": " + v.message + "\n";
        msg.pop_back();
        throw DomainError(msg);
    }
    return p;
}

ProbeConfig probe_config(const Options& o) {
    ProbeConfig cfg;
    cfg.seed = o.seed;
    cfg.depth = o.probe_depth;
    return cfg;
}

void print_value(std::ostream& out, const SemValue& v, const Options& o) {
    if (v.kind() == SemValue::Kind::Finite && !o.json) {
        out << value_literal(v) << "\n";
    } else {
        out << value_json(v, probe_config(o)) << "\n";
    }
}

nlohmann::ordered_json rows_json(const Matrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < m.rows; ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t c = 0; c < m.cols; ++c) row.push_back(to_string(m.data[r * m.cols + c]));
        rows.push_back(row);
    }
    return rows;
}

SemValue input_value(const Space& s, const std::string& text) {
    if (s->finite) return SemValue::finite(s, parse_flag_coords("--input", text));
    if (s->kind == SemSpace::Kind::Bang && s->left->finite) {
        std::vector<KetLiteral> terms;
        try {
            terms = parse_ket_expr(text);
        } catch (const ParseError& e) {
            throw UsageError(std::string("--input: ") + e.what());
        }
        BangElem x(s->left->dim);
        for (const auto& t : terms) {
            if (t.base.size() != s->left->dim) throw UsageError("--input: ket base point has the wrong dimension");
            for (const auto& a : t.args) {
                if (a.size() != s->left->dim) throw UsageError("--input: ket argument has the wrong dimension");
            }
            x += BangElem::ket(t.base, t.args) * t.coeff;
        }
        return SemValue::bang(s, x);
    }
    throw DomainError("--input: no literal syntax for values of " + to_string(s));
}

int cmd_check(const Options& o, std::istream& in, std::ostream& out) {
    Proof p = load_proof(o, in);
    out << nlohmann::json(to_string(p.conclusion())).dump() << "\n";
    return 0;
}

int cmd_normalize(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
    Proof p = load_proof(o, in);
    std::function<void(const StepInfo&)> on_step;
    if (o.trace) on_step = [&](const StepInfo& s) { out << step_json(s) << "\n"; };
    NormalizeResult r = normalize(p, o.max_steps, on_step);
    Proof result = o.canonical ? exchange_normalize(r.proof) : r.proof;
    out << print_proof(result);
    if (r.exhausted) {
        err << "normalize: step budget of " << o.max_steps << " exhausted; printed the last proof reached\n";
        return 1;
    }
    return 0;
}

int cmd_denote(const Options& o, std::istream& in, std::ostream& out) {
    SpaceAssignment asg = parse_assign(o.assign);
    Proof p = load_proof(o, in);
    const Sequent& seq = p.conclusion();
    std::vector<Space> ctx;
    for (const auto& f : seq.context) ctx.push_back(den_formula(f, asg));
    Space codomain = den_formula(seq.conclusion, asg);
    nlohmann::ordered_json j;
    j["sequent"] = to_string(seq);
    j["context"] = nlohmann::ordered_json::array();
    for (const auto& s : ctx) j["context"].push_back(to_string(s));
    j["codomain"] = to_string(codomain);
    const ProbeConfig cfg = probe_config(o);
    if (!o.inputs.empty()) {
        if (o.inputs.size() != ctx.size()) {
            throw UsageError("--input given " + std::to_string(o.inputs.size()) + " times for a context of " +
                             std::to_string(ctx.size()) + " formulas");
        }
        std::vector<SemValue> xs;
        for (std::size_t i = 0; i < ctx.size(); ++i) xs.push_back(input_value(ctx[i], o.inputs[i]));
        j["value"] = nlohmann::ordered_json::parse(value_json(den_apply(p, xs, asg), cfg));
    } else if (codomain->finite && std::all_of(ctx.begin(), ctx.end(), [](const Space& s) { return s->finite; })) {
        j["matrix"] = rows_json(den_matrix(p, asg));
    } else {
        nlohmann::ordered_json table = nlohmann::ordered_json::array();
        for (const auto& xs : context_probes(ctx, cfg)) {
            nlohmann::ordered_json row;
            row["input"] = nlohmann::ordered_json::array();
            for (const auto& x : xs) row["input"].push_back(nlohmann::ordered_json::parse(value_json(x, cfg)));
            row["output"] = nlohmann::ordered_json::parse(value_json(den_apply(p, xs, asg), cfg));
            table.push_back(row);
        }
        j["probes"] = table;
    }
    out << j.dump() << "\n";
    return 0;
}

int cmd_nl(const Options& o, std::istream& in, std::ostream& out) {
    SpaceAssignment asg = parse_assign(o.assign);
    Vect point = parse_flag_coords("--point", o.point);
    Proof p = load_proof(o, in);
    print_value(out, nl(p, point, asg), o);
    return 0;
}

int cmd_tangent(const Options& o, std::istream& in, std::ostream& out) {
    SpaceAssignment asg = parse_assign(o.assign);
    Vect point = parse_flag_coords("--point", o.point);
    Vect q = parse_flag_coords("--vector", o.vector);
    Proof p = load_proof(o, in);
    print_value(out, tangent(p, point, q, asg), o);
    return 0;
}

struct Encoding {
    std::size_t arity;
    std::function<Proof(const std::vector<std::size_t>&, const Formula&, const std::string&)> build;
};

const std::map<std::string, Encoding>& encodings() {
    using N = const std::vector<std::size_t>&;
    using F = const Formula&;
    using B = const std::string&;
    static const std::map<std::string, Encoding> table = {
        {"church", {1, [](N n, F a, B) { return church(n[0], a); }}},
        {"church-body", {1, [](N n, F a, B) { return church_body(n[0], a); }}},
        {"comp", {0, [](N, F a, B) { return comp(a); }}},
        {"add", {0, [](N, F a, B) { return add(a); }}},
        {"mult", {1, [](N n, F a, B) { return mult(n[0], a); }}},
        {"exp", {1, [](N n, F a, B) { return exp(n[0], a); }}},
        {"church2", {1, [](N n, F, B x) { return church2(n[0], x); }}},
        {"exp2", {1, [](N n, F, B x) { return llsem::exp2(n[0], x); }}},
        {"hypexp", {0, [](N, F, B x) { return hypexp(x); }}},
        // closed pipelines ready for normalize
        {"add-cut", {2, [](N n, F a, B) { return mk_cut(church(n[0], a), mk_cut(church(n[1], a), add(a), 1), 0); }}},
        {"mult-cut", {2, [](N n, F a, B) { return mk_cut(church(n[1], a), mult(n[0], a), 0); }}},
        {"exp-cut", {2, [](N n, F a, B) { return mk_cut(church(n[1], int_on(a)), exp(n[0], a), 0); }}},
        {"hypexp-cut", {1, [](N n, F, B x) { return mk_cut(church2(n[0], x), hypexp(x), 0); }}},
        {"square", {0, [](N, F a, B) { return mk_cut(mk_prom(mk_lolli_r(mk_axiom(a))), church_body(2, a), 0); }}},
    };
    return table;
}

int cmd_encode(const Options& o, std::ostream& out) {
    auto it = encodings().find(o.name);
    if (it == encodings().end()) {
        std::string names;
        for (const auto& [k, v] : encodings()) names += (names.empty() ? "" : ", ") + k;
        throw UsageError("unknown encoding '" + o.name + "' (known: " + names + ")");
    }
    if (o.numbers.size() != it->second.arity) {
        throw UsageError("encoding '" + o.name + "' takes " + std::to_string(it->second.arity) + " numeric argument(s)");
    }
    Formula a = [&] {
        try {
            return parse_formula(o.formula);
        } catch (const ParseError& e) {
            throw UsageError(std::string("--formula: ") + e.what());
        }
    }();
    out << print_proof(it->second.build(o.numbers, a, o.binder));
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Proofs of intuitionistic linear logic: checking, cut elimination and vector space semantics",
                 args.empty() ? "llsem" : args[0]};
    app.require_subcommand(1);

    auto file_arg = [&](CLI::App* sub) { sub->add_option("file", o.file, "proof file (.llp), - for stdin")->required(); };
    auto assign_opt = [&](CLI::App* sub) {
        sub->add_option("--assign", o.assign, "dimension of a propositional variable, VAR=DIM (repeatable)")
            ->allow_extra_args(false);
    };
    auto probe_opts = [&](CLI::App* sub) {
        sub->add_option("--probe-depth", o.probe_depth, "maximal ket length in probes")->capture_default_str();
        sub->add_option("--seed", o.seed, "seed for probe base points")->capture_default_str();
    };

    auto* check = app.add_subcommand("check", "validate a proof and print its conclusion");
    file_arg(check);

    auto* norm = app.add_subcommand("normalize", "eliminate cuts and print the cut-free proof");
    file_arg(norm);
    norm->add_option("--max-steps", o.max_steps, "rewrite step budget")->capture_default_str();
    norm->add_flag("--trace", o.trace, "print each step as a JSON line before the proof");
    norm->add_flag("--canonical", o.canonical, "apply exchange normalization to the result");

    auto* denote = app.add_subcommand("denote", "print the denotation as a matrix, a value, or a probe table");
    file_arg(denote);
    assign_opt(denote);
    denote->add_option("--input", o.inputs, "value of one context formula, in order (repeatable)")
        ->allow_extra_args(false);
    probe_opts(denote);

    auto* nl_cmd = app.add_subcommand("nl", "evaluate a proof of !B |- C or |- !B -o C on a vacuum");
    file_arg(nl_cmd);
    assign_opt(nl_cmd);
    nl_cmd->add_option("--point", o.point, "base point, e.g. [[1/1,1/1],[0/1,1/1]]")->required();
    nl_cmd->add_flag("--json", o.json, "JSON output even for finite values");
    probe_opts(nl_cmd);

    auto* tan = app.add_subcommand("tangent", "evaluate a proof of !B |- C on the ket |Q>_P");
    file_arg(tan);
    assign_opt(tan);
    tan->add_option("--point", o.point, "base point P")->required();
    tan->add_option("--vector", o.vector, "tangent vector Q")->required();
    tan->add_flag("--json", o.json, "JSON output even for finite values");
    probe_opts(tan);

    auto* enc = app.add_subcommand("encode", "print an encoding as a proof file");
    enc->add_option("name", o.name, "encoding name")->required();
    enc->add_option("numbers", o.numbers, "numeric arguments");
    enc->add_option("--formula", o.formula, "base formula")->capture_default_str();
    enc->add_option("--binder", o.binder, "bound variable of second-order encodings")->capture_default_str();

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    if (argv.empty()) argv.push_back("llsem");
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << app.get_name() << ": " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (check->parsed()) return cmd_check(o, in, out);
        if (norm->parsed()) return cmd_normalize(o, in, out, err);
        if (denote->parsed()) return cmd_denote(o, in, out);
        if (nl_cmd->parsed()) return cmd_nl(o, in, out);
        if (tan->parsed()) return cmd_tangent(o, in, out);
        if (enc->parsed()) return cmd_encode(o, out);
    } catch (const UsageError& e) {
        err << app.get_name() << ": " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const KernelError& e) {
        err << "kernel: " << e.what() << "\n";
        return 1;
    } catch (const SemanticError& e) {
        err << "semantics: " << e.what() << "\n";
        return 1;
    } catch (const RewriteError& e) {
        err << "rewrite: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace llsem

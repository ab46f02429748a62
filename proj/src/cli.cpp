#include "csnet/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "csnet/csmatrix.hpp"
#include "csnet/error.hpp"
#include "csnet/families.hpp"
#include "csnet/immanant.hpp"
#include "csnet/network.hpp"
#include "csnet/symchar.hpp"

namespace csnet {

namespace {

// A problem with the invocation itself, reported with exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Builtin name first, then a JSON file path.
FamilySpec resolve_family(const std::string& name_or_path) {
    for (const auto& name : builtin_names())
        if (name == name_or_path) return builtin(name);
    std::ifstream in(name_or_path);
    if (!in)
        throw Error(ErrorKind::UnknownFamily,
                    "'" + name_or_path + "' is neither a builtin family nor a readable family file");
    std::stringstream text;
    text << in.rdbuf();
    return load_family(text.str());
}

std::size_t size_cap_from_env() {
    const char* raw = std::getenv("CSNET_SIZE_CAP");
    if (!raw || !*raw) return default_size_cap;
    try {
        std::size_t pos = 0;
        long v = std::stol(raw, &pos);
        if (pos != std::string(raw).size() || v < 1) throw std::invalid_argument(raw);
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw ConfigError(std::string("CSNET_SIZE_CAP must be a positive integer, got '") + raw + "'");
    }
}

// One case for every layer, or a single case repeated. Builtins fall back to
// the first weight case their parameters are known to support.
std::vector<WeightCase> resolve_cases(const FamilySpec& f, const std::vector<int>& given, int layers) {
    std::vector<int> raw = given;
    if (raw.empty()) {
        auto names = builtin_names();
        if (std::find(names.begin(), names.end(), f.name()) == names.end())
            throw ConfigError("--case is required for family '" + f.name() + "'");
        raw = {builtin_conditions(f.name()).front()};
    }
    if (raw.size() == 1) return uniform_cases(WeightCase(raw.front()), layers);
    if (raw.size() != static_cast<std::size_t>(layers))
        throw ConfigError("expected 1 or " + std::to_string(layers) + " --case values, got " +
                          std::to_string(raw.size()));
    std::vector<WeightCase> cases;
    for (int c : raw) cases.emplace_back(c);
    return cases;
}

std::string join(const std::vector<std::size_t>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

struct MatrixArgs {
    std::string family;
    int n = -1;
    std::string format = "json";
    std::vector<std::size_t> rows, cols;
};

void add_matrix_options(CLI::App* cmd, MatrixArgs& a) {
    cmd->add_option("--family", a.family, "builtin family name or family JSON file")->required();
    cmd->add_option("--n", a.n, "matrix index; the matrix has n+1 rows")->required()->check(CLI::NonNegativeNumber);
    cmd->add_option("--format", a.format)->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--rows", a.rows, "comma-separated row indices")->delimiter(',');
    cmd->add_option("--cols", a.cols, "comma-separated column indices")->delimiter(',');
}

int cmd_matrix(const MatrixArgs& a, bool is_hankel, std::ostream& out) {
    if (a.rows.empty() != a.cols.empty()) throw ConfigError("--rows and --cols must be given together");
    FamilySpec f = resolve_family(a.family);
    CSMatrix m = is_hankel ? hankel(f, a.n) : catalan_stieltjes(f, a.n);
    if (!a.rows.empty()) m = submatrix(m, a.rows, a.cols);
    if (a.format == "csv")
        out << to_csv(m.entries);
    else if (a.format == "text")
        out << to_text(m.entries);
    else
        out << to_json(m).dump(2) << '\n';
    return exit_ok;
}

struct NetworkArgs {
    std::string family;
    int n = -1;
    std::vector<int> cases;
    bool hankel = false;
    int k = 0;
    bool factored = false;
    std::string format = "dot";
    bool check = false;
};

int cmd_network(const NetworkArgs& a, std::ostream& out, std::ostream& err) {
    if (a.hankel && a.factored) throw ConfigError("--hankel and --hankel-factored are exclusive");
    FamilySpec f = resolve_family(a.family);
    PlanarNetwork net = [&] {
        if (a.hankel) return build_hankel_network(f, a.n, a.k, resolve_cases(f, a.cases, 2 * a.n + a.k));
        if (a.factored) return build_hankel_factored(f, a.n, resolve_cases(f, a.cases, a.n));
        return build_cs_network(f, a.n, resolve_cases(f, a.cases, a.n));
    }();
    if (a.format == "json")
        out << to_json(net).dump(2) << '\n';
    else
        out << export_dot(net);
    if (!a.check) return exit_ok;

    const bool want_hankel = a.hankel || a.factored;
    const PolyMatrix expected = (want_hankel ? hankel(f, a.n) : catalan_stieltjes(f, a.n)).entries;
    const std::string label = std::string(want_hankel ? "H_" : "C_") + std::to_string(a.n);
    if (gf_matrix(net) == expected) {
        err << "check passed: path generating functions equal " << label << '\n';
        return exit_ok;
    }
    err << "check FAILED: path generating functions differ from " << label << '\n';
    return exit_network_check;
}

struct VerifyArgs {
    std::string family;
    std::string matrix = "C";
    int n = -1;
    std::size_t max_size = 0;
    std::uint64_t seed = 0;
    std::size_t sample_limit = 20000;
    std::string format = "json";
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    FamilySpec f = resolve_family(a.family);
    CSMatrix m = a.matrix == "H" ? hankel(f, a.n) : catalan_stieltjes(f, a.n);
    SweepOptions opt;
    opt.max_size = a.max_size ? a.max_size : std::min<std::size_t>(m.size(), 4);
    opt.size_cap = size_cap_from_env();
    opt.seed = a.seed;
    opt.exhaustive_limit = a.sample_limit;
    SweepResult r = positivity_sweep(m, opt);

    if (a.format == "csv") {
        out << to_csv(r);
    } else if (a.format == "text") {
        out << "family " << f.name() << ", matrix " << a.matrix << "_" << a.n << ", sizes 1.." << opt.max_size << '\n'
            << "submatrices examined: " << r.examined_submatrices << " of " << r.candidate_submatrices
            << (r.sampled ? " (sampled, seed " + std::to_string(r.seed) + ")" : std::string()) << '\n'
            << "immanants q-nonnegative: " << (r.all_q_nonnegative() ? "yes" : "NO") << '\n'
            << "Imm - deg*det q-nonnegative: " << (r.all_gap_nonnegative() ? "yes" : "NO") << '\n';
    } else {
        nlohmann::json j = to_json(r);
        j["family"] = f.name();
        j["matrix"] = a.matrix;
        j["n"] = a.n;
        j["max_size"] = opt.max_size;
        out << j.dump(2) << '\n';
    }
    if (r.ok()) return exit_ok;

    std::size_t shown = 0, total = 0;
    for (const auto& rep : r.reports) {
        if (rep.q_nonnegative && rep.gap_nonnegative) continue;
        ++total;
        if (shown++ >= 10) continue;
        err << "violation: I=" << join(rep.rows) << " J=" << join(rep.cols) << " lambda=" << rep.lambda.to_string();
        if (!rep.q_nonnegative)
            err << " immanant=" << rep.value;
        else
            err << " gap=" << rep.dominance_gap;
        err << '\n';
    }
    err << total << " violating (I,J,lambda) reports\n";
    return exit_positivity;
}

struct InequalityArgs {
    std::string family;
    int max_index = 5;
    std::vector<int> triple;
    bool show = false;
    std::string format = "text";
};

int cmd_inequality(const InequalityArgs& a, std::ostream& out, std::ostream& err) {
    if (!a.triple.empty() && !(a.triple[0] >= 0 && a.triple[0] < a.triple[1] && a.triple[1] < a.triple[2]))
        throw ConfigError("--triple needs 0 <= i < j < k");
    FamilySpec f = resolve_family(a.family);
    const int top = a.triple.empty() ? a.max_index : a.triple[2];
    const std::vector<QPoly> seq = catalan_like(f, 2 * top);

    using Triple = std::array<std::size_t, 3>;
    std::vector<Triple> triples;
    if (!a.triple.empty()) {
        triples.push_back({static_cast<std::size_t>(a.triple[0]), static_cast<std::size_t>(a.triple[1]),
                           static_cast<std::size_t>(a.triple[2])});
    } else {
        for (int i = 0; i <= top; ++i)
            for (int j = i + 1; j <= top; ++j)
                for (int k = j + 1; k <= top; ++k)
                    triples.push_back({std::size_t(i), std::size_t(j), std::size_t(k)});
    }

    struct Row {
        std::string kind;
        Triple i, j;
        QPoly value;
        bool ok;
    };
    std::vector<Row> rows;
    for (const auto& t : triples) {
        QPoly v = inequality_332(seq, t[0], t[1], t[2]);
        rows.push_back({"ineq332", t, t, v, v.is_q_nonnegative()});
    }
    for (const auto& ti : triples)
        for (const auto& tj : triples) {
            QPoly v = inequality_331(seq, ti, tj);
            rows.push_back({"ineq331", ti, tj, v, v.is_q_nonnegative()});
        }
    const bool all_ok = std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.ok; });

    auto triple_str = [](const Triple& t) {
        return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
    };
    if (a.format == "json") {
        nlohmann::json j;
        j["family"] = f.name();
        j["max_index"] = top;
        j["all_q_nonnegative"] = all_ok;
        j["results"] = nlohmann::json::array();
        for (const auto& r : rows)
            j["results"].push_back({{"inequality", r.kind},
                                    {"i", r.i},
                                    {"j", r.j},
                                    {"value", to_json(r.value)},
                                    {"q_nonnegative", r.ok}});
        out << j.dump(2) << '\n';
    } else if (a.format == "csv") {
        out << "inequality,i,j,value,q_nonnegative\n";
        for (const auto& r : rows)
            out << r.kind << ",\"" << triple_str(r.i) << "\",\"" << triple_str(r.j) << "\"," << r.value << ','
                << (r.ok ? 1 : 0) << '\n';
    } else {
        for (const auto& r : rows) {
            out << r.kind << " i=" << triple_str(r.i) << " j=" << triple_str(r.j) << ' ' << (r.ok ? "ok" : "FAIL");
            if (a.show) out << "  " << r.value;
            out << '\n';
        }
        out << rows.size() << " values, " << (all_ok ? "all q-nonnegative" : "VIOLATIONS found") << '\n';
    }
    if (all_ok) return exit_ok;
    err << "inequality violated for family " << f.name() << '\n';
    return exit_positivity;
}

int cmd_chars(int n, const std::string& format, std::ostream& out) {
    if (n < 0 || n > 12) throw ConfigError("chars: --n must be in 0..12, got " + std::to_string(n));
    const CharacterTable& t = character_table(n);
    if (format == "json") {
        out << to_json(t).dump(2) << '\n';
        return exit_ok;
    }
    const auto& parts = t.partitions();
    std::size_t width = 0;
    for (const auto& p : parts) width = std::max(width, p.to_string().size());
    std::vector<std::vector<std::string>> cells(parts.size() + 1);
    cells[0].push_back("");
    for (const auto& p : parts) cells[0].push_back(p.to_string());
    for (std::size_t l = 0; l < parts.size(); ++l) {
        cells[l + 1].push_back(parts[l].to_string());
        for (std::size_t m = 0; m < parts.size(); ++m) cells[l + 1].push_back(std::to_string(t.value(l, m)));
    }
    std::vector<std::size_t> col_width(parts.size() + 1, 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c) col_width[c] = std::max(col_width[c], row[c].size());
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) line += "  ";
            line += std::string(col_width[c] - row[c].size(), ' ') + row[c];
        }
        out << line << '\n';
    }
    return exit_ok;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Catalan-Stieltjes matrices, planar networks and immanant positivity", "csnet"};
    app.require_subcommand(1);

    MatrixArgs matrix_args, hankel_args;
    auto* matrix_cmd = app.add_subcommand("matrix", "print C_n");
    add_matrix_options(matrix_cmd, matrix_args);
    auto* hankel_cmd = app.add_subcommand("hankel", "print H_n");
    add_matrix_options(hankel_cmd, hankel_args);

    NetworkArgs net;
    auto* network_cmd = app.add_subcommand("network", "build the planar network for C_n or H_n");
    network_cmd->add_option("--family", net.family)->required();
    network_cmd->add_option("--n", net.n)->required()->check(CLI::NonNegativeNumber);
    network_cmd->add_option("--case", net.cases, "weight case 1..5, once or once per layer")->check(CLI::Range(1, 5));
    network_cmd->add_flag("--hankel", net.hankel, "induced subnetwork of C_{2n+k} for H_n");
    network_cmd->add_option("--k", net.k)->check(CLI::NonNegativeNumber);
    network_cmd->add_flag("--hankel-factored", net.factored, "the C_n T_n C_n^T network for H_n");
    network_cmd->add_option("--format", net.format)->check(CLI::IsMember({"dot", "json"}));
    network_cmd->add_flag("--check", net.check, "verify the path generating functions against the matrix");

    VerifyArgs ver;
    auto* verify_cmd = app.add_subcommand("verify", "check immanant positivity of all square submatrices");
    verify_cmd->add_option("--family", ver.family)->required();
    verify_cmd->add_option("--matrix", ver.matrix)->check(CLI::IsMember({"C", "H"}));
    verify_cmd->add_option("--n", ver.n)->required()->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--max-size", ver.max_size)->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", ver.seed);
    verify_cmd->add_option("--sample-limit", ver.sample_limit, "enumerate up to this many submatrices, else sample")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--format", ver.format)->check(CLI::IsMember({"json", "csv", "text"}));

    InequalityArgs ineq;
    auto* inequality_cmd = app.add_subcommand("inequality", "tabulate the cubic Hankel inequalities");
    inequality_cmd->add_option("--family", ineq.family)->required();
    inequality_cmd->add_option("--max-index", ineq.max_index)->check(CLI::Range(2, 40));
    inequality_cmd->add_option("--triple", ineq.triple, "i j k")->expected(3);
    inequality_cmd->add_flag("--show", ineq.show, "print each difference polynomial");
    inequality_cmd->add_option("--format", ineq.format)->check(CLI::IsMember({"text", "json", "csv"}));

    int chars_n = -1;
    std::string chars_format = "text";
    auto* chars_cmd = app.add_subcommand("chars", "character table of the symmetric group");
    chars_cmd->add_option("--n", chars_n)->required();
    chars_cmd->add_option("--format", chars_format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_config;
    }

    try {
        if (*matrix_cmd) return cmd_matrix(matrix_args, false, out);
        if (*hankel_cmd) return cmd_matrix(hankel_args, true, out);
        if (*network_cmd) return cmd_network(net, out, err);
        if (*verify_cmd) return cmd_verify(ver, out, err);
        if (*inequality_cmd) return cmd_inequality(ineq, out, err);
        if (*chars_cmd) return cmd_chars(chars_n, chars_format, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return is_family_error(e.kind()) ? exit_family : exit_config;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return exit_config;
    }
    return exit_config;
}

} // namespace csnet

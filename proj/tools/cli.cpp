#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

namespace ciqw::cli {

namespace {

// ---------------------------------------------------------------------------
// Deterministic writers. All reals are rendered with 17 significant digits
// so output is lossless and byte-stable across runs.

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

// Streaming JSON writer that keeps keys in emission order.
class JsonWriter {
public:
    void begin_object() {
        separate();
        buf_ += '{';
        counts_.push_back(0);
    }
    void end_object() {
        buf_ += '}';
        counts_.pop_back();
    }
    void begin_array() {
        separate();
        buf_ += '[';
        counts_.push_back(0);
    }
    void end_array() {
        buf_ += ']';
        counts_.pop_back();
    }
    void key(const std::string& k) {
        separate();
        buf_ += '"';
        buf_ += json_escape(k);
        buf_ += "\":";
        pending_value_ = true;
    }
    void value(double x) {
        separate();
        buf_ += format_real(x);
    }
    void value(long long x) {
        separate();
        buf_ += std::to_string(x);
    }
    void value(int x) { value(static_cast<long long>(x)); }
    void value(std::uint64_t x) {
        separate();
        buf_ += std::to_string(x);
    }
    void value(bool b) {
        separate();
        buf_ += b ? "true" : "false";
    }
    void value(const std::string& s) {
        separate();
        buf_ += '"';
        buf_ += json_escape(s);
        buf_ += '"';
    }
    void value(const char* s) { value(std::string(s)); }
    void null() {
        separate();
        buf_ += "null";
    }
    std::string take() { return std::move(buf_) + "\n"; }

private:
    void separate() {
        if (pending_value_) {
            pending_value_ = false;
            return;
        }
        if (!counts_.empty() && counts_.back()++ > 0) buf_ += ',';
    }

    std::string buf_;
    std::vector<int> counts_;
    bool pending_value_ = false;
};

// Minimal CSV: '.' decimal, ',' separator, header row mandatory. Cells
// containing separators are quoted.
class CsvWriter {
public:
    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) buf_ += ',';
            buf_ += escape(cells[i]);
        }
        buf_ += '\n';
    }
    std::string take() { return std::move(buf_); }

private:
    static std::string escape(const std::string& cell) {
        if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
        std::string out = "\"";
        for (char c : cell) {
            if (c == '"') out += '"';
            out += c;
        }
        return out + "\"";
    }

    std::string buf_;
};

// ---------------------------------------------------------------------------
// Graph argument parsing.

std::vector<long long> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ParameterError(what + ": bad integer '" + item + "'");
        }
    }
    return out;
}

GraphSpec load_custom(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open edge list file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    Graph g = parse_edge_list(buffer.str());
    return GraphSpec::custom(g.n_vertices, std::move(g.edges));
}

} // namespace

GraphSpec parse_graph_arg(const std::string& arg) {
    const auto colon = arg.find(':');
    if (colon == std::string::npos) return load_custom(arg);
    const std::string name = arg.substr(0, colon);
    const std::string rest = arg.substr(colon + 1);
    if (name == "custom") return load_custom(rest);
    for (const FamilyInfo& info : family_catalog()) {
        if (name == info.name) {
            GraphSpec spec;
            spec.family = info.family;
            spec.params = parse_int_list(rest, name);
            validate_spec(spec);
            return spec;
        }
    }
    throw ParameterError("unknown graph family '" + name + "'");
}

const char* command_name(Command c) {
    switch (c) {
        case Command::Families: return "families";
        case Command::Spectrum: return "spectrum";
        case Command::Certify: return "certify";
        case Command::Depth: return "depth";
        case Command::Search: return "search";
        case Command::Sweep: return "sweep";
        case Command::Compare: return "compare";
    }
    return "?";
}

namespace {

const char* mode_name(SearchMode m) { return m == SearchMode::Circuit ? "circuit" : "exact"; }

void emit_config(JsonWriter& w, const RunConfig& cfg) {
    w.key("config");
    w.begin_object();
    w.key("command");
    w.value(command_name(cfg.command));
    if (!cfg.graph_args.empty()) {
        w.key("graph");
        if (cfg.graph_args.size() == 1) {
            w.value(cfg.graph_args.front());
        } else {
            w.begin_array();
            for (const auto& g : cfg.graph_args) w.value(g);
            w.end_array();
        }
    }
    if (!cfg.marked.empty()) {
        w.key("marked");
        w.begin_array();
        for (int v : cfg.marked) w.value(v);
        w.end_array();
    }
    if (!cfg.marked_counts.empty()) {
        w.key("marked_count");
        if (cfg.marked_counts.size() == 1) {
            w.value(cfg.marked_counts.front());
        } else {
            w.begin_array();
            for (int c : cfg.marked_counts) w.value(c);
            w.end_array();
        }
    }
    if (cfg.seed) {
        w.key("seed");
        w.value(*cfg.seed);
    }
    if (cfg.command == Command::Search || cfg.command == Command::Sweep) {
        w.key("mode");
        w.value(mode_name(cfg.mode));
        w.key("tol");
        w.value(cfg.tol);
        if (cfg.bypass_certify) {
            w.key("bypass_certify");
            w.value(true);
        }
    }
    w.key("integrality_tol");
    w.value(cfg.integrality_tol);
    w.key("format");
    w.value(cfg.format == OutputFormat::Json ? "json" : "csv");
    w.end_object();
}

void emit_graph(JsonWriter& w, const GraphSpec& spec, int n) {
    w.key("graph");
    w.begin_object();
    w.key("n");
    w.value(n);
    w.key("family");
    w.value(family_name(spec.family));
    w.key("params");
    w.begin_array();
    for (long long p : spec.params) w.value(p);
    w.end_array();
    w.end_object();
}

void emit_certification(JsonWriter& w, const std::vector<double>& eigenvalues,
                        const CertifyResult& cert) {
    w.key("spectrum");
    w.begin_object();
    w.key("eigenvalues");
    w.begin_array();
    for (double ev : eigenvalues) w.value(ev);
    w.end_array();
    w.key("integral");
    w.value(cert.integral());
    if (cert.integral()) {
        w.key("values");
        w.begin_array();
        for (long long v : cert.spectrum->values) w.value(v);
        w.end_array();
        w.key("multiplicities");
        w.begin_array();
        for (long long m : cert.spectrum->multiplicities) w.value(m);
        w.end_array();
    }
    w.key("offenders");
    w.begin_array();
    for (const auto& off : cert.offenders) {
        w.begin_object();
        w.key("eigenvalue");
        w.value(off.eigenvalue);
        w.key("nearest");
        w.value(off.nearest);
        w.key("distance");
        w.value(off.distance);
        w.end_object();
    }
    w.end_array();
    w.end_object();
}

void emit_depth(JsonWriter& w, const DepthResult& d) {
    w.key("depth");
    w.begin_object();
    w.key("d_l");
    w.value(d.d);
    w.key("gcds");
    w.begin_array();
    for (long long g : d.gcds) w.value(g);
    w.end_array();
    w.key("chain");
    w.begin_array();
    for (const auto& level : d.chain) {
        w.begin_array();
        for (long long v : level) w.value(v);
        w.end_array();
    }
    w.end_array();
    w.end_object();
}

void emit_search(JsonWriter& w, const SearchResult& r) {
    w.key("search");
    w.begin_object();
    w.key("params");
    w.begin_object();
    w.key("epsilon_num");
    w.value(r.params.epsilon.num);
    w.key("epsilon_den");
    w.value(r.params.epsilon.den);
    w.key("k");
    w.value(r.params.k);
    w.key("alpha");
    w.value(r.params.alpha);
    w.key("beta");
    w.value(r.params.beta);
    w.key("s");
    w.value(r.params.s);
    w.key("t0");
    w.value(r.params.t0);
    w.end_object();
    w.key("result");
    w.begin_object();
    w.key("success_probability");
    w.value(r.success_probability);
    w.key("ancilla_residue");
    w.value(r.ancilla_residue);
    w.key("vertex_distribution");
    w.begin_array();
    for (double p : r.vertex_distribution) w.value(p);
    w.end_array();
    w.end_object();
    w.key("cost");
    w.begin_object();
    w.key("oracle_queries");
    w.value(r.cost.oracle_queries);
    w.key("ctqw_calls");
    w.value(r.cost.ctqw_calls);
    w.key("per_reflection_time");
    w.value(r.cost.per_reflection_time);
    w.key("total_evolution_time");
    w.value(r.cost.total_evolution_time);
    w.end_object();
    w.end_object();
}

MarkedSet resolve_marked(const RunConfig& cfg, int n) {
    if (!cfg.marked.empty() && !cfg.marked_counts.empty())
        throw ParameterError("use either --marked or --marked-count, not both");
    if (!cfg.marked.empty()) return MarkedSet::of(cfg.marked, n);
    if (cfg.marked_counts.size() == 1 && cfg.seed)
        return MarkedSet::of(select_marked_vertices(*cfg.seed, n, cfg.marked_counts.front()), n);
    throw ParameterError(
        "provide exactly one marked-set source: --marked, or --marked-count with --seed");
}

SearchOptions search_options(const RunConfig& cfg, const Rational& true_epsilon) {
    SearchOptions opts;
    opts.mode = cfg.mode;
    opts.bypass_certification = cfg.bypass_certify;
    opts.integrality_tol = cfg.integrality_tol;
    if (cfg.epsilon_override || cfg.k_override) {
        const Rational eps = cfg.epsilon_override.value_or(true_epsilon);
        opts.params = cfg.k_override ? long_params(eps, *cfg.k_override) : long_params(eps);
    }
    return opts;
}

// ---------------------------------------------------------------------------
// Commands.

CommandOutput cmd_families(const RunConfig& cfg) {
    if (cfg.format == OutputFormat::Csv) {
        CsvWriter csv;
        csv.row({"name", "parameters", "constraints"});
        for (const FamilyInfo& info : family_catalog())
            csv.row({info.name, info.parameters, info.constraints});
        return {csv.take(), 0};
    }
    JsonWriter w;
    w.begin_object();
    emit_config(w, cfg);
    w.key("families");
    w.begin_array();
    for (const FamilyInfo& info : family_catalog()) {
        w.begin_object();
        w.key("name");
        w.value(info.name);
        w.key("parameters");
        w.value(info.parameters);
        w.key("constraints");
        w.value(info.constraints);
        w.end_object();
    }
    w.end_array();
    w.end_object();
    return {w.take(), 0};
}

CommandOutput cmd_spectral(const RunConfig& cfg) {
    const GraphSpec spec = parse_graph_arg(cfg.graph_args.at(0));
    const Graph g = build_graph(spec);
    const Spectrum sp = eigendecompose(laplacian(g));
    const CertifyResult cert = certify_integral(sp, cfg.integrality_tol);
    std::optional<DepthResult> depth_result;
    if (cfg.command == Command::Depth && cert.integral())
        depth_result = depth(*cert.spectrum);

    if (cfg.format == OutputFormat::Csv) {
        CsvWriter csv;
        if (cfg.command == Command::Spectrum) {
            csv.row({"index", "eigenvalue"});
            for (std::size_t i = 0; i < sp.eigenvalues.size(); ++i)
                csv.row({std::to_string(i), format_real(sp.eigenvalues[i])});
        } else if (cfg.command == Command::Certify || !depth_result) {
            csv.row({"index", "eigenvalue", "nearest", "distance", "within_tol"});
            for (std::size_t i = 0; i < sp.eigenvalues.size(); ++i) {
                const double ev = sp.eigenvalues[i];
                const long long nearest = std::llround(ev);
                const double distance = std::abs(ev - static_cast<double>(nearest));
                csv.row({std::to_string(i), format_real(ev), std::to_string(nearest),
                         format_real(distance),
                         distance <= cfg.integrality_tol ? "true" : "false"});
            }
        } else {
            csv.row({"step", "gcd", "values"});
            for (std::size_t step = 0; step < depth_result->chain.size(); ++step) {
                std::string values;
                for (std::size_t i = 0; i < depth_result->chain[step].size(); ++i) {
                    if (i) values += ';';
                    values += std::to_string(depth_result->chain[step][i]);
                }
                const bool has_gcd = step < depth_result->gcds.size();
                csv.row({std::to_string(step),
                         has_gcd ? std::to_string(depth_result->gcds[step]) : "", values});
            }
        }
        return {csv.take(), 0};
    }

    JsonWriter w;
    w.begin_object();
    emit_config(w, cfg);
    emit_graph(w, spec, g.n_vertices);
    emit_certification(w, sp.eigenvalues, cert);
    if (cfg.command == Command::Depth) {
        if (depth_result) {
            emit_depth(w, *depth_result);
        } else {
            w.key("depth");
            w.null();
        }
    }
    w.end_object();
    return {w.take(), 0};
}

CommandOutput cmd_search(const RunConfig& cfg) {
    const GraphSpec spec = parse_graph_arg(cfg.graph_args.at(0));
    const Graph g = build_graph(spec);
    const MarkedSet marked = resolve_marked(cfg, g.n_vertices);
    const SearchResult result = run_search(g, marked, search_options(cfg, marked.epsilon()));
    const int exit_code = result.success_probability >= 1.0 - cfg.tol ? 0 : 2;

    if (cfg.format == OutputFormat::Csv) {
        CsvWriter csv;
        csv.row({"family", "n", "mode", "marked", "epsilon", "k", "alpha", "s", "t0", "success",
                 "ancilla_residue", "oracle_queries", "ctqw_calls", "per_reflection_time",
                 "total_evolution_time"});
        csv.row({family_name(spec.family), std::to_string(g.n_vertices), mode_name(cfg.mode),
                 std::to_string(marked.members.size()), format_real(result.params.epsilon.value()),
                 std::to_string(result.params.k), format_real(result.params.alpha),
                 std::to_string(result.params.s), format_real(result.params.t0),
                 format_real(result.success_probability), format_real(result.ancilla_residue),
                 std::to_string(result.cost.oracle_queries),
                 std::to_string(result.cost.ctqw_calls),
                 format_real(result.cost.per_reflection_time),
                 format_real(result.cost.total_evolution_time)});
        return {csv.take(), exit_code};
    }

    JsonWriter w;
    w.begin_object();
    emit_config(w, cfg);
    emit_graph(w, spec, g.n_vertices);
    w.key("marked");
    w.begin_array();
    for (int v : marked.members) w.value(v);
    w.end_array();
    emit_search(w, result);
    w.end_object();
    return {w.take(), exit_code};
}

struct Cell {
    std::string graph;
    int count = 0;
};

struct RowData {
    std::string graph;
    std::optional<long long> n;
    std::optional<long long> marked;
    std::optional<double> epsilon;
    std::optional<long long> k;
    std::optional<long long> queries;
    std::optional<long long> ctqw_calls;
    std::optional<double> total_time;
    std::optional<long long> d_l;
    std::optional<long long> two_pow_d_l;
    std::optional<double> sqrt_n_over_m; // compare only
    std::optional<double> alt_cost;      // compare only: 2^{d_L}·√N
    std::optional<double> success;       // sweep only
    std::string error;
};

void emit_row_json(JsonWriter& w, const RowData& r, bool compare) {
    auto put_int = [&](const char* key, const std::optional<long long>& v) {
        w.key(key);
        if (v) {
            w.value(*v);
        } else {
            w.null();
        }
    };
    auto put_real = [&](const char* key, const std::optional<double>& v) {
        w.key(key);
        if (v) {
            w.value(*v);
        } else {
            w.null();
        }
    };
    w.begin_object();
    w.key("graph");
    w.value(r.graph);
    put_int("n", r.n);
    put_int("marked", r.marked);
    put_real("epsilon", r.epsilon);
    put_int("k", r.k);
    put_int("queries", r.queries);
    put_int("ctqw_calls", r.ctqw_calls);
    put_real("total_time", r.total_time);
    put_int("d_l", r.d_l);
    put_int("two_pow_d_l", r.two_pow_d_l);
    if (compare) {
        put_real("sqrt_n_over_m", r.sqrt_n_over_m);
        put_real("two_pow_d_l_sqrt_n", r.alt_cost);
    } else {
        put_real("success", r.success);
    }
    w.key("error");
    w.value(r.error);
    w.end_object();
}

std::vector<std::string> row_cells(const RowData& r, bool compare) {
    auto int_cell = [](const std::optional<long long>& v) {
        return v ? std::to_string(*v) : std::string();
    };
    auto real_cell = [](const std::optional<double>& v) {
        return v ? format_real(*v) : std::string();
    };
    std::vector<std::string> cells = {r.graph,
                                      int_cell(r.n),
                                      int_cell(r.marked),
                                      real_cell(r.epsilon),
                                      int_cell(r.k),
                                      int_cell(r.queries),
                                      int_cell(r.ctqw_calls),
                                      real_cell(r.total_time),
                                      int_cell(r.d_l),
                                      int_cell(r.two_pow_d_l)};
    if (compare) {
        cells.push_back(real_cell(r.sqrt_n_over_m));
        cells.push_back(real_cell(r.alt_cost));
    } else {
        cells.push_back(real_cell(r.success));
    }
    cells.push_back(r.error);
    return cells;
}

RowData eval_sweep_cell(const RunConfig& cfg, const Cell& cell) {
    RowData row;
    row.graph = cell.graph;
    row.marked = cell.count;
    try {
        const GraphSpec spec = parse_graph_arg(cell.graph);
        const Graph g = build_graph(spec);
        row.n = g.n_vertices;
        const CertifyResult cert = certify_integral(eigendecompose(laplacian(g)),
                                                    cfg.integrality_tol);
        if (cert.integral()) {
            const DepthResult d = depth(*cert.spectrum);
            row.d_l = d.d;
            row.two_pow_d_l = 1LL << d.d;
        }
        if (!cfg.seed) throw ParameterError("sweep requires --seed for marked selection");
        const MarkedSet marked =
            MarkedSet::of(select_marked_vertices(*cfg.seed, g.n_vertices, cell.count),
                          g.n_vertices);
        row.epsilon = marked.epsilon().value();
        const SearchResult result = run_search(g, marked, search_options(cfg, marked.epsilon()));
        row.k = result.params.k;
        row.queries = result.cost.oracle_queries;
        row.ctqw_calls = result.cost.ctqw_calls;
        row.total_time = result.cost.total_evolution_time;
        row.success = result.success_probability;
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

RowData eval_compare_cell(const RunConfig& cfg, const Cell& cell) {
    RowData row;
    row.graph = cell.graph;
    row.marked = cell.count;
    try {
        const GraphSpec spec = parse_graph_arg(cell.graph);
        IntegralSpectrum isp;
        if (spec.family == Family::Custom) {
            const Graph g = build_graph(spec);
            CertifyResult cert = certify_integral(eigendecompose(laplacian(g)),
                                                  cfg.integrality_tol);
            if (!cert.integral())
                throw std::runtime_error("spectrum is not integral");
            isp = *cert.spectrum;
        } else {
            isp = analytic_spectrum(spec);
        }
        const long long n = isp.n();
        row.n = n;
        if (cell.count < 1 || cell.count > n)
            throw ParameterError("marked count must lie in [1, n]");
        const Rational eps(cell.count, n);
        row.epsilon = eps.value();
        const SearchParams params = long_params(eps);
        const PhaseEstimationConfig pe =
            PhaseEstimationConfig::for_max_eigenvalue(static_cast<double>(isp.max_value()));
        const CostReport cost = [&] {
            CostReport c;
            c.oracle_queries = params.k;
            c.ctqw_calls = 2LL * pe.s * params.k;
            c.per_reflection_time = 4.0 * std::numbers::pi * (1.0 - 1.0 / (1LL << pe.s));
            c.total_evolution_time = params.k * c.per_reflection_time;
            return c;
        }();
        row.k = params.k;
        row.queries = cost.oracle_queries;
        row.ctqw_calls = cost.ctqw_calls;
        row.total_time = cost.total_evolution_time;
        const DepthResult d = depth(isp);
        row.d_l = d.d;
        row.two_pow_d_l = 1LL << d.d;
        row.sqrt_n_over_m = std::sqrt(static_cast<double>(n) / cell.count);
        row.alt_cost = static_cast<double>(1LL << d.d) * std::sqrt(static_cast<double>(n));
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

CommandOutput cmd_grid(const RunConfig& cfg) {
    const bool compare = cfg.command == Command::Compare;
    std::vector<Cell> cells;
    std::vector<int> counts = cfg.marked_counts;
    if (counts.empty()) counts.push_back(1);
    for (const std::string& graph : cfg.graph_args)
        for (int count : counts) cells.push_back({graph, count});

    std::vector<RowData> rows;
    rows.reserve(cells.size());
    for (const Cell& cell : cells)
        rows.push_back(compare ? eval_compare_cell(cfg, cell) : eval_sweep_cell(cfg, cell));

    if (cfg.format == OutputFormat::Csv) {
        CsvWriter csv;
        std::vector<std::string> header = {"graph",      "n",   "marked",  "epsilon",
                                           "k",          "queries", "ctqw_calls", "total_time",
                                           "d_l",        "two_pow_d_l"};
        if (compare) {
            header.push_back("sqrt_n_over_m");
            header.push_back("two_pow_d_l_sqrt_n");
        } else {
            header.push_back("success");
        }
        header.push_back("error");
        csv.row(header);
        for (const RowData& row : rows) csv.row(row_cells(row, compare));
        return {csv.take(), 0};
    }

    JsonWriter w;
    w.begin_object();
    emit_config(w, cfg);
    w.key("rows");
    w.begin_array();
    for (const RowData& row : rows) emit_row_json(w, row, compare);
    w.end_array();
    w.end_object();
    return {w.take(), 0};
}

} // namespace

CommandOutput execute(const RunConfig& cfg) {
    switch (cfg.command) {
        case Command::Families: return cmd_families(cfg);
        case Command::Spectrum:
        case Command::Certify:
        case Command::Depth: return cmd_spectral(cfg);
        case Command::Search: return cmd_search(cfg);
        case Command::Sweep:
        case Command::Compare: return cmd_grid(cfg);
    }
    throw std::logic_error("unknown command");
}

namespace {

// "epsilon=NUM/DEN" and "k=INT" assignments from --params.
void apply_params_overrides(RunConfig& cfg, const std::vector<std::string>& items) {
    for (const std::string& item : items) {
        if (item.rfind("epsilon=", 0) == 0) {
            const std::string frac = item.substr(8);
            const auto slash = frac.find('/');
            try {
                if (slash == std::string::npos) throw std::invalid_argument(frac);
                cfg.epsilon_override = Rational(std::stoll(frac.substr(0, slash)),
                                                std::stoll(frac.substr(slash + 1)));
            } catch (const std::exception&) {
                throw ParameterError("--params epsilon expects NUM/DEN, got '" + frac + "'");
            }
        } else if (item.rfind("k=", 0) == 0) {
            try {
                cfg.k_override = std::stoi(item.substr(2));
            } catch (const std::exception&) {
                throw ParameterError("--params k expects an integer, got '" + item + "'");
            }
        } else {
            throw ParameterError("--params expects epsilon=NUM/DEN or k=INT, got '" + item +
                                 "'");
        }
    }
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Deterministic quantum search on Laplacian-integral graphs "
                 "via controlled intermittent quantum walks"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string graph_single;
    std::vector<std::string> graph_multi;
    std::vector<std::string> params_items;
    std::string mode_str = "circuit";
    std::string format_str = "json";

    auto add_output_opts = [&](CLI::App* sub) {
        sub->add_option("--format", format_str, "output format: json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", cfg.out_path, "output path (default stdout)");
    };
    auto add_graph_opt = [&](CLI::App* sub) {
        sub->add_option("--graph", graph_single,
                        "graph spec 'family:p1,p2' or an edge-list path")
            ->required();
        sub->add_option("--integrality-tol", cfg.integrality_tol,
                        "certification tolerance (default 1e-6)");
    };
    auto add_grid_opts = [&](CLI::App* sub) {
        sub->add_option("--graph", graph_multi,
                        "graph spec 'family:p1,p2' or an edge-list path (repeatable)")
            ->required();
        sub->add_option("--marked-count", cfg.marked_counts, "marked-set sizes (grid axis)")
            ->delimiter(',');
        sub->add_option("--integrality-tol", cfg.integrality_tol,
                        "certification tolerance (default 1e-6)");
    };

    CLI::App* families = app.add_subcommand("families", "list the supported graph families");
    add_output_opts(families);

    CLI::App* spectrum = app.add_subcommand("spectrum", "numeric Laplacian eigenvalues");
    add_graph_opt(spectrum);
    add_output_opts(spectrum);

    CLI::App* certify = app.add_subcommand("certify", "integrality certification");
    add_graph_opt(certify);
    add_output_opts(certify);

    CLI::App* depth_cmd = app.add_subcommand("depth", "spectrum depth d_L and its chain");
    add_graph_opt(depth_cmd);
    add_output_opts(depth_cmd);

    CLI::App* search = app.add_subcommand("search", "run the deterministic search");
    add_graph_opt(search);
    add_output_opts(search);
    search->add_option("--marked", cfg.marked, "explicit marked vertices")->delimiter(',');
    search->add_option("--marked-count", cfg.marked_counts, "seeded marked-set size")
        ->delimiter(',');
    search->add_option("--seed", cfg.seed, "seed for marked-set selection");
    search->add_option("--mode", mode_str, "circuit or exact")
        ->check(CLI::IsMember({"circuit", "exact"}));
    search->add_option("--tol", cfg.tol, "success assertion tolerance (default 1e-9)");
    search->add_option("--params", params_items,
                       "search parameter overrides: epsilon=NUM/DEN [k=INT]")
        ->delimiter(',');
    search->add_flag("--bypass-certify", cfg.bypass_certify,
                     "run circuit mode without integrality certification");

    CLI::App* sweep = app.add_subcommand("sweep", "run searches over a spec grid");
    add_grid_opts(sweep);
    add_output_opts(sweep);
    sweep->add_option("--seed", cfg.seed, "seed for marked-set selection")->required();
    sweep->add_option("--mode", mode_str, "circuit or exact")
        ->check(CLI::IsMember({"circuit", "exact"}));

    CLI::App* compare = app.add_subcommand("compare", "closed-form cost columns per spec");
    add_grid_opts(compare);
    add_output_opts(compare);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }

    if (families->parsed()) cfg.command = Command::Families;
    if (spectrum->parsed()) cfg.command = Command::Spectrum;
    if (certify->parsed()) cfg.command = Command::Certify;
    if (depth_cmd->parsed()) cfg.command = Command::Depth;
    if (search->parsed()) cfg.command = Command::Search;
    if (sweep->parsed()) cfg.command = Command::Sweep;
    if (compare->parsed()) cfg.command = Command::Compare;
    cfg.mode = mode_str == "exact" ? SearchMode::Exact : SearchMode::Circuit;
    cfg.format = format_str == "csv" ? OutputFormat::Csv : OutputFormat::Json;
    if (cfg.command == Command::Sweep || cfg.command == Command::Compare) {
        cfg.graph_args = graph_multi;
    } else if (!graph_single.empty()) {
        cfg.graph_args = {graph_single};
    }

    try {
        apply_params_overrides(cfg, params_items);
        const CommandOutput out = execute(cfg);
        if (cfg.out_path.empty()) {
            std::cout << out.text;
        } else {
            std::ofstream file(cfg.out_path, std::ios::binary);
            if (!file) {
                std::cerr << "error: cannot write '" << cfg.out_path << "'\n";
                return 3;
            }
            file << out.text;
        }
        return out.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace ciqw::cli

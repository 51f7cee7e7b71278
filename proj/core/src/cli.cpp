#include <diagdensity/cli.hpp>

#include <diagdensity/arith.hpp>
#include <diagdensity/avg.hpp>
#include <diagdensity/errors.hpp>
#include <diagdensity/global.hpp>
#include <diagdensity/local.hpp>
#include <diagdensity/scan.hpp>
#include <diagdensity/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <variant>

namespace diagdensity::cli {

namespace {

using json = nlohmann::json;

// ---- output machinery -------------------------------------------------------

// Every float that reaches the user goes through this; 12 significant digits
// in CSV and the same quantized value as a JSON number.
std::string format_sig12(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct Cell {
    std::variant<std::monostate, std::int64_t, std::uint64_t, double, bool, std::string> value;

    Cell() = default;
    Cell(std::int64_t v) : value(v) {}
    Cell(std::uint64_t v) : value(v) {}
    Cell(int v) : value(static_cast<std::int64_t>(v)) {}
    Cell(unsigned v) : value(static_cast<std::uint64_t>(v)) {}
    Cell(double v) : value(v) {}
    Cell(bool v) : value(v) {}
    Cell(std::string v) : value(std::move(v)) {}
    Cell(const char* v) : value(std::string(v)) {}

    std::string text() const
    {
        struct V {
            std::string operator()(std::monostate) const { return ""; }
            std::string operator()(std::int64_t v) const { return std::to_string(v); }
            std::string operator()(std::uint64_t v) const { return std::to_string(v); }
            std::string operator()(double v) const { return format_sig12(v); }
            std::string operator()(bool v) const { return v ? "true" : "false"; }
            std::string operator()(const std::string& v) const { return v; }
        };
        return std::visit(V{}, value);
    }

    json to_json() const
    {
        struct V {
            json operator()(std::monostate) const { return nullptr; }
            json operator()(std::int64_t v) const { return v; }
            json operator()(std::uint64_t v) const { return v; }
            json operator()(double v) const
            {
                if (std::isnan(v)) return nullptr;
                return std::stod(format_sig12(v)); // quantize to the CSV digits
            }
            json operator()(bool v) const { return v; }
            json operator()(const std::string& v) const { return v; }
        };
        return std::visit(V{}, value);
    }
};

struct Table {
    std::string command;
    std::vector<std::pair<std::string, Cell>> inputs; // echoed semantic parameters
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> cells) { rows.push_back(std::move(cells)); }
};

constexpr const char* kSchemaVersion = "1";

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

void emit_csv(const Table& t, std::ostream& os)
{
    os << "# schema_version=" << kSchemaVersion << "\n";
    os << "# command=" << t.command << "\n";
    for (const auto& [key, cell] : t.inputs)
        os << "# " << key << "=" << cell.text() << "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        os << (i ? "," : "") << t.columns[i];
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << csv_escape(row[i].text());
        os << "\n";
    }
}

void emit_json(const Table& t, std::ostream& os)
{
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = t.command;
    json inputs = json::object();
    for (const auto& [key, cell] : t.inputs)
        inputs[key] = cell.to_json();
    doc["inputs"] = inputs;
    doc["columns"] = t.columns;
    json rows = json::array();
    for (const auto& row : t.rows) {
        json jrow = json::array();
        for (const auto& cell : row) jrow.push_back(cell.to_json());
        rows.push_back(jrow);
    }
    doc["rows"] = rows;
    os << doc.dump(2) << "\n";
}

void emit(const Table& t, const std::string& format, const std::string& out_path,
          std::ostream& fallback)
{
    std::ofstream file;
    std::ostream* os = &fallback;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file)
            throw std::invalid_argument("cannot open output file: " + out_path);
        os = &file;
    }
    if (format == "json")
        emit_json(t, *os);
    else
        emit_csv(t, *os);
}

// ---- shared option state ------------------------------------------------------

struct CommonOpts {
    std::string format = "csv";
    std::string out_path;
    unsigned threads = 0; // 0 = resolve from env / default 1
    std::uint64_t seed = 1;

    unsigned resolve_threads() const
    {
        if (threads > 0) return threads;
        if (const char* env = std::getenv("DIAGDENSITY_THREADS")) {
            long v = std::strtol(env, nullptr, 10);
            if (v > 0) return static_cast<unsigned>(v);
        }
        return 1;
    }
};

void add_common(CLI::App* cmd, CommonOpts& opts)
{
    cmd->add_option("--format", opts.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", opts.out_path, "write the data stream to a file instead of stdout");
    cmd->add_option("--threads", opts.threads,
                    "worker threads (default: DIAGDENSITY_THREADS or 1); never changes output bytes");
    cmd->add_option("--seed", opts.seed, "seed for randomized property tests");
}

std::vector<std::int64_t> parse_coeffs(const std::string& text)
{
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            throw std::invalid_argument("--coeffs: empty entry in list");
        std::size_t pos = 0;
        long long v = std::stoll(item, &pos);
        if (pos != item.size())
            throw std::invalid_argument("--coeffs: cannot parse '" + item + "'");
        out.push_back(v);
    }
    if (out.empty())
        throw std::invalid_argument("--coeffs: empty list");
    return out;
}

std::string coeffs_text(const std::vector<std::int64_t>& coeffs)
{
    std::string s;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(coeffs[i]);
    }
    return s;
}

std::vector<std::uint64_t> parse_prime_list(const std::string& text)
{
    std::vector<std::uint64_t> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stoull(item));
    return out;
}

// ---- subcommand handlers ------------------------------------------------------

struct LocalArgs {
    std::string coeffs;
    std::uint64_t k = 0;
    std::uint64_t prime_limit = 100;
    CommonOpts common;
};

int run_local(const LocalArgs& args, std::ostream& out)
{
    auto coefficients = parse_coeffs(args.coeffs);
    local::FormSpec form(coefficients, args.k);
    if (args.prime_limit > local::kDefaultValueSetCap)
        throw resource_error("local: prime_limit " + std::to_string(args.prime_limit) +
                             " exceeds the value-set bit-vector cap " +
                             std::to_string(local::kDefaultValueSetCap));
    auto primes = arith::PrimeTable::build(args.prime_limit);

    Table t;
    t.command = "local";
    t.inputs = {{"coeffs", coeffs_text(coefficients)},
                {"k", args.k},
                {"prime_limit", args.prime_limit}};
    t.columns = {"p", "m", "value_set_size", "density", "alpha", "density_frac"};
    for (std::uint64_t p : primes.primes) {
        auto rec = local::local_density(form, p);
        t.add_row({rec.prime, rec.coset_index, rec.value_set_size, rec.density.to_double(),
                   rec.alpha, rec.density.str()});
    }
    emit(t, args.common.format, args.common.out_path, out);
    return 0;
}

struct BoundArgs {
    std::string coeffs;
    std::uint64_t k = 0;
    unsigned s = 0;
    std::uint64_t prime_limit = 1000;
    double R = 4.0;
    bool no_cutoff = false;
    std::string mode; // "", "exact", "alpha"
    CommonOpts common;
};

int run_bound(const BoundArgs& args, std::ostream& out)
{
    std::optional<local::FormSpec> form;
    if (!args.coeffs.empty())
        form.emplace(parse_coeffs(args.coeffs), args.k);

    std::string mode = args.mode;
    if (mode.empty()) mode = form ? "exact" : "alpha";
    if (mode == "exact" && !form)
        throw std::invalid_argument("bound: exact mode requires --coeffs");

    unsigned s = args.s;
    if (form) {
        if (s != 0 && s != form->arity())
            throw std::invalid_argument("bound: --s disagrees with the coefficient count");
        s = static_cast<unsigned>(form->arity());
    }
    if (s == 0)
        throw std::invalid_argument("bound: --s is required without --coeffs");

    global::GlobalBoundConfig cfg;
    cfg.R = args.R;
    cfg.apply_cutoff = !args.no_cutoff;
    cfg.prime_limit = args.prime_limit;
    cfg.mode = mode == "exact" ? global::BoundMode::exact : global::BoundMode::alpha;
    if (cfg.mode == global::BoundMode::exact && args.prime_limit > local::kDefaultValueSetCap)
        throw resource_error("bound: prime_limit " + std::to_string(args.prime_limit) +
                             " exceeds the value-set bit-vector cap " +
                             std::to_string(local::kDefaultValueSetCap));

    global::GlobalBoundReport rep = mode == "exact"
                                        ? global::bound_exact(*form, cfg)
                                        : global::bound_alpha(args.k, s, cfg);

    Table t;
    t.command = "bound";
    t.inputs = {{"k", args.k}, {"s", s}, {"mode", mode}, {"prime_limit", args.prime_limit}};
    if (form) t.inputs.insert(t.inputs.begin(), {"coeffs", coeffs_text(form->coefficients)});
    if (mode == "alpha") {
        t.inputs.emplace_back("R", args.R);
        t.inputs.emplace_back("cutoff", !args.no_cutoff);
    }
    t.columns = {"kind", "p", "term", "k", "s", "log_inv_density_lower", "density_upper",
                 "conditional_reference"};
    for (const auto& [p, term] : rep.contributing)
        t.add_row({"term", p, term, Cell{}, Cell{}, Cell{}, Cell{}, Cell{}});
    t.add_row({"summary", Cell{}, Cell{}, rep.k, rep.s, rep.log_inv_density_lower,
               rep.density_upper, rep.conditional_reference});
    emit(t, args.common.format, args.common.out_path, out);
    return 0;
}

struct ScanArgs {
    std::string coeffs;
    std::uint64_t k = 0;
    std::uint64_t N = 0;
    std::uint64_t B = 0;
    std::string sieve_primes;
    bool witnesses = false;
    CommonOpts common;
};

int run_scan(const ScanArgs& args, std::ostream& out)
{
    local::FormSpec form(parse_coeffs(args.coeffs), args.k);
    scan::ScanConfig cfg;
    cfg.N = args.N;
    cfg.B = args.B;
    cfg.sieve_primes = parse_prime_list(args.sieve_primes);
    cfg.threads = args.common.resolve_threads();

    auto rep = scan::density_report(form, cfg);

    Table t;
    t.command = "scan";
    t.inputs = {{"coeffs", coeffs_text(form.coefficients)},
                {"k", args.k},
                {"N", args.N},
                {"B", args.B},
                {"sieve_primes", args.sieve_primes}};
    t.columns = {"kind", "n", "witness", "represented_count", "lower_density",
                 "admissible_count", "upper_density", "upper_density_frac", "window_aligned",
                 "consistent"};
    t.add_row({"summary", Cell{}, Cell{}, static_cast<std::uint64_t>(rep.represented.size()),
               rep.lower_density, rep.sieve_admissible_count,
               rep.sieve_upper_density.to_double(), rep.sieve_upper_density.str(),
               rep.window_aligned, rep.consistent});
    if (args.witnesses) {
        for (const auto& [n, x] : rep.witnesses) {
            std::string w;
            for (std::size_t i = 0; i < x.size(); ++i) {
                if (i) w += " ";
                w += std::to_string(x[i]);
            }
            t.add_row({"witness", n, w, Cell{}, Cell{}, Cell{}, Cell{}, Cell{}, Cell{}, Cell{}});
        }
    }
    emit(t, args.common.format, args.common.out_path, out);
    return 0;
}

struct AverageArgs {
    std::uint64_t X = 0;
    unsigned s = 3;
    std::uint64_t prime_limit = 1000;
    double R = 0.0; // 0: no cutoff
    std::string mode = "alpha";
    std::string coeffs;
    CommonOpts common;
};

int run_average(const AverageArgs& args, std::ostream& out)
{
    global::GlobalBoundConfig cfg;
    cfg.prime_limit = args.prime_limit;
    if (args.R > 0.0) {
        cfg.R = args.R;
        cfg.apply_cutoff = true;
    } else {
        cfg.apply_cutoff = false;
    }
    cfg.mode = args.mode == "exact" ? global::BoundMode::exact : global::BoundMode::alpha;

    std::optional<local::FormSpec> form;
    if (cfg.mode == global::BoundMode::exact) {
        if (args.coeffs.empty())
            throw std::invalid_argument("average: exact mode requires --coeffs");
        form.emplace(parse_coeffs(args.coeffs), 1);
    }

    auto rep = avg::average_log_inv_density(args.X, args.s, cfg, form,
                                            args.common.resolve_threads());

    Table t;
    t.command = "average";
    t.inputs = {{"X", args.X},
                {"s", args.s},
                {"mode", args.mode},
                {"prime_limit", args.prime_limit}};
    if (args.R > 0.0) t.inputs.emplace_back("R", args.R);
    if (form) t.inputs.emplace_back("coeffs", coeffs_text(form->coefficients));
    t.columns = {"kind", "k", "log_inv_density_lower", "average", "reference"};
    for (const auto& [k, v] : rep.per_k)
        t.add_row({"per_k", k, v, Cell{}, Cell{}});
    t.add_row({"summary", Cell{}, Cell{}, rep.average, rep.reference});
    emit(t, args.common.format, args.common.out_path, out);
    return 0;
}

struct Lemma3Args {
    double X = 0.0;
    double Y = 0.0;
    double eta = 0.0;
    unsigned s = 3;
    std::uint64_t prime_limit = 0; // 0: derive from X and Y
    CommonOpts common;
};

int run_lemma3(const Lemma3Args& args, std::ostream& out)
{
    double Y = 0.0;
    if (args.eta > 0.0) {
        // the eta route derives Y and must satisfy the window condition
        avg::AverageConfig window;
        window.X = args.X;
        window.s = args.s;
        window.eta = args.eta;
        window.validate();
        Y = window.resolve_Y();
    } else if (args.Y > 0.0) {
        Y = args.Y;
    } else {
        throw std::invalid_argument("lemma3: set --Y or --eta");
    }

    std::uint64_t limit = args.prime_limit;
    std::uint64_t need = static_cast<std::uint64_t>(
        std::ceil(std::max(2.0, (std::ceil(Y) - 1.0) * args.X)));
    if (limit == 0) limit = need;
    if (limit < need)
        throw std::invalid_argument("lemma3: --prime-limit below the largest psi query " +
                                    std::to_string(need));

    auto table = avg::PsiTable::build(limit);
    auto constants = avg::LandauConstants::compute();

    double lhs = avg::lemma3_lhs(table, args.X, Y);
    double main = avg::lemma3_main_term(constants, args.X, Y);
    double error = avg::lemma3_error_integral(table, args.X, Y, args.s);
    double dsum = avg::theorem1_double_sum(table, args.X, args.s, Y);
    double s1 = avg::s1_partial_summation_bound(table, args.X, args.s, Y);

    Table t;
    t.command = "lemma3";
    t.inputs = {{"X", args.X}, {"Y", Y}, {"s", args.s}, {"limit", limit}};
    if (args.eta > 0.0) t.inputs.emplace_back("eta", args.eta);
    t.columns = {"lhs", "main_term", "error_integral", "lhs_over_main", "lhs_over_cl_xy",
                 "theorem1_double_sum", "s1_partial_summation_bound"};
    t.add_row({lhs, main, error, lhs / main, lhs / (constants.C_L * args.X * Y), dsum, s1});
    emit(t, args.common.format, args.common.out_path, out);
    return 0;
}

struct LandauArgs {
    std::uint64_t X = 0;
    CommonOpts common;
};

int run_landau(const LandauArgs& args, std::ostream& out)
{
    auto constants = avg::LandauConstants::compute();

    Table t;
    t.command = "landau";
    t.inputs = {{"X", args.X},
                {"C_L", constants.C_L},
                {"c3", constants.c3},
                {"gamma", constants.gamma},
                {"prime_correction", constants.prime_correction},
                {"correction_prime_bound", constants.correction_prime_bound}};
    t.columns = {"x", "partial_sum", "prediction", "difference", "residual_vs_cl_logx"};

    std::vector<std::uint64_t> checkpoints;
    for (std::uint64_t x = 10; x < args.X; x *= 10) checkpoints.push_back(x);
    if (checkpoints.empty() || checkpoints.back() != args.X) checkpoints.push_back(args.X);

    for (std::uint64_t x : checkpoints) {
        auto cmp = avg::landau_sum(x, constants);
        t.add_row({cmp.x, cmp.partial_sum, cmp.prediction, cmp.partial_sum - cmp.prediction,
                   cmp.residual_vs_cl_logx});
    }
    emit(t, args.common.format, args.common.out_path, out);
    return 0;
}

int run_verify(const CommonOpts& common, std::ostream& out)
{
    verify::Options opts;
    opts.seed = common.seed;
    opts.threads = common.resolve_threads();
    auto results = verify::run_all(opts);

    Table t;
    t.command = "verify";
    t.inputs = {{"seed", common.seed}};
    t.columns = {"property", "cases", "violations", "status", "detail"};
    bool failed = false;
    for (const auto& r : results) {
        bool ok = r.violations == 0;
        failed = failed || !ok;
        t.add_row({r.name, r.cases, r.violations, ok ? "PASS" : "FAIL", r.detail});
    }
    emit(t, common.format, common.out_path, out);
    return failed ? 1 : 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"diagdensity: density bounds for diagonal forms a1*x1^k + ... + as*xs^k"};
    app.require_subcommand(1);

    LocalArgs local_args;
    auto* local_cmd = app.add_subcommand(
        "local", "per-prime local densities; columns: p, m (coset index), value_set_size, "
                 "density, alpha (uncapped), density_frac");
    local_cmd->add_option("--coeffs", local_args.coeffs, "coefficients a1,a2,...")->required();
    local_cmd->add_option("--k", local_args.k, "exponent k")->required();
    local_cmd->add_option("--prime-limit", local_args.prime_limit, "table covers primes <= limit");
    add_common(local_cmd, local_args.common);

    BoundArgs bound_args;
    auto* bound_cmd = app.add_subcommand(
        "bound", "global density bound for one k; term rows (p, term) then a summary row with "
                 "log_inv_density_lower, density_upper, conditional_reference");
    bound_cmd->add_option("--coeffs", bound_args.coeffs, "coefficients (switches default mode to exact)");
    bound_cmd->add_option("--k", bound_args.k, "exponent k")->required();
    bound_cmd->add_option("--s", bound_args.s, "number of variables (alpha mode)");
    bound_cmd->add_option("--prime-limit", bound_args.prime_limit, "primes scanned up to this limit");
    bound_cmd->add_option("--R", bound_args.R, "cutoff divisor in Z = k^(1+1/(s-1))/R (alpha mode)");
    bound_cmd->add_flag("--no-cutoff", bound_args.no_cutoff,
                        "alpha mode: keep every p ≡ 1 (mod k) up to --prime-limit");
    bound_cmd->add_option("--mode", bound_args.mode, "exact|alpha")
        ->check(CLI::IsMember({"exact", "alpha"}));
    add_common(bound_cmd, bound_args.common);

    ScanArgs scan_args;
    auto* scan_cmd = app.add_subcommand(
        "scan", "two-sided window density: summary row with represented_count, lower_density, "
                "admissible_count, upper_density; --witnesses adds witness rows");
    scan_cmd->add_option("--coeffs", scan_args.coeffs, "coefficients a1,a2,...")->required();
    scan_cmd->add_option("--k", scan_args.k, "exponent k")->required();
    scan_cmd->add_option("--N", scan_args.N, "window [1, N]")->required();
    scan_cmd->add_option("--B", scan_args.B, "coordinate box |x_i| <= B")->required();
    scan_cmd->add_option("--sieve-primes", scan_args.sieve_primes, "residue sieve primes p1,p2,...");
    scan_cmd->add_flag("--witnesses", scan_args.witnesses, "emit one witness row per represented n");
    add_common(scan_cmd, scan_args.common);

    AverageArgs average_args;
    auto* average_cmd = app.add_subcommand(
        "average", "average of the per-k bound over 1 <= k < X; per_k rows then a summary row "
                   "with the average and the reference X^(1/(s-1))/log X");
    average_cmd->add_option("--X", average_args.X, "average over exponents k < X")->required();
    average_cmd->add_option("--s", average_args.s, "number of variables");
    average_cmd->add_option("--prime-limit", average_args.prime_limit, "primes scanned up to this limit");
    average_cmd->add_option("--R", average_args.R,
                            "enable the Z cutoff with this divisor (default: no cutoff)");
    average_cmd->add_option("--mode", average_args.mode, "alpha|exact")
        ->check(CLI::IsMember({"exact", "alpha"}));
    average_cmd->add_option("--coeffs", average_args.coeffs, "coefficients for exact mode");
    add_common(average_cmd, average_args.common);

    Lemma3Args lemma3_args;
    auto* lemma3_cmd = app.add_subcommand(
        "lemma3", "psi-sum diagnostics over 1 <= m < Y: lhs, main_term, error_integral, ratios, "
                  "double sum and partial-summation bound");
    lemma3_cmd->add_option("--X", lemma3_args.X, "window scale X")->required();
    lemma3_cmd->add_option("--Y", lemma3_args.Y, "number of progressions (m < Y)");
    lemma3_cmd->add_option("--eta", lemma3_args.eta, "derive Y = X^(1/(s-1+eta)), eta in (0, 1/2)");
    lemma3_cmd->add_option("--s", lemma3_args.s, "exponent in the window lower end (m+1)^s");
    lemma3_cmd->add_option("--prime-limit", lemma3_args.prime_limit,
                           "psi table limit (default: derived from X and Y)");
    add_common(lemma3_cmd, lemma3_args.common);

    LandauArgs landau_args;
    auto* landau_cmd = app.add_subcommand(
        "landau", "totient-sum partial sums against the predicted main term at powers of ten up to X");
    landau_cmd->add_option("--X", landau_args.X, "largest x")->required();
    add_common(landau_cmd, landau_args.common);

    CommonOpts verify_common;
    auto* verify_cmd = app.add_subcommand(
        "verify", "run the full property suite; exits 1 on any violation");
    add_common(verify_cmd, verify_common);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        auto seen = app.get_subcommands();
        out << (seen.empty() ? app.help() : seen.front()->help());
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (local_cmd->parsed()) return run_local(local_args, out);
        if (bound_cmd->parsed()) return run_bound(bound_args, out);
        if (scan_cmd->parsed()) return run_scan(scan_args, out);
        if (average_cmd->parsed()) return run_average(average_args, out);
        if (lemma3_cmd->parsed()) return run_lemma3(lemma3_args, out);
        if (landau_cmd->parsed()) return run_landau(landau_args, out);
        if (verify_cmd->parsed()) return run_verify(verify_common, out);
    } catch (const resource_error& e) {
        err << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const std::overflow_error& e) {
        err << "arithmetic error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        err << "run 'diagdensity <subcommand> --help' for usage\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

} // namespace diagdensity::cli

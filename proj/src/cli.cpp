#include "eigenprime/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <variant>

#include "eigenprime/arith.hpp"
#include "eigenprime/counting.hpp"
#include "eigenprime/density.hpp"
#include "eigenprime/errors.hpp"
#include "eigenprime/regions.hpp"

namespace eigenprime::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Records: one schema, rendered as CSV or JSON.

struct Real {
    double value;
    int digits = 10;
};

using Cell = std::variant<std::monostate, u128, std::int64_t, Real, std::string, bool>;

struct Record {
    std::vector<std::pair<std::string, Cell>> fields;

    Record& add(std::string key, Cell value) {
        fields.emplace_back(std::move(key), std::move(value));
        return *this;
    }
};

std::string format_real(const Real& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", r.digits, r.value);
    return buf;
}

std::string csv_cell(const Cell& cell) {
    struct {
        std::string operator()(std::monostate) const { return ""; }
        std::string operator()(u128 v) const { return to_string(v); }
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(const Real& r) const { return format_real(r); }
        std::string operator()(const std::string& s) const { return s; }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
    } visitor;
    return std::visit(visitor, cell);
}

ordered_json json_cell(const Cell& cell) {
    struct {
        ordered_json operator()(std::monostate) const { return nullptr; }
        ordered_json operator()(u128 v) const {
            // Integers beyond 2^53 are not exact in every JSON reader.
            if (v < (u128{1} << 53)) return static_cast<std::uint64_t>(v);
            return to_string(v);
        }
        ordered_json operator()(std::int64_t v) const {
            if (v < (std::int64_t{1} << 53) && v > -(std::int64_t{1} << 53)) return v;
            return std::to_string(v);
        }
        ordered_json operator()(const Real& r) const { return std::stod(format_real(r)); }
        ordered_json operator()(const std::string& s) const { return s; }
        ordered_json operator()(bool b) const { return b; }
    } visitor;
    return std::visit(visitor, cell);
}

ordered_json to_json(const Record& r) {
    ordered_json obj = ordered_json::object();
    for (const auto& [key, cell] : r.fields) obj[key] = json_cell(cell);
    return obj;
}

void emit(std::ostream& os, Format format, const std::vector<Record>& records, bool as_array) {
    if (format == Format::json) {
        if (!as_array && records.size() == 1) {
            os << to_json(records.front()).dump() << '\n';
            return;
        }
        ordered_json arr = ordered_json::array();
        for (const auto& r : records) arr.push_back(to_json(r));
        os << arr.dump() << '\n';
        return;
    }
    if (records.empty()) return;
    const auto& head = records.front().fields;
    for (std::size_t i = 0; i < head.size(); ++i) os << (i ? "," : "") << head[i].first;
    os << '\n';
    for (const auto& r : records) {
        for (std::size_t i = 0; i < r.fields.size(); ++i) os << (i ? "," : "") << csv_cell(r.fields[i].second);
        os << '\n';
    }
}

Cell optional_real(const std::optional<double>& v) {
    if (!v) return std::monostate{};
    return Real{*v};
}

// ---------------------------------------------------------------------------

ArithTables tables_for(std::uint64_t max_n) {
    const std::uint64_t limit = std::max<std::uint64_t>(required_table_limit(max_n), cuboid_width(kMaxBruteN));
    return ArithTables::build(std::min(limit, ArithTables::kMaxLimit));
}

std::uint64_t max_of(const std::vector<std::uint64_t>& v) { return *std::max_element(v.begin(), v.end()); }

struct CountsFlags {
    bool box = false, surface = false, plane = false;
};

CountsFlags flags_for(What what) {
    switch (what) {
        case What::box: return {true, false, false};
        case What::surface: return {false, true, false};
        case What::plane: return {false, false, true};
        case What::all: return {true, true, true};
    }
    return {};
}

struct Measured {
    CountReport counts;
    std::optional<PlaneCounts> plane;
};

Measured measure(const ArithTables& tables, std::uint64_t N, CountMethod method, CountsFlags flags, unsigned threads) {
    Measured m;
    m.counts.N = N;
    m.counts.method = method;
    if (method == CountMethod::brute && (flags.box || flags.surface)) {
        m.counts = brute_force_counts(tables, N);
    } else {
        if (flags.box) {
            m.counts.x_plus = count_X_plus(tables, N, method, threads);
            m.counts.y_plus = count_Y_plus(tables, N, method, threads);
        }
        if (flags.surface) {
            m.counts.xs = count_XS(tables, N, method, threads);
            m.counts.ys = count_YS(tables, N, method, threads);
        }
    }
    if (flags.plane) m.plane = plane_baseline_counts(tables, N, method, threads);
    return m;
}

bool same(const Measured& a, const Measured& b, CountsFlags flags) {
    if (flags.box && (a.counts.x_plus != b.counts.x_plus || a.counts.y_plus != b.counts.y_plus)) return false;
    if (flags.surface && (a.counts.xs != b.counts.xs || a.counts.ys != b.counts.ys)) return false;
    if (flags.plane && !(a.plane == b.plane)) return false;
    return true;
}

struct Evaluation {
    Measured result;
    std::optional<bool> agree;
};

Evaluation evaluate(const ArithTables& tables, std::uint64_t N, MethodChoice method, CountsFlags flags,
                    unsigned threads) {
    if (method == MethodChoice::both) {
        Measured fast = measure(tables, N, CountMethod::fast, flags, threads);
        Measured brute = measure(tables, N, CountMethod::brute, flags, threads);
        return {fast, same(fast, brute, flags)};
    }
    const auto m = method == MethodChoice::fast ? CountMethod::fast : CountMethod::brute;
    return {measure(tables, N, m, flags, threads), std::nullopt};
}

int cmd_count(const RunConfig& cfg, std::ostream& os) {
    const std::uint64_t N = *cfg.n;
    const CountsFlags flags = flags_for(cfg.what);
    // Surface counts alone only need small tables; beyond the sieve limit
    // primality falls back to the witness test.
    const ArithTables tables = (flags.box || flags.plane) ? tables_for(N)
                                                          : ArithTables::build(std::min<std::uint64_t>(
                                                                std::max<std::uint64_t>(required_table_limit(N), 400),
                                                                ArithTables::kMaxLimit));
    const Evaluation ev = evaluate(tables, N, cfg.method, flags, cfg.threads);
    Record r;
    r.add("N", u128{N});
    if (flags.box) r.add("x_plus", ev.result.counts.x_plus).add("y_plus", ev.result.counts.y_plus);
    if (flags.surface) r.add("xs", u128{ev.result.counts.xs}).add("ys", u128{ev.result.counts.ys});
    if (flags.plane) r.add("xa", ev.result.plane->xa).add("ya", ev.result.plane->ya);
    if (ev.agree) r.add("agree", *ev.agree);
    emit(os, cfg.format, {r}, false);
    return ev.agree.value_or(true) ? kExitOk : kExitVerificationFailed;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& os) {
    const CountsFlags flags{true, true, cfg.what == What::plane || cfg.what == What::all};
    const ArithTables tables = tables_for(max_of(cfg.ns));
    std::vector<Record> records;
    bool all_agree = true;
    for (std::uint64_t N : cfg.ns) {
        const Evaluation ev = evaluate(tables, N, cfg.method, flags, cfg.threads);
        const DensitySample s = make_sample(ev.result.counts, ev.result.plane);
        Record r;
        r.add("N", u128{s.N})
            .add("x_plus", s.x_plus)
            .add("y_plus", s.y_plus)
            .add("xs", u128{s.xs})
            .add("ys", u128{s.ys})
            .add("p_plus", Real{s.p_plus})
            .add("p_s", Real{s.p_s})
            .add("ratio", optional_real(s.ratio))
            .add("p_plus_logN", Real{s.p_plus_logN})
            .add("p_s_logN", Real{s.p_s_logN});
        if (flags.plane) {
            r.add("xa", s.plane->xa).add("ya", s.plane->ya).add("plane_ratio", optional_real(s.plane_ratio));
        }
        if (ev.agree) {
            r.add("agree", *ev.agree);
            all_agree = all_agree && *ev.agree;
        }
        records.push_back(std::move(r));
    }
    emit(os, cfg.format, records, true);
    return all_agree ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------------------
// verify

struct Suite {
    explicit Suite(std::string n) : name(std::move(n)) {}

    std::string name;
    bool pass = true;
    std::uint64_t checked = 0;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

Suite verify_cuboid(const ArithTables& tables, std::uint64_t max_n, unsigned threads) {
    Suite s{"cuboid_counts"};
    const auto brute = brute_force_counts_upto(tables, max_n);
    for (std::uint64_t N = 1; N <= max_n; ++N) {
        const CountReport fast = count_all(tables, N, CountMethod::fast, threads);
        if (!fast.same_counts(brute[N - 1])) s.fail("mismatch at N=" + std::to_string(N));
        ++s.checked;
    }
    return s;
}

Suite verify_plane(const ArithTables& tables, std::uint64_t max_n, unsigned threads) {
    Suite s{"plane_counts"};
    const auto brute = brute_plane_counts_upto(tables, max_n);
    for (std::uint64_t N = 1; N <= max_n; ++N) {
        if (!(plane_baseline_counts(tables, N, CountMethod::fast, threads) == brute[N - 1]))
            s.fail("mismatch at N=" + std::to_string(N));
        ++s.checked;
    }
    return s;
}

Suite verify_enumeration(std::uint64_t max_n) {
    Suite s{"surface_enumeration"};
    const auto cuboid_points = brute_force_surface_points(max_n);
    for (std::uint64_t N = 1; N <= max_n; ++N) {
        std::vector<Triple> expected;
        for (const auto& z : cuboid_points)
            if (in_cuboid(z, N)) expected.push_back(z);
        std::vector<Triple> got;
        for (const auto& pt : enumerate_coprime_solutions(N)) {
            const Triple& z = pt.z;
            const bool shape_ok = on_surface(z) && is_coprime(z) && in_cuboid(z, N) &&
                                  3 * z.z0 * z.z0 <= 4 * z.z1 * z.z1 && 3 * z.z2 * z.z2 <= 4 * z.z1 * z.z1;
            if (!shape_ok) s.fail("bad image " + to_string(z) + " at N=" + std::to_string(N));
            got.push_back(z);
        }
        std::sort(got.begin(), got.end());
        if (got != expected) s.fail("point set differs at N=" + std::to_string(N));
        ++s.checked;
    }
    return s;
}

Suite verify_classify(std::uint64_t max_m) {
    Suite s{"classify_roundtrip"};
    for (std::uint64_t m = 2; m <= max_m; ++m)
        for (std::uint64_t n = 1; n < m; ++n) {
            if (!in_omega(m, n)) continue;
            for (int k = 1; k <= 4; ++k) {
                const auto c = classify(phi_map(k, m, n));
                if (static_cast<int>(c.tag) != k || !c.pair || c.pair->m != m || c.pair->n != n)
                    s.fail("round trip failed for k=" + std::to_string(k) + " (m,n)=(" + std::to_string(m) + "," +
                           std::to_string(n) + ")");
                ++s.checked;
            }
        }
    return s;
}

Suite verify_recurrences(const ArithTables& tables, std::uint64_t bound) {
    Suite s{"totient_recurrences"};
    const RecurrenceCheck check = check_div3_recurrences(tables, bound);
    s.checked = check.checked;
    if (check.first_integer_mismatch) s.fail("integer mismatch at N=" + std::to_string(check.first_integer_mismatch));
    if (check.first_rational_mismatch)
        s.fail("rational mismatch at N=" + std::to_string(check.first_rational_mismatch));
    return s;
}

Suite verify_regions(const ArithTables& tables, std::uint64_t max_m) {
    Suite s{"regions"};
    const std::vector<std::pair<Ratio, Ratio>> slopes = {{Ratio(1), Ratio(-1)},   {Ratio(2), Ratio(-1, 2)},
                                                         {Ratio(3), Ratio(0)},    {Ratio(1, 3), Ratio(-5, 7)},
                                                         {Ratio(5, 4), Ratio(2, 7)}};
    for (std::int64_t M : {std::int64_t{1}, std::int64_t{10}, std::int64_t{37}, static_cast<std::int64_t>(max_m)}) {
        for (const auto& [k1, k2] : slopes) {
            TriangleRegion r{M, k1, k2, std::nullopt};
            if (count_region(tables, r, CountMethod::fast) != count_region(tables, r, CountMethod::brute))
                s.fail("triangle mismatch at M=" + std::to_string(M) + " k1=" + k1.str() + " k2=" + k2.str());
            r.k3 = k1 + Ratio(3, 2);
            if (count_region_cut(tables, r, CountMethod::fast) != count_region_cut(tables, r, CountMethod::brute))
                s.fail("cut mismatch at M=" + std::to_string(M) + " k1=" + k1.str() + " k2=" + k2.str());
            s.checked += 2;
        }
        for (std::uint64_t p : {2, 3, 5}) {
            const auto side = static_cast<std::uint64_t>(M);
            if (count_coprime_box_modp(tables, side, p, CountMethod::fast) !=
                count_coprime_box_modp(tables, side, p, CountMethod::brute))
                s.fail("box mismatch at M=" + std::to_string(M) + " p=" + std::to_string(p));
            ++s.checked;
        }
    }
    return s;
}

int cmd_verify(const RunConfig& cfg, std::ostream& os) {
    const std::uint64_t max_n = cfg.max_n;
    if (max_n == 0) throw domain_error("--max-n must be positive");
    if (max_n > kMaxBruteN) throw capacity_error("verify is capped at --max-n 300");
    const std::uint64_t recurrence_bound = std::min<std::uint64_t>(ArithTables::kMaxExactRationalN, 50 * max_n);
    const ArithTables tables = ArithTables::build(std::max<std::uint64_t>(recurrence_bound, 400));

    std::vector<Suite> suites;
    suites.push_back(verify_cuboid(tables, max_n, cfg.threads));
    suites.push_back(verify_plane(tables, max_n, cfg.threads));
    suites.push_back(verify_enumeration(max_n));
    suites.push_back(verify_classify(max_n));
    suites.push_back(verify_recurrences(tables, recurrence_bound));
    suites.push_back(verify_regions(tables, max_n));

    std::vector<Record> records;
    bool ok = true;
    for (const auto& s : suites) {
        Record r;
        r.add("suite", s.name).add("pass", s.pass).add("checked", u128{s.checked}).add("detail", s.detail);
        records.push_back(std::move(r));
        ok = ok && s.pass;
    }
    emit(os, cfg.format, records, true);
    return ok ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------------------

int cmd_regions(const RunConfig& cfg, std::ostream& os) {
    if (!cfg.m) throw domain_error("regions needs --m");
    const auto M = *cfg.m;
    if (M < 0) throw domain_error("--m must be nonnegative");
    const auto side = static_cast<std::uint64_t>(M);
    const ArithTables tables = ArithTables::build(std::max<std::uint64_t>(side, 2));
    Record r;
    std::optional<bool> agree;

    if (cfg.p) {
        const std::uint64_t p = *cfg.p;
        auto count = [&](CountMethod m) { return count_coprime_box_modp(tables, side, p, m); };
        const std::uint64_t value = cfg.method == MethodChoice::brute ? count(CountMethod::brute) : count(CountMethod::fast);
        if (cfg.method == MethodChoice::both) agree = value == count(CountMethod::brute);
        const double density = static_cast<double>(p) / static_cast<double>(p + 1) * 6.0 /
                               (std::numbers::pi * std::numbers::pi);
        r.add("M", std::int64_t{M})
            .add("p", u128{p})
            .add("count", u128{value})
            .add("predicted", Real{density * static_cast<double>(M) * static_cast<double>(M)});
    } else {
        if (!cfg.k1 || !cfg.k2) throw domain_error("regions needs --k1 and --k2 (or --p for the box count)");
        const TriangleRegion region{M, *cfg.k1, *cfg.k2, cfg.k3};
        auto count = [&](CountMethod m) {
            return region.k3 ? count_region_cut(tables, region, m, cfg.threads)
                             : count_region(tables, region, m, cfg.threads);
        };
        const RegionCount value =
            cfg.method == MethodChoice::brute ? count(CountMethod::brute) : count(CountMethod::fast);
        if (cfg.method == MethodChoice::both) agree = value == count(CountMethod::brute);
        const RegionPrediction pred = asymptotic_prediction(region);
        r.add("M", std::int64_t{M}).add("k1", region.k1.str()).add("k2", region.k2.str());
        r.add("k3", region.k3 ? Cell{region.k3->str()} : Cell{std::monostate{}});
        r.add("total", u128{value.total_coprime});
        if (cfg.mod3)
            r.add("mod3_distinct", u128{value.coprime_mod3_distinct}).add("mod3_equal", u128{value.coprime_mod3_equal});
        r.add("area", Real{triangle_area(region)}).add("predicted_total", Real{pred.total});
        if (cfg.mod3) r.add("predicted_mod3_distinct", Real{pred.mod3_distinct});
    }
    if (agree) r.add("agree", *agree);
    emit(os, cfg.format, {r}, false);
    return agree.value_or(true) ? kExitOk : kExitVerificationFailed;
}

int cmd_classify(const RunConfig& cfg, std::ostream& os) {
    if (!cfg.triple) throw domain_error("classify needs --triple a,b,c");
    const Triple z = *cfg.triple;
    const Classification c = classify(z);
    Record r;
    r.add("z0", u128{z.z0}).add("z1", u128{z.z1}).add("z2", u128{z.z2});
    r.add("delta", std::int64_t{static_cast<int>(c.tag)});
    r.add("m", c.pair ? Cell{u128{c.pair->m}} : Cell{std::monostate{}});
    r.add("n", c.pair ? Cell{u128{c.pair->n}} : Cell{std::monostate{}});
    emit(os, cfg.format, {r}, false);
    return kExitOk;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& os) {
    std::vector<Record> records;
    for (const auto& pt : enumerate_coprime_solutions(*cfg.n, cfg.threads)) {
        Record r;
        r.add("delta", std::int64_t{static_cast<int>(pt.tag)});
        r.add("m", pt.pair ? Cell{u128{pt.pair->m}} : Cell{std::monostate{}});
        r.add("n", pt.pair ? Cell{u128{pt.pair->n}} : Cell{std::monostate{}});
        r.add("z0", u128{pt.z.z0}).add("z1", u128{pt.z.z1}).add("z2", u128{pt.z.z2});
        records.push_back(std::move(r));
    }
    emit(os, cfg.format, records, true);
    return kExitOk;
}

int cmd_charpoly(const RunConfig& cfg, std::ostream& os) {
    const double degrees = cfg.angle_deg.value_or(120.0);
    const SurfacePolynomial poly = dihedral_char_poly(degrees * std::numbers::pi / 180.0);
    Record r;
    r.add("angle_deg", Real{degrees, 12})
        .add("c00", Real{poly.c00, 15})
        .add("c11", Real{poly.c11, 15})
        .add("c22", Real{poly.c22, 15})
        .add("c02", Real{poly.c02, 15})
        .add("residual", Real{poly.residual, 3});
    emit(os, cfg.format, {r}, false);
    return kExitOk;
}

int cmd_constants(const RunConfig& cfg, std::ostream& os) {
    const ConstantsTable c = constants();
    const std::vector<std::pair<std::string, double>> rows = {
        {"zeta2", c.zeta2},         {"zeta3", c.zeta3},           {"three_zeta3", c.three_zeta3},
        {"lower_norm", c.lower_norm}, {"upper_norm", c.upper_norm}, {"liminf_bound", c.liminf_bound},
        {"limsup_bound", c.limsup_bound}, {"ys_lower", c.ys_lower}, {"ys_upper", c.ys_upper},
        {"plane_ratio", c.plane_ratio}, {"ys_limit", c.ys_limit}};
    if (cfg.format == Format::json) {
        Record r;
        for (const auto& [name, value] : rows) r.add(name, Real{value, 12});
        emit(os, cfg.format, {r}, false);
    } else {
        std::vector<Record> records;
        for (const auto& [name, value] : rows) {
            Record r;
            r.add("name", name).add("value", Real{value, 12});
            records.push_back(std::move(r));
        }
        emit(os, cfg.format, records, true);
    }
    return kExitOk;
}

int dispatch(const RunConfig& cfg, std::ostream& os) {
    switch (cfg.command) {
        case Command::count: return cmd_count(cfg, os);
        case Command::sweep: return cmd_sweep(cfg, os);
        case Command::verify: return cmd_verify(cfg, os);
        case Command::regions: return cmd_regions(cfg, os);
        case Command::classify: return cmd_classify(cfg, os);
        case Command::enumerate: return cmd_enumerate(cfg, os);
        case Command::charpoly: return cmd_charpoly(cfg, os);
        case Command::constants: return cmd_constants(cfg, os);
    }
    return kExitInvalidInput;
}

// ---------------------------------------------------------------------------
// argument parsing

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    return parts;
}

std::uint64_t parse_u64(const std::string& text) {
    const u128 v = parse_u128(text);
    if (v > std::numeric_limits<std::uint64_t>::max()) throw std::out_of_range("integer too large: " + text);
    return static_cast<std::uint64_t>(v);
}

}  // namespace

unsigned threads_from_env() {
    const char* env = std::getenv("EIGENPRIME_THREADS");
    if (env == nullptr || *env == '\0') return 1;
    try {
        const std::uint64_t v = parse_u64(env);
        return v == 0 ? 1 : static_cast<unsigned>(std::min<std::uint64_t>(v, 1024));
    } catch (const std::exception&) {
        return 1;
    }
}

ParseOutcome parse_args(int argc, const char* const* argv, unsigned default_threads) {
    CLI::App app{"Exact prime and coprime triple counts on the S3 eigensurface", "eigenprime"};
    app.require_subcommand(1);

    RunConfig cfg;
    cfg.threads = default_threads;
    std::string method = "fast", format = "json", what = "all";
    std::string ns_text, k1_text, k2_text, k3_text, triple_text;
    std::optional<std::uint64_t> from, to, factor;
    std::optional<std::string> out;

    const std::map<std::string, MethodChoice> methods{
        {"fast", MethodChoice::fast}, {"brute", MethodChoice::brute}, {"both", MethodChoice::both}};
    const std::map<std::string, Format> formats{{"csv", Format::csv}, {"json", Format::json}};
    const std::map<std::string, What> whats{
        {"box", What::box}, {"surface", What::surface}, {"plane", What::plane}, {"all", What::all}};

    auto common = [&](CLI::App* sub) {
        sub->add_option("--method", method, "fast, brute or both")->check(CLI::IsMember({"fast", "brute", "both"}));
        sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", out, "write results to this file");
    };

    auto* count = app.add_subcommand("count", "exact counts at one N");
    count->add_option("--n", cfg.n, "N")->required()->check(CLI::PositiveNumber);
    count->add_option("--what", what, "box, surface, plane or all")
        ->check(CLI::IsMember({"box", "surface", "plane", "all"}));
    common(count);

    auto* sweep_cmd = app.add_subcommand("sweep", "densities over a list or geometric range of N");
    sweep_cmd->add_option("--ns", ns_text, "comma-separated N values");
    sweep_cmd->add_option("--from", from, "first N")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--to", to, "last N (inclusive bound)")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--factor", factor, "geometric step")->check(CLI::Range(2, 1000000));
    sweep_cmd->add_option("--what", what, "all adds the plane baseline columns")
        ->check(CLI::IsMember({"box", "surface", "plane", "all"}));
    common(sweep_cmd);

    auto* verify = app.add_subcommand("verify", "fast counters against brute-force oracles");
    verify->add_option("--max-n", cfg.max_n, "largest N checked (<= 300)")->check(CLI::PositiveNumber);
    common(verify);

    auto* regions = app.add_subcommand("regions", "coprime lattice points in triangles and boxes");
    regions->add_option("--m", cfg.m, "M");
    regions->add_option("--k1", k1_text, "slope of l1 (p/q)");
    regions->add_option("--k2", k2_text, "slope of l2 (p/q)");
    regions->add_option("--k3", k3_text, "slope of l3 (p/q), optional");
    regions->add_flag("--mod3", cfg.mod3, "report the mod-3 split");
    regions->add_option("--p", cfg.p, "prime modulus for the box count");
    common(regions);

    auto* classify_cmd = app.add_subcommand("classify", "locate a coprime surface point in the parameterization");
    classify_cmd->add_option("--triple", triple_text, "z0,z1,z2")->required();
    common(classify_cmd);

    auto* enumerate = app.add_subcommand("enumerate", "list the coprime surface points with z1 <= N");
    enumerate->add_option("--n", cfg.n, "N")->required()->check(CLI::PositiveNumber);
    common(enumerate);

    auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial of a dihedral representation");
    charpoly->add_option("--angle-deg", cfg.angle_deg, "rotation angle in degrees (default 120)");
    common(charpoly);

    auto* constants_cmd = app.add_subcommand("constants", "closed-form constants");
    common(constants_cmd);

    ParseOutcome outcome;
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        outcome.exit_code = kExitOk;
        outcome.message = app.help();
        return outcome;
    } catch (const CLI::CallForAllHelp&) {
        outcome.exit_code = kExitOk;
        outcome.message = app.help("", CLI::AppFormatMode::All);
        return outcome;
    } catch (const CLI::ParseError& e) {
        outcome.exit_code = kExitInvalidInput;
        outcome.message = e.what();
        return outcome;
    }

    try {
        const auto* sub = app.get_subcommands().front();
        const std::string name = sub->get_name();
        if (name == "count") cfg.command = Command::count;
        else if (name == "sweep") cfg.command = Command::sweep;
        else if (name == "verify") cfg.command = Command::verify;
        else if (name == "regions") cfg.command = Command::regions;
        else if (name == "classify") cfg.command = Command::classify;
        else if (name == "enumerate") cfg.command = Command::enumerate;
        else if (name == "charpoly") cfg.command = Command::charpoly;
        else cfg.command = Command::constants;

        cfg.method = methods.at(method);
        cfg.format = formats.at(format);
        cfg.what = whats.at(what);
        cfg.out = out;

        if (cfg.command == Command::sweep) {
            if (!ns_text.empty()) {
                if (from || to || factor) throw std::invalid_argument("use either --ns or --from/--to/--factor");
                for (const auto& part : split_commas(ns_text)) cfg.ns.push_back(parse_u64(part));
            } else {
                if (!from || !to || !factor) throw std::invalid_argument("sweep needs --ns or --from, --to and --factor");
                for (u128 v = *from; v <= *to; v *= *factor) cfg.ns.push_back(static_cast<std::uint64_t>(v));
            }
            if (cfg.ns.empty()) throw std::invalid_argument("sweep needs at least one N");
            for (std::size_t i = 0; i < cfg.ns.size(); ++i) {
                if (cfg.ns[i] == 0) throw std::invalid_argument("sweep values must be positive");
                if (i > 0 && cfg.ns[i] <= cfg.ns[i - 1]) throw std::invalid_argument("sweep values must ascend");
            }
        }
        if (!k1_text.empty()) cfg.k1 = Ratio::parse(k1_text);
        if (!k2_text.empty()) cfg.k2 = Ratio::parse(k2_text);
        if (!k3_text.empty()) cfg.k3 = Ratio::parse(k3_text);
        if (!triple_text.empty()) {
            const auto parts = split_commas(triple_text);
            if (parts.size() != 3) throw std::invalid_argument("--triple needs three comma-separated integers");
            cfg.triple = Triple{parse_u64(parts[0]), parse_u64(parts[1]), parse_u64(parts[2])};
        }
    } catch (const std::exception& e) {
        outcome.exit_code = kExitInvalidInput;
        outcome.message = e.what();
        return outcome;
    }
    outcome.config = cfg;
    return outcome;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        std::ostringstream buffer;
        const int status = dispatch(config, buffer);
        if (config.out) {
            std::ofstream file(*config.out, std::ios::binary | std::ios::trunc);
            if (!file) {
                err << "error: cannot open " << *config.out << " for writing\n";
                return kExitInvalidInput;
            }
            file << buffer.str();
        } else {
            out << buffer.str();
        }
        if (status == kExitVerificationFailed) err << "verification failed\n";
        return status;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const capacity_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
}

}  // namespace eigenprime::cli

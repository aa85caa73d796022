// primegap - CLI front-end for the sieve/equidistribution library.
//
// Subcommands: primes, admissible, weights, sums, bv, omega. Profiles: paper
// (full-strength parameters, omega and bounds-only predictions only), desk
// (k0 <= 12, everything enabled), custom. Precedence: flags > config file >
// profile defaults. Every JSON payload echoes the effective config.
//
// Exit codes: 0 success, 2 usage, 3 inadmissible verdict, 4 resource cap.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "primegap/admissible.hpp"
#include "primegap/equidist.hpp"
#include "primegap/logreal.hpp"
#include "primegap/parallel.hpp"
#include "primegap/sums.hpp"
#include "primegap/weights.hpp"

namespace {

using namespace primegap;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerdict = 3;
constexpr int kExitResource = 4;

constexpr u64 kPaperK0 = 3'500'000;
constexpr u64 kPaperL0 = 180;
const Rational kPaperVarpi{1, 1168};

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            if (text.find('.') != std::string::npos)
                return Rational::approximate(std::stod(text), 1'000'000);
            return Rational(std::stoll(text), 1);
        }
        return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw usage_error("cannot parse rational '" + text + "' (expected p/q)");
    }
}

// Flat key=value config file; '#' starts a comment.
std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open config file: " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!key.empty()) kv[key] = value;
    }
    return kv;
}

// One resolved value: CLI flag beats config file beats profile default.
template <typename T, typename Parse>
T resolve(const CLI::App* cmd, const std::string& flag,
          const std::map<std::string, std::string>& file, const std::string& key,
          const T& fallback, Parse parse, bool* explicitly_set = nullptr) {
    if (explicitly_set) *explicitly_set = true;
    if (auto* opt = cmd->get_option_no_throw(flag); opt && opt->count() > 0)
        return parse(opt->as<std::string>());
    if (auto it = file.find(key); it != file.end()) return parse(it->second);
    if (explicitly_set) *explicitly_set = false;
    return fallback;
}

struct RunConfig {
    std::string profile = "desk";
    u64 k0 = 4;
    u64 l0 = 1;
    Rational varpi{1, 4};
    u64 x = 1'000'000;
    u64 big_d = 0;  // 0 = derive from x and varpi
    u64 d1 = 0;
    std::string tuple_text;
    double a_power = 1.0;
    bool have_delta = false;
    u64 delta = 0;
    std::string output = "json";
    u64 seed = 0;
    unsigned threads = 1;

    SieveParams params() const {
        if (big_d != 0 || d1 != 0) {
            if (big_d == 0 || d1 == 0)
                throw usage_error("--D and --D1 must be given together");
            return SieveParams::with_caps(k0, l0, varpi, x, big_d, d1);
        }
        return SieveParams::derive(k0, l0, varpi, x);
    }

    IntervalSpec interval() const {
        return have_delta ? IntervalSpec::with_delta(x, delta)
                          : IntervalSpec::with_log_power(x, a_power);
    }

    AdmissibleTuple tuple() const {
        if (tuple_text.empty()) {
            // Deterministic default: narrowest greedy tuple of size k0.
            for (u64 w = k0 > 0 ? k0 - 1 : 0; ; ++w)
                if (auto t = greedy_narrow(k0, w)) return *t;
        }
        return AdmissibleTuple::parse(tuple_text, /*normalize=*/true);
    }

    json echo() const {
        json j;
        j["profile"] = profile;
        j["k0"] = k0;
        j["l0"] = l0;
        j["varpi"] = std::to_string(varpi.num) + "/" + std::to_string(varpi.den);
        j["x"] = x;
        try {
            const SieveParams p = params();
            j["D"] = p.big_d;
            j["D1"] = p.d1;
        } catch (const std::exception&) {
            // omega accepts parameter points (varpi > 1/4) where the sieve
            // cutoffs are undefined; the echo just leaves them blank there.
            j["D"] = nullptr;
            j["D1"] = nullptr;
        }
        if (!tuple_text.empty()) j["tuple"] = tuple_text;
        if (have_delta)
            j["delta"] = delta;
        else
            j["A"] = a_power;
        j["seed"] = seed;
        // --threads deliberately not echoed: payloads are thread-count
        // invariant and the echo must be too.
        return j;
    }
};

// Sticks the per-command option set onto a subcommand; resolution happens
// after parsing so precedence stays in one place.
void add_param_flags(CLI::App* cmd) {
    cmd->add_option("--config", "flat key=value config file");
    cmd->add_option("--profile", "paper | desk | custom")
        ->check(CLI::IsMember({"paper", "desk", "custom"}));
    cmd->add_option("--k0", "tuple size");
    cmd->add_option("--l0", "weight polynomial shift");
    cmd->add_option("--varpi", "level-of-distribution exponent, p/q");
    cmd->add_option("--x", "interval left endpoint");
    cmd->add_option("--D", "divisor cutoff override (needs --D1)");
    cmd->add_option("--D1", "smooth-prime cutoff override (needs --D)");
    cmd->add_option("--tuple", "comma-separated offsets");
    cmd->add_option("--tuple-file", "file whose first line holds the offsets");
    cmd->add_option("--A", "interval length exponent: delta = floor(x/(ln x)^A)");
    cmd->add_option("--delta", "explicit interval length");
    cmd->add_option("--out", "json | csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--seed", "echoed; core math is deterministic");
    cmd->add_option("--threads", "worker thread bound");
}

RunConfig resolve_config(const CLI::App* cmd) {
    std::map<std::string, std::string> file;
    if (auto* opt = cmd->get_option_no_throw("--config"); opt && opt->count() > 0)
        file = read_config_file(opt->as<std::string>());

    RunConfig c;
    auto str = [](const std::string& s) { return s; };
    std::string profile =
        resolve<std::string>(cmd, "--profile", file, "profile", "", str);
    if (profile.empty()) {
        if (const char* env = std::getenv("PRIMEGAP_PROFILE")) profile = env;
        if (profile.empty()) profile = "desk";
        if (profile != "paper" && profile != "desk" && profile != "custom")
            throw usage_error("PRIMEGAP_PROFILE must be paper, desk, or custom");
    }
    c.profile = profile;
    if (profile == "paper") {
        c.k0 = kPaperK0;
        c.l0 = kPaperL0;
        c.varpi = kPaperVarpi;
        c.x = 1'000'000'000;
    }

    auto to_u64 = [](const std::string& s) -> u64 {
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
            throw usage_error("cannot parse integer '" + s + "'");
        }
    };
    auto to_dbl = [](const std::string& s) -> double {
        try {
            return std::stod(s);
        } catch (const std::exception&) {
            throw usage_error("cannot parse number '" + s + "'");
        }
    };

    bool k0_set = false, l0_set = false, varpi_set = false;
    c.k0 = resolve<u64>(cmd, "--k0", file, "k0", c.k0, to_u64, &k0_set);
    c.l0 = resolve<u64>(cmd, "--l0", file, "l0", c.l0, to_u64, &l0_set);
    c.varpi = resolve<Rational>(cmd, "--varpi", file, "varpi", c.varpi, parse_rational,
                                &varpi_set);
    c.x = resolve<u64>(cmd, "--x", file, "x", c.x, to_u64);
    c.big_d = resolve<u64>(cmd, "--D", file, "D", 0, to_u64);
    c.d1 = resolve<u64>(cmd, "--D1", file, "D1", 0, to_u64);
    c.tuple_text = resolve<std::string>(cmd, "--tuple", file, "tuple", "", str);
    const std::string tuple_file =
        resolve<std::string>(cmd, "--tuple-file", file, "tuple_file", "", str);
    if (!tuple_file.empty()) {
        if (!c.tuple_text.empty())
            throw usage_error("--tuple and --tuple-file are mutually exclusive");
        std::ifstream in(tuple_file);
        if (!in || !std::getline(in, c.tuple_text))
            throw usage_error("cannot read tuple file: " + tuple_file);
    }
    bool delta_set = false;
    c.delta = resolve<u64>(cmd, "--delta", file, "delta", 0, to_u64, &delta_set);
    c.have_delta = delta_set;
    c.a_power = resolve<double>(cmd, "--A", file, "A", 1.0, to_dbl);
    c.output = resolve<std::string>(cmd, "--out", file, "out", "json", str);
    c.seed = resolve<u64>(cmd, "--seed", file, "seed", 0, to_u64);
    c.threads = static_cast<unsigned>(
        resolve<u64>(cmd, "--threads", file, "threads", 1, to_u64));

    if (c.profile == "paper") {
        if ((k0_set && c.k0 != kPaperK0) || (l0_set && c.l0 != kPaperL0) ||
            (varpi_set && !(c.varpi == kPaperVarpi)))
            throw usage_error("paper profile locks k0=3500000, l0=180, varpi=1/1168");
    }
    if (c.profile == "desk" && c.k0 > 12)
        throw usage_error("desk profile requires k0 <= 12 (use --profile custom)");

    set_worker_threads(c.threads);
    return c;
}

void require_sum_scale(const RunConfig& c, const char* what) {
    if (c.profile == "paper")
        throw usage_error(std::string(what) +
                          " is not runnable under the paper profile: direct sums at "
                          "k0=3.5e6 are astronomically out of reach. Use --profile desk, "
                          "or `sums --bounds-only` / `omega` for the log-space results.");
}

// ---- primes ----------------------------------------------------------------

int cmd_primes(u64 lo, u64 hi, bool count_only, const std::string& out_mode) {
    if (lo > hi) throw usage_error("primes: lo must not exceed hi");
    const PrimeTable table = sieve_primes(lo, hi);
    if (count_only) {
        std::cout << table.primes.size() << '\n';
        return kExitOk;
    }
    if (out_mode == "json") {
        json j;
        j["lo"] = lo;
        j["hi"] = hi;
        j["count"] = table.primes.size();
        j["primes"] = table.primes;
        std::cout << j.dump(2) << '\n';
    } else if (out_mode == "csv") {
        std::cout << "p\n";
        for (u64 p : table.primes) std::cout << p << '\n';
    } else {
        for (u64 p : table.primes) std::cout << p << '\n';
    }
    return kExitOk;
}

// ---- admissible ------------------------------------------------------------

int cmd_admissible(const std::string& offsets, u64 generate_k, bool full_check) {
    if (generate_k > 0) {
        for (u64 w = generate_k - 1; ; ++w) {
            if (auto t = greedy_narrow(generate_k, w)) {
                json j;
                j["tuple"] = t->to_text();
                j["k"] = t->size();
                j["width"] = t->width();
                std::cout << j.dump(2) << '\n';
                return kExitOk;
            }
        }
    }
    const AdmissibleTuple t = AdmissibleTuple::parse(offsets, /*normalize=*/true);
    const AdmissibilityCheck check =
        full_check ? check_admissible_full(t.offsets()) : check_admissible(t.offsets());
    json j;
    j["tuple"] = t.to_text();
    j["k"] = t.size();
    j["width"] = t.width();
    j["admissible"] = check.admissible;
    if (check.witness_prime)
        j["witness"] = *check.witness_prime;
    else
        j["witness"] = nullptr;
    std::cout << j.dump(2) << '\n';
    return check.admissible ? kExitOk : kExitVerdict;
}

// ---- weights ---------------------------------------------------------------

int cmd_weights(const RunConfig& c, double sup_epsilon) {
    require_sum_scale(c, "weights");
    const WeightTable table = lambda_batch(c.interval(), c.tuple(), c.params());
    if (c.output == "csv") {
        write_csv(table, std::cout);
        return kExitOk;
    }
    json j;
    j["config"] = c.echo();
    j["tuple"] = c.tuple().to_text();
    j["max_abs"] = table.max_abs;
    const SupReport sup = lambda_sup_report(table, sup_epsilon);
    j["sup"] = {{"epsilon", sup_epsilon}, {"max_abs", sup.max_abs},
                {"bound", sup.bound}, {"ok", sup.ok}};
    json rows = json::array();
    for (u64 i = 0; i < table.values.size(); ++i)
        rows.push_back({table.interval.lo() + i, table.values[i]});
    j["values"] = rows;
    std::cout << j.dump(2) << '\n';
    return kExitOk;
}

// ---- sums ------------------------------------------------------------------

int cmd_sums(const RunConfig& c, bool bounds_only, bool strict_paper_x, double ln_singular,
             u64 singular_pmax) {
    PredictionOptions opt;
    opt.strict_paper_x = strict_paper_x;
    if (bounds_only) {
        const Predictions p = bound_predictions(c.interval(), c.params(), ln_singular, opt);
        json j;
        j["config"] = c.echo();
        j["ln_singular"] = ln_singular;
        j["s1_bound_log"] = p.s1_bound.is_zero() ? json(nullptr) : json(p.s1_bound.ln_mag);
        j["s2_bound_log"] = p.s2_bound.is_zero() ? json(nullptr) : json(p.s2_bound.ln_mag);
        j["omega_prediction_log"] =
            p.omega_prediction.is_zero() ? json(nullptr) : json(p.omega_prediction.ln_mag);
        j["s1_bound"] = format_decimal(p.s1_bound);
        j["s2_bound"] = format_decimal(p.s2_bound);
        j["omega_prediction"] = format_decimal(p.omega_prediction);
        std::cout << j.dump(2) << '\n';
        return kExitOk;
    }
    require_sum_scale(c, "sums");
    const SumReport r = lemma3_statistic(c.interval(), c.tuple(), c.params(), opt, singular_pmax);
    std::ostringstream body;
    write_json(r, body);
    json j = json::parse(body.str());
    j["config"] = c.echo();
    std::cout << j.dump(2) << '\n';
    return kExitOk;
}

// ---- bv --------------------------------------------------------------------

int cmd_bv(const RunConfig& c, u64 index_i, u64 d_cap, double b) {
    require_sum_scale(c, "bv");
    const DiscrepancyReport r =
        discrepancy_report(c.interval(), c.tuple(), c.params(), index_i, d_cap, b);
    if (c.output == "csv") {
        write_csv(r, std::cout);
        return kExitOk;
    }
    std::ostringstream body;
    write_json_summary(r, body);
    json j = json::parse(body.str());
    j["config"] = c.echo();
    std::cout << j.dump(2) << '\n';
    return kExitOk;
}

// ---- omega -----------------------------------------------------------------

int cmd_omega(const RunConfig& c) {
    OmegaParams p(c.k0, c.l0, c.varpi);
    const OmegaResult r = omega_constant_detailed(p);
    json j;
    j["config"] = c.echo();
    if (r.omega.is_zero()) {
        j["mantissa"] = 0.0;
        j["exponent10"] = 0;
        j["ln_value"] = nullptr;
        j["sign"] = 0;
        j["exceeds_exp_minus_5e7"] = false;
    } else {
        const DecimalForm d = render_decimal(r.omega);
        j["mantissa"] = d.mantissa;
        j["exponent10"] = d.exponent10;
        j["ln_value"] = r.omega.ln_mag;
        j["sign"] = r.omega.sign;
        j["exceeds_exp_minus_5e7"] =
            r.omega.sign > 0 && verify_omega_threshold(r.omega, -5e7);
    }
    j["rendered"] = format_decimal(r.omega);
    j["rendered_no_kappa"] = format_decimal(r.omega_no_kappa);
    j["bracket"] = r.bracket;
    j["bracket_no_kappa"] = r.bracket_no_kappa;
    std::cout << j.dump(2) << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"short-interval prime gap toolkit"};
    app.require_subcommand(1);

    // primes
    auto* primes = app.add_subcommand("primes", "list primes in [lo, hi]");
    u64 p_lo = 0, p_hi = 0;
    bool p_count = false;
    std::string p_out = "text";
    primes->add_option("lo", p_lo, "lower end")->required();
    primes->add_option("hi", p_hi, "upper end")->required();
    primes->add_flag("--count", p_count, "print only the count");
    primes->add_option("--out", p_out, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    // admissible
    auto* adm = app.add_subcommand("admissible", "verify or generate admissible tuples");
    std::string a_offsets;
    u64 a_generate = 0;
    bool a_full = false;
    adm->add_option("offsets", a_offsets, "comma-separated offsets to verify");
    adm->add_option("--generate", a_generate, "emit a narrow tuple of this size");
    adm->add_flag("--full-check", a_full, "scan primes up to width+1 instead of k");

    // weights / sums / bv / omega share the config machinery
    auto* weights = app.add_subcommand("weights", "tabulate lambda over the interval");
    double w_eps = 0.5;
    add_param_flags(weights);
    weights->add_option("--sup-epsilon", w_eps, "epsilon for the sup-envelope report");

    auto* sums = app.add_subcommand("sums", "S1, S2, statistic, and predictions");
    bool s_bounds_only = false, s_strict_x = false;
    double s_ln_singular = 0.0;
    u64 s_pmax = 100'000;
    add_param_flags(sums);
    sums->add_flag("--bounds-only", s_bounds_only, "log-space predictions only");
    sums->add_flag("--strict-paper-x", s_strict_x,
                   "upper prediction with the printed bare x instead of the length");
    sums->add_option("--ln-singular", s_ln_singular,
                     "ln of the singular series for bounds-only runs");
    sums->add_option("--singular-pmax", s_pmax, "Euler product cutoff for full runs");

    auto* bv = app.add_subcommand("bv", "discrepancy aggregates");
    u64 b_i = 1, b_cap = 0;
    double b_exp = 1.0;
    add_param_flags(bv);
    bv->add_option("--i", b_i, "designated tuple index (1-based)");
    bv->add_option("--d-cap", b_cap, "modulus cap (default D^2)");
    bv->add_option("--B", b_exp, "log power for the charted ratio");

    auto* omega = app.add_subcommand("omega", "the leading sieve constant");
    add_param_flags(omega);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (primes->parsed()) return cmd_primes(p_lo, p_hi, p_count, p_out);
        if (adm->parsed()) {
            if (a_offsets.empty() && a_generate == 0)
                throw usage_error("admissible: give offsets or --generate k");
            return cmd_admissible(a_offsets, a_generate, a_full);
        }
        if (weights->parsed()) return cmd_weights(resolve_config(weights), w_eps);
        if (sums->parsed())
            return cmd_sums(resolve_config(sums), s_bounds_only, s_strict_x, s_ln_singular,
                            s_pmax);
        if (bv->parsed()) return cmd_bv(resolve_config(bv), b_i, b_cap, b_exp);
        if (omega->parsed()) return cmd_omega(resolve_config(omega));
        throw usage_error("no subcommand");
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const inadmissible_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerdict;
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

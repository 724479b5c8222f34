#include <chrono>
#include <cctype>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperint/equidistribution.hpp"
#include "hyperint/padic.hpp"
#include "hyperint/parser.hpp"
#include "hyperint/primes.hpp"
#include "hyperint/quadratic_criterion.hpp"
#include "hyperint/rational_criterion.hpp"
#include "hyperint/report.hpp"
#include "hyperint/valuation_oracle.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace hyperint;

constexpr const char* kFormatVersion = "hyperint/1";

json witness_json(const Witness& w) {
    json out;
    out["condition"] = w.condition;
    if (w.a) out["a"] = *w.a;
    if (w.p) out["p"] = *w.p;
    if (w.n) out["n"] = *w.n;
    if (w.k) out["k"] = *w.k;
    if (w.l) out["l"] = *w.l;
    if (w.h) out["h"] = *w.h;
    if (w.e) out["e"] = *w.e;
    if (w.eps) out["eps"] = w.eps->str();
    if (w.x) out["x"] = w.x->str();
    if (w.value) out["value"] = w.value->str();
    return out;
}

json base_record(const std::string& command, json inputs) {
    json rec;
    rec["version"] = kFormatVersion;
    rec["command"] = command;
    rec["inputs"] = std::move(inputs);
    return rec;
}

void attach_report(json& rec, const CriterionReport& rep) {
    rec["verdict"] = to_string(rep.verdict);
    rec["route"] = rep.route;
    rec["witness"] = rep.witness ? witness_json(*rep.witness) : json(nullptr);
    json meta = json::object();
    for (const auto& [k, v] : rep.metadata) meta[k] = v;
    rec["metadata"] = std::move(meta);
}

void print_record(const json& rec, bool as_json) {
    if (as_json) {
        std::cout << rec.dump(2) << "\n";
        return;
    }
    if (rec.contains("verdict")) {
        std::cout << "verdict: " << rec["verdict"].get<std::string>() << "\n";
        std::cout << "route:   " << rec["route"].get<std::string>() << "\n";
        if (!rec["witness"].is_null()) {
            std::cout << "witness:";
            for (const auto& [k, v] : rec["witness"].items()) {
                std::cout << " " << k << "=";
                if (v.is_string()) std::cout << v.get<std::string>();
                else std::cout << v.dump();
            }
            std::cout << "\n";
        }
    }
    for (const auto& [k, v] : rec["metadata"].items()) {
        std::cout << k << ": ";
        if (v.is_string()) std::cout << v.get<std::string>();
        else std::cout << v.dump();
        std::cout << "\n";
    }
    for (const auto& [key, val] : rec.items()) {
        if (key == "version" || key == "command" || key == "inputs" || key == "verdict" ||
            key == "route" || key == "witness" || key == "metadata")
            continue;
        std::cout << key << ": " << val.dump() << "\n";
    }
}

json entries_json(const std::vector<QuadraticNumber>& entries) {
    json arr = json::array();
    for (const QuadraticNumber& g : entries) arr.push_back(g.str());
    return arr;
}

std::vector<Rational> rational_entries(const std::vector<QuadraticNumber>& entries) {
    std::vector<Rational> out;
    for (const QuadraticNumber& g : entries) out.push_back(g.r1);
    return out;
}

bool all_rational(const std::vector<QuadraticNumber>& entries) {
    for (const QuadraticNumber& g : entries)
        if (!g.is_rational()) return false;
    return true;
}

json violations_json(const ScanResult& res) {
    json arr = json::array();
    for (const Violation& v : res.violations) {
        json item;
        item["p"] = v.p;
        item["embedding"] = to_string(v.embedding);
        item["n"] = v.n;
        item["valuation"] = v.valuation.str();
        arr.push_back(std::move(item));
    }
    return arr;
}

json skipped_json(const ScanResult& res) {
    json arr = json::array();
    for (std::int64_t p : res.skipped) arr.push_back(p);
    return arr;
}

struct Options {
    bool json_output = false;
    int threads = 1;
};

int run_decide(const Options& opt, const std::string& alpha_text, const std::string& beta_text,
               std::optional<std::int64_t> d_hint) {
    auto alpha = parse_parameters(alpha_text);
    auto beta = parse_parameters(beta_text);
    json inputs;
    inputs["alpha"] = entries_json(alpha);
    inputs["beta"] = entries_json(beta);
    if (d_hint) inputs["D"] = *d_hint;
    json rec = base_record("decide", std::move(inputs));

    CriterionReport rep;
    if (all_rational(alpha) && all_rational(beta) && !d_hint) {
        auto sys = RationalSystem::make(rational_entries(alpha), rational_entries(beta));
        rep = decide_global(sys);
    } else {
        QuadraticSystem sys = decompose(alpha, beta, d_hint);
        rep = decide_quadratic(sys);
        // primes at or below this threshold are outside the verdict's reach
        rep.add_meta("p0", std::to_string(compute_p0(sys)));
    }
    attach_report(rec, rep);
    print_record(rec, opt.json_output);
    return rep.affirmative() ? 0 : 1;
}

int run_padic(const Options& opt, const std::string& alpha_text, const std::string& beta_text,
              std::int64_t p, std::optional<std::int64_t> n_max_flag) {
    auto alpha = parse_parameters(alpha_text);
    auto beta = parse_parameters(beta_text);
    if (!all_rational(alpha) || !all_rational(beta))
        throw std::domain_error("padic: expects rational parameters");
    if (!is_prime(p)) throw std::domain_error("padic: p must be prime");

    auto sys = RationalSystem::make(rational_entries(alpha), rational_entries(beta));
    json inputs;
    inputs["alpha"] = entries_json(alpha);
    inputs["beta"] = entries_json(beta);
    inputs["p"] = p;
    json rec = base_record("padic", std::move(inputs));

    CriterionReport rep;
    try {
        rep = decide_at_prime(sys, p);
    } catch (const prime_too_small_error& e) {
        // below the criterion's proven range: fall back to a direct scan
        if (sys.denom_lcm % p == 0)
            throw std::domain_error("padic: p divides the denominator lcm, valuations undefined");
        std::int64_t n_max = n_max_flag ? *n_max_flag : std::min<std::int64_t>(p * p, 100000);
        ScanConfig cfg;
        cfg.p_min = p;
        cfg.p_max = p;
        cfg.n_max = n_max;
        ScanResult res = scan(sys, cfg, opt.threads);
        rep.route = "oracle-scan";
        rep.add_meta("criterion-threshold", std::to_string(e.bound));
        rep.add_meta("n-max", std::to_string(n_max));
        if (!res.violations.empty()) {
            rep.verdict = Verdict::not_in_zp;
            const Violation& v = res.violations.front();
            Witness w;
            w.condition = "coefficient-valuation";
            w.p = v.p;
            w.n = v.n;
            w.value = v.valuation;
            rep.witness = w;
        } else {
            rep.verdict = Verdict::inconclusive;
            rep.add_meta("note", "no violation found up to n-max; scan evidence is one-sided");
        }
    }
    attach_report(rec, rep);
    print_record(rec, opt.json_output);
    return rep.affirmative() ? 0 : 1;
}

int run_oracle(const Options& opt, const std::string& alpha_text, const std::string& beta_text,
               std::int64_t p_min, std::int64_t p_max, std::int64_t n_max,
               std::optional<std::int64_t> p0_flag, std::optional<std::int64_t> d_hint) {
    auto alpha = parse_parameters(alpha_text);
    auto beta = parse_parameters(beta_text);
    json inputs;
    inputs["alpha"] = entries_json(alpha);
    inputs["beta"] = entries_json(beta);
    inputs["pmin"] = p_min;
    inputs["pmax"] = p_max;
    inputs["nmax"] = n_max;
    json rec = base_record("oracle", std::move(inputs));

    ScanConfig cfg;
    cfg.p_min = p_min;
    cfg.p_max = p_max;
    cfg.n_max = n_max;

    ScanResult res;
    json meta;
    if (all_rational(alpha) && all_rational(beta) && !d_hint) {
        auto sys = RationalSystem::make(rational_entries(alpha), rational_entries(beta));
        cfg.p0 = p0_flag.value_or(0);
        res = scan(sys, cfg, opt.threads);
        meta["kind"] = "rational";
    } else {
        QuadraticSystem sys = decompose(alpha, beta, d_hint);
        cfg.p0 = p0_flag.value_or(compute_p0(sys));
        res = scan(sys, cfg, opt.threads);
        meta["kind"] = "quadratic";
        meta["E"] = std::to_string(sys.E);
    }
    meta["p0"] = std::to_string(cfg.p0);
    meta["scanned"] = std::to_string(res.scanned);
    meta["skipped"] = skipped_json(res);

    rec["verdict"] = res.violations.empty() ? "no-violation" : "violation";
    rec["violations"] = violations_json(res);
    rec["metadata"] = std::move(meta);
    print_record(rec, opt.json_output);
    return res.violations.empty() ? 0 : 1;
}

std::vector<std::int64_t> parse_integer_list(const std::string& text, const char* what) {
    std::vector<std::int64_t> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        std::size_t used = 0;
        try {
            out.push_back(std::stoll(item, &used));
        } catch (const std::exception&) {
            throw std::domain_error(std::string(what) + ": expected an integer, got '" + item + "'");
        }
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
        if (used != item.size())
            throw std::domain_error(std::string(what) + ": trailing input in '" + item + "'");
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

int run_equidist(const Options& opt, const std::string& poly_text, std::int64_t modulus,
                 const std::string& residues_text, std::int64_t x_max, std::int64_t square_scale) {
    auto coeffs = parse_integer_list(poly_text, "equidist --poly");
    if (coeffs.size() != 3)
        throw std::domain_error("equidist: --poly expects three integers A,B,C");
    QuadraticPoly f(coeffs[0], coeffs[1], coeffs[2]);

    Progression prog;
    prog.modulus = modulus;
    prog.residues = parse_integer_list(residues_text, "equidist --res");

    json inputs;
    inputs["poly"] = poly_text;
    inputs["mod"] = modulus;
    inputs["res"] = residues_text;
    inputs["xmax"] = x_max;
    json rec = base_record("equidist", std::move(inputs));

    auto samples = sample_roots(f, prog, x_max, opt.threads);
    json stats;
    stats["samples"] = static_cast<std::int64_t>(samples.size());
    if (!samples.empty()) {
        stats["star-discrepancy"] = star_discrepancy(samples).str();
        json hist = json::array();
        constexpr int kBins = 20;
        std::vector<std::int64_t> bins(kBins, 0);
        for (const RootSample& s : samples) {
            int b = static_cast<int>((Rational(kBins) * s.ratio).floor());
            if (b == kBins) b = kBins - 1;
            ++bins[static_cast<std::size_t>(b)];
        }
        for (std::int64_t b : bins) hist.push_back(b);
        stats["histogram"] = std::move(hist);
    } else {
        stats["star-discrepancy"] = nullptr;
        stats["histogram"] = json::array();
    }

    auto p2 = count_mod_p2_roots(f, prog, x_max, opt.threads);
    stats["mod-p2-roots"] = {{"count", p2.count},
                             {"primes", p2.primes_total},
                             {"ratio", p2.ratio.str()}};
    auto sq = count_prime_square_values(f, prog, x_max, square_scale);
    stats["prime-square-values"] = {{"scale", square_scale},
                                    {"count", sq.count},
                                    {"primes", sq.primes_total},
                                    {"ratio", sq.ratio.str()}};
    rec["statistics"] = std::move(stats);
    json meta;
    meta["note"] = "scarcity ratios are heuristic renderings of asymptotic statements";
    rec["metadata"] = std::move(meta);
    print_record(rec, opt.json_output);
    return 0;
}

int run_breakpoints(const Options& opt, const std::string& alpha_text,
                    const std::string& beta_text, std::optional<std::int64_t> d_hint) {
    auto alpha = parse_parameters(alpha_text);
    auto beta = parse_parameters(beta_text);
    QuadraticSystem sys = decompose(alpha, beta, d_hint);
    ResidueGroups groups = compute_groups(sys.E, sys.D);
    BreakpointSet cuts = breakpoints(sys, groups);

    json inputs;
    inputs["alpha"] = entries_json(alpha);
    inputs["beta"] = entries_json(beta);
    if (d_hint) inputs["D"] = *d_hint;
    json rec = base_record("breakpoints", std::move(inputs));
    json pts = json::array();
    for (const Rational& t : cuts.points) pts.push_back(t.str());
    rec["points"] = std::move(pts);
    json groups_json;
    json h = json::array(), i = json::array();
    for (auto a : groups.H) h.push_back(a);
    for (auto a : groups.I) i.push_back(a);
    groups_json["E"] = groups.E;
    groups_json["H"] = std::move(h);
    groups_json["I"] = std::move(i);
    rec["groups"] = std::move(groups_json);
    json meta;
    meta["D"] = std::to_string(sys.D);
    meta["E"] = std::to_string(sys.E);
    rec["metadata"] = std::move(meta);
    print_record(rec, opt.json_output);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"N-integrality of hypergeometric series with rational or quadratic parameters"};
    app.require_subcommand(1);
    // let --json / --threads appear after the subcommand as well
    app.fallthrough();

    Options opt;
    app.add_flag("--json", opt.json_output, "emit the structured record");
    app.add_option("--threads", opt.threads, "worker threads for scans")->default_val(1);

    std::string alpha_text, beta_text;
    std::optional<std::int64_t> d_hint;

    auto* decide = app.add_subcommand("decide", "full N-integrality decision");
    decide->add_option("--alpha", alpha_text)->required();
    decide->add_option("--beta", beta_text)->required();
    decide->add_option("--d", d_hint, "field discriminant when all entries are rational");

    std::int64_t prime = 0;
    std::optional<std::int64_t> padic_nmax;
    auto* padic = app.add_subcommand("padic", "membership in Z_p[[z]] at one prime");
    padic->add_option("--alpha", alpha_text)->required();
    padic->add_option("--beta", beta_text)->required();
    padic->add_option("--p", prime)->required();
    padic->add_option("--nmax", padic_nmax, "scan depth when p is below the criterion bound");

    std::int64_t p_min = 3, p_max = 0, n_max = 0;
    std::optional<std::int64_t> p0_flag;
    auto* oracle = app.add_subcommand("oracle", "negative-valuation scan over primes");
    oracle->add_option("--alpha", alpha_text)->required();
    oracle->add_option("--beta", beta_text)->required();
    oracle->add_option("--pmax", p_max)->required();
    oracle->add_option("--nmax", n_max)->required();
    oracle->add_option("--pmin", p_min);
    oracle->add_option("--p0", p0_flag, "override the exclusion threshold");
    oracle->add_option("--d", d_hint, "field discriminant when all entries are rational");

    std::string poly_text, residues_text;
    std::int64_t modulus = 0, x_max = 0, square_scale = 1;
    auto* equidist = app.add_subcommand("equidist", "congruence-root distribution statistics");
    equidist->add_option("--poly", poly_text, "A,B,C")->required();
    equidist->add_option("--mod", modulus)->required();
    equidist->add_option("--res", residues_text, "residues, comma separated")->required();
    equidist->add_option("--xmax", x_max)->required();
    equidist->add_option("--square-scale", square_scale, "the a in f(n) = a*p^2");

    auto* bps = app.add_subcommand("breakpoints", "epsilon breakpoints of the extended delta");
    bps->add_option("--alpha", alpha_text)->required();
    bps->add_option("--beta", beta_text)->required();
    bps->add_option("--d", d_hint, "field discriminant when all entries are rational");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        auto started = std::chrono::steady_clock::now();
        int code = 2;
        if (app.got_subcommand(decide))
            code = run_decide(opt, alpha_text, beta_text, d_hint);
        else if (app.got_subcommand(padic))
            code = run_padic(opt, alpha_text, beta_text, prime, padic_nmax);
        else if (app.got_subcommand(oracle))
            code = run_oracle(opt, alpha_text, beta_text, p_min, p_max, n_max, p0_flag, d_hint);
        else if (app.got_subcommand(equidist))
            code = run_equidist(opt, poly_text, modulus, residues_text, x_max, square_scale);
        else if (app.got_subcommand(bps))
            code = run_breakpoints(opt, alpha_text, beta_text, d_hint);
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();
        std::cerr << "elapsed: " << elapsed << " ms\n";
        return code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

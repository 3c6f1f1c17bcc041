// Command-line front end: graph generation, lower bounds (LP or certificate),
// scheme construction/verification, and the tightness report table.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "inforatio/certificate.hpp"
#include "inforatio/entropy_lp.hpp"
#include "inforatio/errors.hpp"
#include "inforatio/gfq.hpp"
#include "inforatio/scheme.hpp"

using namespace inforatio;

namespace {

struct CommonOpts {
    std::string family = "cube_star";
    int d = 1;
    std::uint64_t seed = 0;
    std::string in_path;
};

LabeledGraph load_graph(const CommonOpts& opts) {
    if (opts.family == "hypercube") return build_hypercube(opts.d);
    if (opts.family == "cube_star") return build_cube_star(opts.d);
    if (opts.family == "delta") return build_delta(opts.d, opts.seed);
    if (opts.family == "file") {
        if (opts.in_path.empty()) throw ParameterError("--in is required with --family file");
        std::ifstream in(opts.in_path);
        if (!in) throw ParameterError("cannot open " + opts.in_path);
        std::stringstream buf;
        buf << in.rdbuf();
        return graph_from_json(buf.str());
    }
    throw ParameterError("unknown family: " + opts.family);
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParameterError("cannot write " + path);
    out << content;
}

std::uint64_t next_prime_at_least(std::uint64_t q) {
    while (!is_prime(q)) ++q;
    return q;
}

int worker_count() {
    if (const char* env = std::getenv("INFORATIO_WORKERS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return 1;
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--family", opts.family, "hypercube | cube_star | delta | file")
        ->default_val("cube_star");
    cmd->add_option("--d", opts.d, "construction dimension");
    cmd->add_option("--seed", opts.seed, "matching seed for the delta family");
    cmd->add_option("--in", opts.in_path, "graph JSON path for --family file");
}

// ---- bound ----------------------------------------------------------------

struct BoundResult {
    Rational value;
    std::string method;
    bool verified = true;
};

BoundResult certificate_bound(const CommonOpts& opts, const LabeledGraph& g, LpMode mode,
                              Certificate* cert_out, Rational* ratio_out) {
    if (opts.family == "cube_star" && mode == LpMode::Worst) {
        RatioBoundCertificate rb = build_worst_case_bound(opts.d);
        Verdict verdict = check(rb.certificate);
        if (cert_out) *cert_out = rb.certificate;
        if (ratio_out) *ratio_out = rb.ratio_bound;
        return {rb.ratio_bound, "certificate", verdict.valid};
    }
    if (opts.family == "delta" && mode == LpMode::Average) {
        RatioBoundCertificate rb = build_average_case_bound(opts.d, g);
        Verdict verdict = check(rb.certificate);
        if (cert_out) *cert_out = rb.certificate;
        if (ratio_out) *ratio_out = rb.ratio_bound;
        return {rb.ratio_bound, "certificate", verdict.valid};
    }
    // Fall back to the LP dual for anything small enough.
    if (g.vertex_count > 10)
        throw SizeError("no parametric certificate for this family/mode; the LP route needs <= 10 vertices");
    EntropyLP lp = build_lp(g, mode);
    RationalSolution sol = solve(lp);
    Certificate cert = extract_dual_certificate(lp, sol);
    Verdict verdict = check(cert);
    if (cert_out) *cert_out = cert;
    if (ratio_out) *ratio_out = sol.objective_value;
    return {sol.objective_value, "lp_dual_certificate", verdict.valid};
}

int run_bound(const CommonOpts& opts, const std::string& mode_name, const std::string& method,
              const std::string& format, const std::string& out_path, const std::string& dump_lp_path) {
    LpMode mode = mode_name == "average" ? LpMode::Average : LpMode::Worst;
    LabeledGraph g = load_graph(opts);

    BoundResult result{0, method, true};
    Certificate cert;
    bool have_cert = false;
    if (method == "lp") {
        if (g.vertex_count > 10)
            throw SizeError("graph too large for the LP route (" + std::to_string(g.vertex_count) +
                            " vertices > 10); try --method certificate");
        EntropyLP lp = build_lp(g, mode);
        if (!dump_lp_path.empty()) write_output(dump_lp_path, lp_text_dump(lp));
        result.value = solve(lp).objective_value;
    } else if (method == "certificate") {
        result = certificate_bound(opts, g, mode, &cert, nullptr);
        have_cert = true;
        if (!out_path.empty()) write_output(out_path, certificate_to_json(cert));
    } else {
        throw ParameterError("unknown method: " + method);
    }

    if (format == "json") {
        nlohmann::json j;
        j["family"] = opts.family;
        j["d"] = opts.d;
        j["seed"] = opts.seed;
        j["mode"] = mode_name;
        j["method"] = result.method;
        j["bound"] = to_fraction_string(result.value);
        if (have_cert) j["certificate_valid"] = result.verified;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << to_fraction_string(result.value) << "\n";
        if (have_cert)
            std::cout << "certificate: " << (result.verified ? "valid" : "INVALID") << "\n";
    }
    return result.verified ? 0 : 1;
}

// ---- cert -----------------------------------------------------------------

int run_cert(const std::string& in_path, const std::string& rule_name) {
    std::ifstream in(in_path);
    if (!in) throw ParameterError("cannot open " + in_path);
    std::stringstream buf;
    buf << in.rdbuf();
    Certificate cert = certificate_from_json(buf.str());
    StrongSubmodularityRule rule = rule_name == "literal" ? StrongSubmodularityRule::Literal
                                                          : StrongSubmodularityRule::Generalized;
    Verdict verdict = check(cert, rule);
    if (verdict.valid) {
        std::cout << "valid: target >= " << to_fraction_string(cert.bound) << "\n";
        return 0;
    }
    std::cout << "invalid: " << verdict.reason << "\n";
    return 1;
}

// ---- scheme ---------------------------------------------------------------

int run_scheme(const CommonOpts& opts, std::uint64_t q, const std::string& format,
               const std::string& out_path, long samples) {
    LabeledGraph g = load_graph(opts);
    if (q == 0) q = next_prime_at_least(std::uint64_t(std::max(2, g.vertex_count)));
    LinearScheme s = build_star_scheme(g, q);
    std::optional<long> budget;
    if (g.vertex_count > 24) budget = samples;
    PerfectnessReport report = verify_perfect(s, g, budget);
    RatioReport ratios = information_ratios(s);

    if (!out_path.empty()) write_output(out_path, scheme_to_json(s));
    if (format == "json") {
        std::cout << perfectness_report_to_json(report, ratios);
    } else {
        std::cout << "q=" << q << " vertices=" << g.vertex_count << "\n";
        std::cout << "max ratio: " << to_fraction_string(ratios.max) << "\n";
        std::cout << "average ratio: " << to_fraction_string(ratios.average) << "\n";
        std::cout << "perfect: " << (report.perfect ? "yes" : "NO") << (report.sampled ? " (sampled)" : "")
                  << "\n";
        for (const std::string& v : report.violations) std::cout << "violation: " << v << "\n";
    }
    return report.perfect ? 0 : 1;
}

// ---- report ---------------------------------------------------------------

struct ReportRow {
    std::string family;
    int d;
    std::uint64_t seed;
    std::string mode;
    int max_degree;
    Rational lower;
    std::string lower_method;
    Rational upper;
    bool match;
    bool verified;
};

ReportRow make_row(const std::string& family, int d, std::uint64_t seed, LpMode mode) {
    CommonOpts opts;
    opts.family = family;
    opts.d = d;
    opts.seed = seed;
    LabeledGraph g = load_graph(opts);

    ReportRow row;
    row.family = family;
    row.d = d;
    row.seed = seed;
    row.mode = mode == LpMode::Worst ? "worst" : "average";
    row.max_degree = g.max_degree();

    if (g.vertex_count <= 10) {
        row.lower = shannon_bound(g, mode);
        row.lower_method = "lp";
        row.verified = true;
    } else {
        BoundResult b = certificate_bound(opts, g, mode, nullptr, nullptr);
        row.lower = b.value;
        row.lower_method = "certificate";
        row.verified = b.verified;
    }

    std::uint64_t q = next_prime_at_least(std::uint64_t(g.vertex_count));
    LinearScheme s = build_star_scheme(g, q);
    RatioReport ratios = information_ratios(s);
    row.upper = mode == LpMode::Worst ? ratios.max : ratios.average;
    std::optional<long> budget;
    if (g.vertex_count > 24) budget = 1000;
    row.verified = row.verified && verify_perfect(s, g, budget).perfect;
    row.match = row.lower == row.upper;
    return row;
}

int run_report(int d_min, int d_max, const std::string& modes_arg, const std::string& seeds_arg,
               const std::string& format, const std::string& out_path) {
    std::vector<LpMode> modes;
    {
        std::stringstream ss(modes_arg);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) modes.push_back(tok == "average" ? LpMode::Average : LpMode::Worst);
    }
    std::vector<std::uint64_t> seeds;
    {
        std::stringstream ss(seeds_arg);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) seeds.push_back(std::strtoull(tok.c_str(), nullptr, 10));
    }

    struct Job {
        std::string family;
        int d;
        std::uint64_t seed;
        LpMode mode;
    };
    std::vector<Job> jobs;
    for (LpMode mode : modes)
        for (int d = d_min; d <= d_max; ++d) {
            if (mode == LpMode::Worst) jobs.push_back({"cube_star", d, 0, mode});
            else
                for (std::uint64_t seed : seeds) jobs.push_back({"delta", d, seed, mode});
        }

    std::vector<ReportRow> rows(jobs.size());
    int workers = std::min<int>(worker_count(), std::max<std::size_t>(jobs.size(), 1));
    if (workers <= 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i)
            rows[i] = make_row(jobs[i].family, jobs[i].d, jobs[i].seed, jobs[i].mode);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1))
                    rows[i] = make_row(jobs[i].family, jobs[i].d, jobs[i].seed, jobs[i].mode);
            });
        for (auto& t : pool) t.join();
    }

    bool all_verified = true;
    std::ostringstream out;
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const ReportRow& row : rows) {
            arr.push_back({{"family", row.family},
                           {"d", row.d},
                           {"seed", row.seed},
                           {"mode", row.mode},
                           {"max_degree", row.max_degree},
                           {"lower", to_fraction_string(row.lower)},
                           {"lower_method", row.lower_method},
                           {"upper", to_fraction_string(row.upper)},
                           {"match", row.match}});
            all_verified = all_verified && row.verified && row.match;
        }
        out << arr.dump(2) << "\n";
    } else {
        out << "family,d,seed,mode,max_degree,lower,lower_method,upper,match\n";
        for (const ReportRow& row : rows) {
            out << row.family << ',' << row.d << ',' << row.seed << ',' << row.mode << ','
                << row.max_degree << ',' << to_fraction_string(row.lower) << ',' << row.lower_method
                << ',' << to_fraction_string(row.upper) << ',' << (row.match ? "true" : "false")
                << "\n";
            all_verified = all_verified && row.verified && row.match;
        }
    }
    write_output(out_path, out.str());
    return all_verified ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"entropy-method bounds and star schemes for graph secret sharing"};
    app.require_subcommand(1);

    CommonOpts gen_opts;
    std::string gen_out;
    CLI::App* gen = app.add_subcommand("gen", "generate a graph file");
    add_common(gen, gen_opts);
    gen->add_option("--out", gen_out, "output path (default stdout)");

    CommonOpts bound_opts;
    std::string bound_mode = "worst", bound_method = "lp", bound_format = "text", bound_out, dump_lp;
    CLI::App* bound = app.add_subcommand("bound", "lower-bound the information ratio");
    add_common(bound, bound_opts);
    bound->add_option("--mode", bound_mode, "worst | average")->default_val("worst");
    bound->add_option("--method", bound_method, "lp | certificate")->default_val("lp");
    bound->add_option("--format", bound_format, "text | json")->default_val("text");
    bound->add_option("--out", bound_out, "certificate JSON output path");
    bound->add_option("--dump-lp", dump_lp, "write the LP in text form");

    std::string cert_in, cert_rule = "generalized";
    CLI::App* cert = app.add_subcommand("cert", "verify a certificate file");
    cert->add_option("--in", cert_in, "certificate JSON path")->required();
    cert->add_option("--rule", cert_rule, "generalized | literal")->default_val("generalized");

    CommonOpts scheme_opts;
    std::uint64_t scheme_q = 0;
    std::string scheme_format = "text", scheme_out;
    long scheme_samples = 10000;
    CLI::App* scheme = app.add_subcommand("scheme", "build and verify a star scheme");
    add_common(scheme, scheme_opts);
    scheme->add_option("--q", scheme_q, "prime field size (default: first prime >= |V|)");
    scheme->add_option("--format", scheme_format, "text | json")->default_val("text");
    scheme->add_option("--out", scheme_out, "scheme JSON output path");
    scheme->add_option("--samples", scheme_samples, "independence samples for graphs above 24 vertices");

    int rep_d_min = 1, rep_d_max = 3;
    std::string rep_modes = "worst,average", rep_seeds = "0,1,2", rep_format = "csv", rep_out;
    CLI::App* report = app.add_subcommand("report", "tightness table across dimensions");
    report->add_option("--d-min", rep_d_min)->default_val(1);
    report->add_option("--d-max", rep_d_max)->default_val(3);
    report->add_option("--modes", rep_modes, "comma list of worst,average")->default_val("worst,average");
    report->add_option("--seeds", rep_seeds, "comma list of delta matching seeds")->default_val("0,1,2");
    report->add_option("--format", rep_format, "csv | json")->default_val("csv");
    report->add_option("--out", rep_out, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            write_output(gen_out, graph_to_json(load_graph(gen_opts)));
            return 0;
        }
        if (bound->parsed())
            return run_bound(bound_opts, bound_mode, bound_method, bound_format, bound_out, dump_lp);
        if (cert->parsed()) return run_cert(cert_in, cert_rule);
        if (scheme->parsed())
            return run_scheme(scheme_opts, scheme_q, scheme_format, scheme_out, scheme_samples);
        if (report->parsed())
            return run_report(rep_d_min, rep_d_max, rep_modes, rep_seeds, rep_format, rep_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

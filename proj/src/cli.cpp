#include "bergman/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "bergman/decomposition.hpp"
#include "bergman/errors.hpp"
#include "bergman/fta.hpp"
#include "bergman/io.hpp"
#include "bergman/primes.hpp"
#include "bergman/series.hpp"

namespace bergman::cli {

namespace {

using io::Json;

// Block listings are included in decompose reports up to this degree.
constexpr Exponent kListingDegree = 256;

class Reporter {
public:
    explicit Reporter(const RunConfig& config) : config_(config) {}

    std::string format(double value) const
    {
        if (!std::isfinite(value)) {
            return "nan";
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.*g", std::min(config_.float_digits, 17), value);
        return buf;
    }

    Json number(double value) const
    {
        if (!std::isfinite(value)) {
            return nullptr;
        }
        return std::strtod(format(value).c_str(), nullptr);
    }

    Json pi(const PiRational& v) const
    {
        Json out = io::encode(v);
        out["float"] = number(v.to_double());
        if (!v.is_real()) {
            out["float_im"] = number(to_double(v.coefficient().im()) * std::numbers::pi);
        }
        return out;
    }

    Json rational(const Rational& q) const { return Json{{"exact", io::encode(q)}, {"float", number(to_double(q))}}; }

private:
    const RunConfig& config_;
};

bool is_exact_pair(const Json& v)
{
    auto integral = [](const Json& x) { return x.is_number_integer() || x.is_string(); };
    return v.is_array() && v.size() == 2 && integral(v[0]) && integral(v[1]);
}

std::string csv_cell(const Json& v)
{
    auto part = [](const Json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
    if (is_exact_pair(v)) {
        return part(v[0]) + "/" + part(v[1]);
    }
    return part(v);
}

// Top-level scalar fields (and [num, den] pairs) as a header plus one row.
std::string report_as_csv(const Json& report)
{
    std::string header;
    std::string row;
    bool first = true;
    for (const auto& [key, value] : report.items()) {
        if (value.is_structured() && !is_exact_pair(value)) {
            continue;
        }
        header += (first ? "" : ",") + key;
        row += (first ? "" : ",") + csv_cell(value);
        first = false;
    }
    return header + "\n" + row + "\n";
}

std::pair<Natural, Natural> parse_range(const std::string& text)
{
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        throw std::invalid_argument("range must look like A..B, got '" + text + "'");
    }
    auto bound = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
            throw std::invalid_argument("range must look like A..B, got '" + text + "'");
        }
        return static_cast<Natural>(std::stoull(s));
    };
    return {bound(text.substr(0, dots)), bound(text.substr(dots + 2))};
}

std::vector<Natural> sweep_points(Natural lo, Natural hi, std::size_t points)
{
    std::vector<Natural> out;
    if (lo > hi) {
        return out;
    }
    if (points == 0) {
        for (Natural v = lo; v <= hi; ++v) {
            out.push_back(v);
        }
        return out;
    }
    if (lo == 0) {
        throw std::invalid_argument("log-spaced sweeps need a range starting at 1 or above");
    }
    const double a = std::log(static_cast<double>(lo));
    const double b = std::log(static_cast<double>(hi));
    for (std::size_t i = 0; i < points; ++i) {
        const double t = points == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(points - 1);
        Natural v = static_cast<Natural>(std::llround(std::exp(a + t * (b - a))));
        v = std::clamp(v, lo, hi);
        if (out.empty() || out.back() != v) {
            out.push_back(v);
        }
    }
    return out;
}

class PrimeSource {
public:
    explicit PrimeSource(const RunConfig& config) : config_(config) {}

    PrimeSet up_to(Natural limit) const
    {
        if (config_.sieve_cache_path) {
            PrimeSet cached = load_prime_set(*config_.sieve_cache_path);
            if (cached.limit() >= limit && cached.limit() > 0) {
                return cached;
            }
            PrimeSet fresh = sieve(limit);
            save_prime_set(fresh, *config_.sieve_cache_path);
            return fresh;
        }
        return sieve(limit);
    }

private:
    const RunConfig& config_;
};

struct Args {
    std::string config_path;
    std::optional<int> float_digits;
    std::string grid_text;
    std::string format_text;

    std::string series;
    std::string f_series;
    std::string g_series;
    std::string radius = "1";
    std::string poly;

    Natural limit = 0;
    Natural n = 0;
    Natural pk = 0;
    Natural degree = 0;
    std::optional<Natural> p2_limit;
    std::optional<Natural> partial_limit;

    std::string sweep_kind;
    std::string sweep_range;
    std::size_t points = 0;
};

struct Outcome {
    std::string text;
    int code = kOk;
};

class Commands {
public:
    Commands(const RunConfig& config, const Args& args)
        : config_(config), args_(args), report_(config), primes_(config)
    {
    }

    Json norm() const
    {
        const SparseSeries f = io::parse_series(args_.series);
        return report_.pi(norm_sq(f, Disc(parse_rational(args_.radius))));
    }

    Json inner() const
    {
        const SparseSeries f = io::parse_series(args_.f_series);
        const SparseSeries g = io::parse_series(args_.g_series);
        return report_.pi(inner_product(f, g, Disc(parse_rational(args_.radius))));
    }

    Json fta_cert() const
    {
        const Polynomial p = io::parse_polynomial(args_.poly);
        RunConfig checked = config_;
        if (!args_.grid_text.empty()) {
            checked.default_grid = QuadratureGrid::parse(args_.grid_text);
            checked.validate();
        }
        const QuadratureGrid& grid = checked.default_grid;
        const CertificateReport cert = root_disc_certificate(p, grid);
        Json out;
        out["r0"] = io::encode(cert.r0);
        out["annulus_bound"] = report_.number(cert.annulus_bound);
        out["inner_integral"] = cert.inner_integral ? report_.number(*cert.inner_integral) : Json(nullptr);
        out["m_constant"] = cert.m_constant ? report_.number(*cert.m_constant) : Json(nullptr);
        out["certified_radius"] = report_.number(cert.certified_radius);
        out["root_witness"] = cert.root_witness
            ? Json::array({report_.number(cert.root_witness->real()), report_.number(cert.root_witness->imag())})
            : Json(nullptr);
        out["grid"] = cert.grid.to_string();
        out["cauchy_bound"] = report_.number(cert.cauchy_bound);
        out["comment"] = cert.comment;
        return out;
    }

    Json primes_norm() const
    {
        const PrimeSet primes = primes_.up_to(args_.limit);
        Json out{{"limit", args_.limit}, {"prime_count", primes.in_range(2, args_.limit).size()}};
        out.update(report_.pi(prime_norm_partial(primes, args_.limit)));
        out["reciprocal_sum"] = report_.rational(prime_reciprocal_sum(primes, args_.limit));
        return out;
    }

    Json primes_bertrand() const
    {
        if (args_.n < 1) {
            throw std::invalid_argument("--n must be at least 1");
        }
        const BertrandWitness w = bertrand_witness(args_.n, primes_.up_to(2 * args_.n));
        Json out{{"n", args_.n}};
        out.update(report_.pi(w.value));
        out["prime_exists"] = w.prime_exists;
        return out;
    }

    Json primes_twins() const
    {
        const PrimeSet primes = primes_.up_to(args_.limit + 2);
        Json out{{"limit", args_.limit}};
        out.update(report_.pi(twin_prime_norm_partial(primes, args_.limit)));
        return out;
    }

    Json primes_euler() const
    {
        const PrimePartition part(args_.pk, args_.pk, primes_.up_to(args_.pk));
        const Rational product = euler_product_smooth(part);
        return Json{{"pk", args_.pk}, {"product", io::encode(product)}, {"float", report_.number(to_double(product))}};
    }

    Json primes_sieve() const
    {
        const PrimeSet primes = primes_.up_to(args_.limit);
        return Json{{"limit", args_.limit}, {"count", primes.in_range(2, args_.limit).size()},
                    {"primes", primes.in_range(2, args_.limit)}};
    }

    Json primes_classify() const
    {
        const PrimePartition part(args_.pk, args_.pk, primes_.up_to(args_.pk));
        return Json{{"n", args_.n}, {"pk", args_.pk}, {"class", to_string(classify(args_.n, part))}};
    }

    Json primes_tail() const
    {
        const PrimePartition part(args_.pk, args_.limit, primes_.up_to(std::max(args_.pk, args_.limit)));
        const Rational s = tail_sum(part);
        return Json{{"pk", args_.pk}, {"p2_limit", args_.limit}, {"tail", io::encode(s)},
                    {"float", report_.number(to_double(s))}, {"below_one", s < 1}};
    }

    Json decompose_geometric() const
    {
        const PartitionReport rep = geometric_partition(args_.pk, args_.degree);
        Json out{{"pk", rep.pk}, {"degree", rep.degree}, {"coverage", "exact"}, {"block_count", rep.blocks.size()}};
        PiRational parseval;
        std::size_t smooth = 0;
        for (const auto& b : rep.blocks) {
            parseval += norm_sq(b.series, Disc::unit());
            smooth += b.kind == BlockKind::SmoothMono ? 1 : 0;
        }
        out["smooth_count"] = smooth;
        out["block_norm_sum"] = report_.pi(parseval);
        if (rep.degree <= kListingDegree) {
            Json blocks = Json::array();
            for (const auto& b : rep.blocks) {
                blocks.push_back({{"label", b.label()}, {"series", io::encode(b.series)}});
            }
            out["blocks"] = std::move(blocks);
        }
        return out;
    }

    Json decompose_rough() const
    {
        const DedupReport rep = rough_dedup(args_.pk, args_.degree, args_.p2_limit.value_or(args_.degree));
        Json out{{"pk", rep.pk}, {"degree", rep.degree}, {"p2_limit", rep.p2_limit}, {"coverage", "exact"},
                 {"l_count", rep.g_blocks.size()}};
        std::size_t nonempty = 0;
        for (const auto& b : rep.g_blocks) {
            nonempty += b.g.is_zero() ? 0 : 1;
        }
        out["nonempty_g_count"] = nonempty;
        out["q_norm"] = report_.pi(norm_sq(rep.q_block, Disc::unit()));
        if (rep.degree <= kListingDegree) {
            out["q_block"] = io::encode(rep.q_block);
            Json blocks = Json::array();
            Json h_norms = Json::array();
            for (const auto& b : rep.g_blocks) {
                blocks.push_back({{"l", b.l}, {"series", io::encode(b.g)}});
                h_norms.push_back({{"l", b.l}, {"norm", io::encode(b.h_norm)}});
            }
            out["g_blocks"] = std::move(blocks);
            out["h_norms"] = std::move(h_norms);
        }
        return out;
    }

    Outcome comparison(const NormComparison& c, Json out) const
    {
        out["lhs"] = report_.pi(c.lhs);
        out["rhs"] = report_.pi(c.rhs);
        out["holds"] = c.holds;
        return {out.dump(), c.holds ? kOk : kHypothesisFailed};
    }

    Outcome decompose_step_one() const
    {
        return comparison(step_one_norm_bound(args_.pk, args_.degree), {{"pk", args_.pk}, {"degree", args_.degree}});
    }

    Outcome decompose_step_two() const
    {
        const Natural p2 = args_.p2_limit.value_or(args_.degree);
        return comparison(step_two_norm_bound(args_.pk, args_.degree, p2),
                          {{"pk", args_.pk}, {"degree", args_.degree}, {"p2_limit", p2}});
    }

    Outcome decompose_tail_bound() const
    {
        const Natural p2 = args_.p2_limit.value_or(args_.pk);
        const PrimePartition part(args_.pk, p2, primes_.up_to(std::max(args_.pk, p2)));
        const TailBound t = rough_tail_geometric_bound(part, args_.partial_limit.value_or(p2));
        Json out{{"pk", args_.pk}, {"p2_limit", p2}, {"partial_limit", t.partial_limit},
                 {"tail", report_.rational(t.tail)}, {"majorant", report_.rational(t.majorant)},
                 {"partial_sum", report_.rational(t.partial_sum)}, {"holds", t.holds}};
        return {out.dump(), t.holds ? kOk : kHypothesisFailed};
    }

    std::string sweep() const
    {
        const auto [lo, hi] = parse_range(args_.sweep_range);
        const std::vector<Natural> params = sweep_points(lo, hi, args_.points);
        const Natural top = params.empty() ? 0 : params.back();
        const std::string& kind = args_.sweep_kind;

        struct Row {
            Natural parameter;
            Rational exact;
            double value;
            std::optional<bool> flag;
        };
        std::vector<Row> rows;
        if (kind == "primes-norm") {
            const PrimeSet primes = primes_.up_to(top);
            for (Natural l : params) {
                const PiRational v = prime_norm_partial(primes, l);
                rows.push_back({l, v.real_coefficient(), v.to_double(), std::nullopt});
            }
        } else if (kind == "twins") {
            const PrimeSet primes = primes_.up_to(top + 2);
            for (Natural l : params) {
                const PiRational v = twin_prime_norm_partial(primes, l);
                rows.push_back({l, v.real_coefficient(), v.to_double(), std::nullopt});
            }
        } else if (kind == "bertrand") {
            const PrimeSet primes = primes_.up_to(2 * top);
            for (Natural n : params) {
                if (n < 1) {
                    throw std::invalid_argument("bertrand sweep needs N >= 1");
                }
                const BertrandWitness w = bertrand_witness(n, primes);
                rows.push_back({n, w.value.real_coefficient(), w.value.to_double(), w.prime_exists});
            }
        } else if (kind == "euler") {
            const PrimeSet primes = primes_.up_to(top);
            for (Natural pk : params) {
                if (!primes.contains(pk)) {
                    continue;
                }
                const Rational v = euler_product_smooth(PrimePartition(pk, pk, primes));
                rows.push_back({pk, v, to_double(v), std::nullopt});
            }
        } else {
            throw std::invalid_argument("unknown sweep '" + kind + "' (primes-norm, twins, bertrand, euler)");
        }

        const bool with_flag = kind == "bertrand";
        if (config_.output_format.value_or(OutputFormat::Csv) == OutputFormat::Json) {
            Json out = Json::array();
            for (const auto& r : rows) {
                Json row{{"parameter", r.parameter},
                         {"numerator", io::encode_integer(r.exact.get_num())},
                         {"denominator", io::encode_integer(r.exact.get_den())},
                         {"float", report_.number(r.value)}};
                if (r.flag) {
                    row["prime_exists"] = *r.flag;
                }
                out.push_back(std::move(row));
            }
            return out.dump() + "\n";
        }
        std::string csv = with_flag ? "parameter,numerator,denominator,float,prime_exists\n"
                                    : "parameter,numerator,denominator,float\n";
        for (const auto& r : rows) {
            csv += std::to_string(r.parameter) + "," + r.exact.get_num().get_str() + "," +
                   r.exact.get_den().get_str() + "," + report_.format(r.value);
            if (r.flag) {
                csv += *r.flag ? ",true" : ",false";
            }
            csv += "\n";
        }
        return csv;
    }

private:
    const RunConfig& config_;
    const Args& args_;
    Reporter report_;
    PrimeSource primes_;
};

std::string error_line(const std::string& kind, const std::string& reason)
{
    return Json{{"error", kind}, {"reason", reason}}.dump() + "\n";
}

} // namespace

int dispatch(const std::vector<std::string>& argv_in, std::ostream& out, std::ostream& err, const EnvLookup& env)
{
    Args args;
    CLI::App app{"Exact Bergman-space calculus on discs: norms, root-disc certificates, prime series"};
    app.require_subcommand(1);
    app.add_option("--config", args.config_path, "key = value defaults file");
    app.add_option("--float-digits", args.float_digits, "significant digits in float renderings (1-30)");
    app.add_option("--format", args.format_text, "json or csv");

    auto* norm = app.add_subcommand("norm", "squared Bergman norm of a series");
    norm->add_option("--series", args.series, "coeff@exp,...")->required();
    norm->add_option("--radius", args.radius, "disc radius (rational)");

    auto* inner = app.add_subcommand("inner", "Bergman inner product <f, g>");
    inner->add_option("--f", args.f_series)->required();
    inner->add_option("--g", args.g_series)->required();
    inner->add_option("--radius", args.radius);

    auto* cert = app.add_subcommand("fta-cert", "root-disc certificate for a polynomial");
    cert->add_option("--poly", args.poly, "a0,a1,...,an")->required();
    cert->add_option("--grid", args.grid_text, "NRxNT quadrature grid");

    auto* primes = app.add_subcommand("primes", "prime series quantities");
    primes->require_subcommand(1);
    auto* p_norm = primes->add_subcommand("norm", "pi * sum 1/(p+1) over p <= limit");
    p_norm->add_option("--limit", args.limit)->required();
    auto* p_bertrand = primes->add_subcommand("bertrand", "<g_N, q_N> witness");
    p_bertrand->add_option("--n", args.n)->required();
    auto* p_twins = primes->add_subcommand("twins", "partial twin-prime norm");
    p_twins->add_option("--limit", args.limit)->required();
    auto* p_euler = primes->add_subcommand("euler", "Euler product over primes below pk");
    p_euler->add_option("--pk", args.pk)->required();
    auto* p_sieve = primes->add_subcommand("sieve", "list primes");
    p_sieve->add_option("--limit", args.limit)->required();
    auto* p_classify = primes->add_subcommand("classify", "smooth / rough / mixed");
    p_classify->add_option("--n", args.n)->required();
    p_classify->add_option("--pk", args.pk)->required();
    auto* p_tail = primes->add_subcommand("tail", "sum 1/p over pk <= p <= limit");
    p_tail->add_option("--pk", args.pk)->required();
    p_tail->add_option("--limit", args.limit)->required();

    auto* decompose = app.add_subcommand("decompose", "orthogonal decompositions");
    decompose->require_subcommand(1);
    auto* d_geometric = decompose->add_subcommand("geometric", "partition of 1 + z + ... + z^D");
    auto* d_rough = decompose->add_subcommand("rough", "deduplicated decomposition of F");
    auto* d_one = decompose->add_subcommand("step-one", "norm bound for the geometric partition");
    auto* d_two = decompose->add_subcommand("step-two", "norm bound for the rough decomposition");
    for (auto* sub : {d_geometric, d_rough, d_one, d_two}) {
        sub->add_option("--pk", args.pk)->required();
        sub->add_option("--degree", args.degree)->required();
    }
    for (auto* sub : {d_rough, d_two}) {
        sub->add_option("--p2-limit", args.p2_limit, "defaults to the degree");
    }
    auto* d_tail = decompose->add_subcommand("tail-bound", "geometric majorant of sum 1/l over rough l");
    d_tail->add_option("--pk", args.pk)->required();
    d_tail->add_option("--p2-limit", args.p2_limit)->required();
    d_tail->add_option("--partial-limit", args.partial_limit, "defaults to p2-limit");

    auto* sweep = app.add_subcommand("sweep", "CSV table over a parameter range");
    sweep->add_option("kind", args.sweep_kind, "primes-norm | twins | bertrand | euler")->required();
    sweep->add_option("range", args.sweep_range, "A..B")->required();
    sweep->add_option("--points", args.points, "log-spaced point count (default: every integer)");

    std::vector<const char*> argv;
    for (const auto& a : argv_in) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << error_line("usage", e.what());
        return kUsageError;
    }

    try {
        RunConfig config;
        if (!args.config_path.empty()) {
            apply_config_file(config, args.config_path);
        }
        apply_environment(config, env);
        if (args.float_digits) {
            config.float_digits = *args.float_digits;
        }
        if (!args.format_text.empty()) {
            config.output_format = parse_output_format(args.format_text);
        }
        config.validate();

        Commands cmd(config, args);
        Outcome result;
        bool is_report = true;
        auto json = [&](const Json& j) { result = {j.dump(), kOk}; };

        if (norm->parsed()) {
            json(cmd.norm());
        } else if (inner->parsed()) {
            json(cmd.inner());
        } else if (cert->parsed()) {
            json(cmd.fta_cert());
        } else if (p_norm->parsed()) {
            json(cmd.primes_norm());
        } else if (p_bertrand->parsed()) {
            json(cmd.primes_bertrand());
        } else if (p_twins->parsed()) {
            json(cmd.primes_twins());
        } else if (p_euler->parsed()) {
            json(cmd.primes_euler());
        } else if (p_sieve->parsed()) {
            json(cmd.primes_sieve());
        } else if (p_classify->parsed()) {
            json(cmd.primes_classify());
        } else if (p_tail->parsed()) {
            json(cmd.primes_tail());
        } else if (d_geometric->parsed()) {
            json(cmd.decompose_geometric());
        } else if (d_rough->parsed()) {
            json(cmd.decompose_rough());
        } else if (d_one->parsed()) {
            result = cmd.decompose_step_one();
        } else if (d_two->parsed()) {
            result = cmd.decompose_step_two();
        } else if (d_tail->parsed()) {
            result = cmd.decompose_tail_bound();
        } else if (sweep->parsed()) {
            result = {cmd.sweep(), kOk};
            is_report = false;
        }

        if (is_report) {
            if (config.output_format == OutputFormat::Csv) {
                result.text = report_as_csv(Json::parse(result.text));
            } else {
                result.text += "\n";
            }
        }
        out << result.text << std::flush;
        if (result.code == kHypothesisFailed) {
            err << error_line("hypothesis", "the checked inequality does not hold");
        }
        return result.code;
    } catch (const TailNotSmall& e) {
        err << error_line("hypothesis", e.what());
        return kHypothesisFailed;
    } catch (const ZeroConstantTerm& e) {
        err << error_line("input", e.what());
        return kUsageError;
    } catch (const DegreeTooSmall& e) {
        err << error_line("input", e.what());
        return kUsageError;
    } catch (const OutOfRange& e) {
        err << error_line("input", e.what());
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << error_line("input", e.what());
        return kUsageError;
    } catch (const std::out_of_range& e) {
        err << error_line("input", e.what());
        return kUsageError;
    } catch (const std::exception& e) {
        err << error_line("internal", e.what());
        return kInternalError;
    }
}

} // namespace bergman::cli

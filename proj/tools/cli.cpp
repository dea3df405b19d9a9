#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclelab/cycle.hpp"
#include "cyclelab/equidist.hpp"
#include "cyclelab/moebius.hpp"
#include "cyclelab/numerics.hpp"
#include "cyclelab/rotation.hpp"
#include "cyclelab/zeros.hpp"

namespace cyclelab::cli {

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Signature parse_signature(const std::string& text) {
    Signature sig;
    std::istringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) sig.push_back(std::stoi(tok));
    std::sort(sig.begin(), sig.end());
    if (sig.empty()) throw UsageError("empty signature");
    return sig;
}

std::string signature_text(const Signature& sig) {
    std::string s;
    for (std::size_t i = 0; i < sig.size(); ++i) {
        if (i) s += '+';
        s += std::to_string(sig[i]);
    }
    return s;
}

// Output sink: file when a path is set, the summary stream otherwise.
class Sink {
  public:
    Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);  // LF line endings everywhere
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

  private:
    std::ofstream file_;
    std::ostream& fallback_;
};

std::vector<double> sequence_values(const RunConfig& cfg) {
    const SequencePair pair = sequences(cfg.l);
    const std::vector<long long>& src = cfg.seq == "x" ? pair.x : pair.n_minus_x;
    return {src.begin(), src.end()};
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
    const CycleClass cc = make_cycle_class(cfg.l, cfg.n);
    out << "M=" << m_bound(cfg.l, cfg.n) << " N=" << n_bound(cfg.l, cfg.n) << " c=" << cc.c
        << "\n";
    return kExitOk;
}

int cmd_cycle(const RunConfig& cfg, std::ostream& out) {
    Cycle cy = cycle_from_parity(ceiling_parity(cfg.l, cfg.n));
    BigInt divisor = 1;
    if (cfg.reduce) std::tie(cy, divisor) = reduce_primitive(cy);
    Sink sink(cfg.output_path, out);
    if (cfg.format == "json") {
        nlohmann::json j;
        j["l"] = cfg.l;
        j["n"] = cfg.n;
        j["c"] = cy.c.str();
        j["divisor"] = divisor.str();
        for (std::size_t i = 0; i < cy.elements.size(); ++i) {
            j["elements"].push_back(cy.elements[i].str());
        }
        sink.stream() << j.dump(2) << "\n";
    } else {
        sink.stream() << "index,element,parity\n";
        for (std::size_t i = 0; i < cy.elements.size(); ++i) {
            sink.stream() << (i + 1) << "," << cy.elements[i] << ","
                          << int(cy.parity.bits[i]) << "\n";
        }
    }
    out << "c=" << cy.c << " elements=" << cy.elements.size() << " divisor=" << divisor << "\n";
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const BoundsReport rep = verify_extremality(cfg.l, cfg.n, cfg.brute_limit);
    if (!cfg.output_path.empty()) {
        Sink sink(cfg.output_path, out);
        sink.stream() << "orbit,min_element,max_odd\n";
        for (std::size_t i = 0; i < rep.orbits.size(); ++i) {
            sink.stream() << (i + 1) << "," << rep.orbits[i].min_element << ","
                          << rep.orbits[i].max_odd << "\n";
        }
    }
    out << "M=" << rep.m << " N=" << rep.n_value << " orbits=" << rep.orbits.size()
        << " m_holds=" << (rep.m_holds ? "yes" : "no")
        << " n_holds=" << (rep.n_holds ? "yes" : "no")
        << " same_cycle=" << (rep.same_cycle ? "yes" : "no") << "\n";
    return rep.m_holds && rep.n_holds ? kExitOk : kExitInternal;
}

int cmd_rotation(const RunConfig& cfg, std::ostream& out) {
    const RotationRecord rec = solve_congruence(cfg.l, cfg.n);
    out << "d=" << rec.d << " x=" << rec.x << " n_minus_x=" << rec.n_minus_x << "\n";
    return kExitOk;
}

int cmd_basis(const RunConfig& cfg, std::ostream& out) {
    const BasisTable table = basis_table(cfg.l);
    Sink sink(cfg.output_path, out);
    sink.stream() << "x,n_list,distinct_prime_count\n";
    for (long long x : table.basis) {
        sink.stream() << x << ",";
        const auto& ns = table.groups.at(x);
        for (std::size_t i = 0; i < ns.size(); ++i) {
            if (i) sink.stream() << ";";
            sink.stream() << ns[i];
        }
        sink.stream() << "," << table.factor_counts.at(x) << "\n";
    }
    out << "basis_size=" << table.basis.size() << " max_distinct_primes=" << table.max_factor_count
        << "\n";
    return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
    const std::vector<PrimeSweepRow> rows = prime_sweep(cfg.limit);
    Sink sink(cfg.output_path, out);
    sink.stream() << "p,basis_size,max_distinct_primes\n";
    for (const PrimeSweepRow& r : rows) {
        sink.stream() << r.p << "," << r.basis_size << "," << r.max_distinct_primes << "\n";
    }
    out << "rows=" << rows.size() << "\n";
    return kExitOk;
}

int cmd_sequence(const RunConfig& cfg, std::ostream& out) {
    const std::vector<double> values = sequence_values(cfg);
    Sink sink(cfg.output_path, out);
    sink.stream() << "index,value\n";
    std::size_t zeros = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] == 0.0) ++zeros;
        sink.stream() << (i + 1) << "," << static_cast<long long>(values[i]) << "\n";
    }
    out << "length=" << values.size() << " zeros=" << zeros << "\n";
    return kExitOk;
}

int cmd_weyl(const RunConfig& cfg, std::ostream& out) {
    const NormalizedSequence seq = normalize(sequence_values(cfg), kDefaultStep, false, cfg.seq);
    const WeylCurve curve = weyl_curve(seq, cfg.m);
    Sink sink(cfg.output_path, out);
    sink.stream() << "N,modulus\n";
    for (std::size_t i = 0; i < curve.moduli.size(); ++i) {
        sink.stream() << (i + 1) << "," << fmt_double(curve.moduli[i]) << "\n";
    }
    out << "m=" << cfg.m << " final_modulus=" << fmt_double(curve.moduli.back()) << "\n";
    return kExitOk;
}

int cmd_riemann(const RunConfig& cfg, std::ostream& out) {
    const NormalizedSequence seq = normalize(sequence_values(cfg), kDefaultStep, false, cfg.seq);
    const std::vector<RiemannReport> reports = riemann_battery(seq);
    Sink sink(cfg.output_path, out);
    sink.stream() << "function,shift,estimate,target\n";
    for (const RiemannReport& r : reports) {
        sink.stream() << r.function_id << "," << fmt_double(r.shift) << ","
                      << fmt_double(r.estimate) << "," << fmt_double(r.target) << "\n";
    }
    out << "functions=" << reports.size() << "\n";
    return kExitOk;
}

int cmd_moebius(const RunConfig& cfg, std::ostream& out) {
    std::vector<double> a;
    if (!cfg.zeros_path.empty()) {
        a = load_zeros(cfg.zeros_path, cfg.count).values;
    } else if (cfg.l != 0) {
        a = sequence_values(cfg);
    } else {
        throw UsageError("moebius requires either --zeros-file or --l");
    }
    const MoebiusSieve sieve = moebius_sieve(a.size());
    if (cfg.signature.empty()) {
        Sink sink(cfg.output_path, out);
        sink.stream() << "m,signature,value\n";
        for (const ConvolutionCurve& curve : curves(a, sieve)) {
            for (const auto& [m, value] : curve.points) {
                sink.stream() << m << "," << signature_text(curve.signature) << ","
                              << fmt_double(value) << "\n";
            }
        }
        out << "length=" << a.size() << "\n";
        return kExitOk;
    }
    const Signature sig = parse_signature(cfg.signature);
    const DifferenceAnalysis da = difference_analysis(a, sieve, sig);
    if (!cfg.output_path.empty()) {
        Sink sink(cfg.output_path, out);
        sink.stream() << "index,sample\n";
        for (std::size_t i = 0; i < da.samples.size(); ++i) {
            sink.stream() << (i + 1) << "," << fmt_double(da.samples[i]) << "\n";
        }
    }
    out << "signature=" << signature_text(sig) << " n=" << da.fit.count
        << " mean=" << fmt_double(da.fit.mean) << " mean_ci=(" << fmt_double(da.fit.mean_ci95.first)
        << "," << fmt_double(da.fit.mean_ci95.second) << ")"
        << " std=" << fmt_double(da.fit.stddev) << " std_ci=(" << fmt_double(da.fit.std_ci95.first)
        << "," << fmt_double(da.fit.std_ci95.second) << ")\n";
    return kExitOk;
}

int cmd_fit(const RunConfig& cfg, std::ostream& out) {
    std::ifstream in(cfg.input_path);
    if (!in) throw std::runtime_error("cannot open input file: " + cfg.input_path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty input file");
    std::vector<double> xs, ys;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string p, basis, maxf;
        if (!std::getline(ss, p, ',') || !std::getline(ss, basis, ',') || !std::getline(ss, maxf))
            throw std::runtime_error("malformed row at line " + std::to_string(lineno));
        const double pv = std::stod(p);
        if (cfg.target == "maxfactor") {
            xs.push_back(std::sqrt(pv));
            ys.push_back(std::stod(maxf));
        } else {
            xs.push_back(pv);
            ys.push_back(std::stod(basis));
        }
    }
    const int degree = cfg.target == "maxfactor" ? 1 : 2;
    const FitResult fit = polyfit(xs, ys, degree);
    if (cfg.format == "json") {
        nlohmann::json j;
        j["degree"] = fit.degree;
        for (std::size_t i = 0; i < fit.coefficients.size(); ++i) {
            j["coefficients"].push_back(fit.coefficients[i]);
            j["ci95"].push_back({fit.ci95[i].first, fit.ci95[i].second});
        }
        j["sse"] = fit.sse;
        j["r2"] = fit.r2;
        j["rmse"] = fit.rmse;
        out << j.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < fit.coefficients.size(); ++i) {
            out << "p" << (i + 1) << "=" << fmt_double(fit.coefficients[i]) << " ci=("
                << fmt_double(fit.ci95[i].first) << "," << fmt_double(fit.ci95[i].second) << ")\n";
        }
        out << "SSE=" << fmt_double(fit.sse) << " R2=" << fmt_double(fit.r2)
            << " RMSE=" << fmt_double(fit.rmse) << "\n";
    }
    return kExitOk;
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& argv) {
    RunConfig cfg;
    CLI::App app{"3n+c cycle bounds, rotation congruences and distribution analyses"};
    app.require_subcommand(1);

    auto add_ln = [&cfg](CLI::App* sub, bool need_n) {
        sub->add_option("--l", cfg.l, "cycle length")->required();
        if (need_n) sub->add_option("--n", cfg.n, "number of odd elements")->required();
    };
    auto add_out = [&cfg](CLI::App* sub) {
        sub->add_option("--output", cfg.output_path, "output file (default stdout)");
        sub->add_option("--format", cfg.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    };
    auto add_seq = [&cfg](CLI::App* sub) {
        sub->add_option("--seq", cfg.seq, "sequence: n-x or x")
            ->check(CLI::IsMember({"n-x", "x"}));
    };

    add_ln(app.add_subcommand("bounds", "extremal bounds M, N and c"), true);
    CLI::App* cyc = app.add_subcommand("cycle", "full cycle from the ceiling parity vector");
    add_ln(cyc, true);
    cyc->add_flag("--reduce", cfg.reduce, "divide out the element gcd");
    add_out(cyc);
    CLI::App* ver = app.add_subcommand("verify", "brute-force extremality check");
    add_ln(ver, true);
    ver->add_option("--brute-limit", cfg.brute_limit, "enumeration cap on l");
    add_out(ver);
    add_ln(app.add_subcommand("rotation", "rotation distance and congruence solution"), true);
    CLI::App* bas = app.add_subcommand("basis", "basis table for prime l");
    add_ln(bas, false);
    add_out(bas);
    CLI::App* sw = app.add_subcommand("sweep", "basis statistics per odd prime");
    sw->add_option("--limit", cfg.limit, "upper bound on primes")->required();
    add_out(sw);
    CLI::App* sq = app.add_subcommand("sequence", "sorted congruence sequence");
    add_ln(sq, false);
    add_seq(sq);
    add_out(sq);
    CLI::App* wy = app.add_subcommand("weyl", "Weyl exponential-sum prefix moduli");
    add_ln(wy, false);
    add_seq(wy);
    wy->add_option("--m", cfg.m, "frequency (nonzero)");
    add_out(wy);
    CLI::App* ri = app.add_subcommand("riemann", "Riemann-sum battery");
    add_ln(ri, false);
    add_seq(ri);
    add_out(ri);
    CLI::App* mo = app.add_subcommand("moebius", "Moebius convolution curves and fits");
    mo->add_option("--l", cfg.l, "sequence length parameter");
    add_seq(mo);
    mo->add_option("--zeros-file", cfg.zeros_path, "zeta zeros table")
        ->envname("CYCLELAB_ZEROS");
    mo->add_option("--count", cfg.count, "number of zeros to load");
    mo->add_option("--signature", cfg.signature, "curve signature, e.g. 1,1");
    add_out(mo);
    CLI::App* ft = app.add_subcommand("fit", "least-squares fits of a sweep CSV");
    ft->add_option("--input", cfg.input_path, "sweep CSV")->required();
    ft->add_option("--target", cfg.target, "basis or maxfactor")
        ->check(CLI::IsMember({"basis", "maxfactor"}));
    add_out(ft);

    std::vector<std::string> args(argv.rbegin(), argv.rend());  // CLI11 wants reversed order
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }
    for (CLI::App* sub : app.get_subcommands()) cfg.command = sub->get_name();
    return cfg;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command == "bounds") return cmd_bounds(cfg, out);
        if (cfg.command == "cycle") return cmd_cycle(cfg, out);
        if (cfg.command == "verify") return cmd_verify(cfg, out);
        if (cfg.command == "rotation") return cmd_rotation(cfg, out);
        if (cfg.command == "basis") return cmd_basis(cfg, out);
        if (cfg.command == "sweep") return cmd_sweep(cfg, out);
        if (cfg.command == "sequence") return cmd_sequence(cfg, out);
        if (cfg.command == "weyl") return cmd_weyl(cfg, out);
        if (cfg.command == "riemann") return cmd_riemann(cfg, out);
        if (cfg.command == "moebius") return cmd_moebius(cfg, out);
        if (cfg.command == "fit") return cmd_fit(cfg, out);
        err << "unknown command: " << cfg.command << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::logic_error& e) {
        err << "internal invariant violation: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitData;
    }
}

int main_impl(int argc, const char* const* argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    RunConfig cfg;
    try {
        cfg = parse_args(args);
    } catch (const HelpRequested& e) {
        std::cout << e.what();
        return kExitOk;
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    return run(cfg, std::cout, std::cerr);
}

}  // namespace cyclelab::cli

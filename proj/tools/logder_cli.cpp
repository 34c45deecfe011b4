// logder: freeness / SPOG certificates for central hyperplane arrangements.
//
// exit codes: 0 positive, 1 negative or inconclusive, 2 usage/parse, 3 contract

#include "logder/arrangement.hpp"
#include "logder/certificate.hpp"
#include "logder/criteria.hpp"
#include "logder/derivation.hpp"
#include "logder/minors.hpp"
#include "logder/oracle.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace logder;
namespace fs = std::filesystem;

namespace {

enum Exit { kPositive = 0, kNegative = 1, kUsage = 2, kContract = 3 };

struct Job {
    std::string command;  // validate, saito, spog, minors, oracle, conjectures, verify-cert
    std::string sub;      // oracle / conjectures subcommand
    std::string arr_path;
    std::string der_path;
    std::optional<unsigned> max_degree;
    bool json = false;
    bool assume_pd1 = false;
    bool oracle_verify = false;
};

struct Outcome {
    int code = kPositive;
    std::string out;
    std::string err;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s;
}

template <class T>
std::vector<int> as_ints(const std::vector<T>& v) {
    return std::vector<int>(v.begin(), v.end());
}

std::string join_polys(std::span<const Polynomial> ps) {
    std::string s;
    for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + format(ps[i]);
    return s;
}

std::string derivation_text(const Derivation& d) {
    std::string s = "(";
    for (std::size_t j = 0; j < d.nvars(); ++j) s += (j ? ", " : "") + format(d[j]);
    return s + ")";
}

std::vector<Derivation> load_derivations(const Job& job, const Arrangement& a) {
    if (job.der_path.empty()) throw UsageError(job.command + " needs a derivation file");
    auto thetas = read_derivations_file(job.der_path);
    for (const auto& t : thetas)
        if (t.nvars() != a.nvars())
            throw FormatError("derivation file has " + std::to_string(t.nvars()) +
                                  " variables, arrangement has " + std::to_string(a.nvars()),
                              0);
    return thetas;
}

Arrangement load_arrangement(const Job& job) {
    Arrangement a = read_arrangement_file(job.arr_path);
    a.validate();
    return a;
}

// --- commands -----------------------------------------------------------------

int cmd_validate(const Job& job, std::ostream& out) {
    const Arrangement a = load_arrangement(job);
    const Polynomial q = a.defining_polynomial();
    if (job.json) {
        Json j = to_json(a);
        j["Q"] = format(q);
        j["size"] = a.size();
        j["essential"] = a.is_essential();
        out << j.dump(2) << "\n";
    } else {
        out << "Q = " << format(q) << ", |A| = " << a.size() << "\n";
        out << "l = " << a.nvars() << ", " << (a.is_essential() ? "essential" : "not essential") << "\n";
    }
    return kPositive;
}

int cmd_saito(const Job& job, std::ostream& out) {
    const Arrangement a = load_arrangement(job);
    const auto thetas = load_derivations(job, a);
    if (thetas.size() != a.nvars())
        throw UsageError("saito needs exactly " + std::to_string(a.nvars()) + " derivations, got " +
                         std::to_string(thetas.size()));
    const SaitoCertificate c = check_saito(a, thetas);
    if (job.json) {
        out << saito_certificate_json(a, thetas, c).dump(2) << "\n";
    } else {
        out << "verdict: " << to_string(c.verdict) << "\n";
        out << "det = " << format(c.determinant) << "\n";
        out << "Q = " << format(a.defining_polynomial()) << "\n";
        if (c.constant) out << "c = " << c.constant->get_str() << "\n";
        out << "exponents: (" << join(c.exponents) << "), sum " << c.degree_sum << ", |A| = " << c.arrangement_size
            << "\n";
    }
    return c.verdict == SaitoCertificate::Verdict::Free ? kPositive : kNegative;
}

int cmd_spog(const Job& job, std::ostream& out) {
    const Arrangement a = load_arrangement(job);
    const auto thetas = load_derivations(job, a);
    if (thetas.size() != a.nvars() + 1)
        throw UsageError("spog needs exactly " + std::to_string(a.nvars() + 1) + " derivations, got " +
                         std::to_string(thetas.size()));
    SpogCertificate c = check_spog(a, thetas, job.assume_pd1);
    std::optional<SpogOracleEvidence> ev;
    if (job.oracle_verify && c.verdict != SpogCertificate::Verdict::Fail) {
        const unsigned bound = job.max_degree.value_or(default_degree_bound(a, thetas));
        ev = oracle_verify_spog(a, thetas, c.relation_degree.value_or(-1), bound);
        apply_oracle_evidence(c, *ev);
    }
    if (job.json) {
        out << spog_certificate_json(a, thetas, c, ev).dump(2) << "\n";
    } else {
        out << "verdict: " << to_string(c.verdict);
        if (c.verdict == SpogCertificate::Verdict::Fail) out << " (" << to_string(c.reason) << ")";
        out << "\n";
        if (!c.detail.empty()) out << "detail: " << c.detail << "\n";
        out << "generator degrees: (" << join(c.generator_degrees) << ")\n";
        out << "relation: g = (" << join_polys(c.coefficients) << ")"
            << (c.relation_verified ? ", sum g_i theta_i = 0 checked" : "") << "\n";
        if (c.pivot) out << "linear coefficient: g_" << *c.pivot << ", relation degree " << *c.relation_degree << "\n";
        if (c.divisor_report) {
            out << "modulo-divisor test: " << to_string(c.divisor_report->outcome) << " (eliminated x"
                << c.divisor_report->pivot + 1 << ")";
            if (c.divisor_report->outcome == ModuloDivisorReport::Outcome::CommonDivisor)
                out << ", h = " << format(c.divisor_report->divisor);
            out << "\n";
        }
        if (c.saito) {
            out << "dropping theta_" << *c.saito_omitted << ": Saito " << to_string(c.saito->verdict) << ", exponents ("
                << join(c.saito->exponents) << ")\n";
        }
        if (ev) {
            out << "oracle up to degree " << ev->max_degree << ": generates " << (ev->generates ? "yes" : "no");
            if (ev->generation.first_failing_degree) out << " (fails at " << *ev->generation.first_failing_degree << ")";
            out << ", minimal " << (ev->minimal ? "yes" : "no") << ", relations in degree "
                << c.relation_degree.value_or(-1) << ": " << ev->relation_space_dim << "\n";
        }
    }
    return c.verdict == SpogCertificate::Verdict::Spog ? kPositive : kNegative;
}

int cmd_minors(const Job& job, std::ostream& out) {
    const Arrangement a = load_arrangement(job);
    const auto thetas = load_derivations(job, a);
    if (thetas.size() < a.nvars())
        throw UsageError("minors needs at least " + std::to_string(a.nvars()) + " derivations");
    const auto profiles = minor_profiles(thetas, a);
    if (job.json) {
        Json j = minors_json(a, thetas, profiles);
        if (thetas.size() == a.nvars() + 1) {
            Json g = Json::array();
            for (const auto& p : spog_coefficients(thetas, a)) g.push_back(format(p));
            j["spog_coefficients"] = g;
        }
        out << j.dump(2) << "\n";
    } else {
        out << "Q = " << format(a.defining_polynomial()) << "\n";
        for (const auto& p : profiles) {
            out << "I = {" << join(as_ints(p.rows)) << "}  sigma = " << p.sign_exponent << "  Delta = " << format(p.minor)
                << "  g = " << format(p.coefficient) << "\n";
        }
        if (thetas.size() == a.nvars() + 1)
            out << "relation coefficients: (" << join_polys(spog_coefficients(thetas, a)) << ")\n";
    }
    return kPositive;
}

unsigned size_bound(const Arrangement& a) { return static_cast<unsigned>(a.size()); }

int cmd_oracle(const Job& job, std::ostream& out) {
    const Arrangement a = load_arrangement(job);
    GradedOracle oracle(a);
    Json j;
    j["arrangement"] = to_json(a);
    int code = kPositive;

    if (job.sub == "dims") {
        const unsigned dmax = job.max_degree.value_or(size_bound(a));
        std::vector<std::size_t> dims;
        for (unsigned d = 0; d <= dmax; ++d) dims.push_back(oracle.dimension(d));
        if (job.json) {
            j["dims"] = dims;
        } else {
            out << "dim D(A)_d, d = 0.." << dmax << ":";
            for (auto x : dims) out << " " << x;
            out << "\n";
        }
    } else if (job.sub == "min-gens") {
        const unsigned dmax = job.max_degree.value_or(size_bound(a));
        const auto batches = oracle.minimal_generators(dmax);
        Json gens = Json::array();
        for (const auto& b : batches) {
            for (const auto& r : b.representatives) {
                Json g;
                g["degree"] = b.degree;
                g["components"] = to_json(std::span<const Derivation>(&r, 1))[0];
                gens.push_back(g);
                if (!job.json) out << "degree " << b.degree << ": " << derivation_text(r) << "\n";
            }
        }
        if (job.json) j["generators"] = gens;
        std::vector<unsigned> degs;
        for (const auto& b : batches)
            for (std::size_t k = 0; k < b.count(); ++k) degs.push_back(b.degree);
        if (job.json)
            j["degrees"] = degs;
        else
            out << "generator degrees: (" << join(as_ints(degs)) << ") up to degree " << dmax << "\n";
    } else if (job.sub == "syzygies") {
        std::vector<Derivation> gens;
        if (job.der_path.empty())
            gens = flatten(oracle.minimal_generators(size_bound(a)));
        else
            gens = load_derivations(job, a);
        int top = 0;
        for (const auto& g : gens) top = std::max(top, g.degree());
        const unsigned dmax = job.max_degree.value_or(static_cast<unsigned>(top) + size_bound(a));
        Json rows = Json::array();
        for (unsigned d = 0; d <= dmax; ++d) {
            const auto syz = syzygy_space(gens, d);
            if (syz.empty()) continue;
            Json r;
            r["degree"] = d;
            r["dimension"] = syz.size();
            Json basis = Json::array();
            for (const auto& s : syz) {
                Json b = Json::array();
                for (const auto& p : s) b.push_back(format(p));
                basis.push_back(b);
            }
            r["basis"] = basis;
            rows.push_back(r);
            if (!job.json) {
                out << "degree " << d << ": dimension " << syz.size() << "\n";
                for (const auto& s : syz) out << "  (" << join_polys(s) << ")\n";
            }
        }
        if (job.json) {
            j["generators"] = to_json(gens);
            j["max_degree"] = dmax;
            j["syzygies"] = rows;
        } else if (rows.empty()) {
            out << "no syzygies up to degree " << dmax << "\n";
        }
    } else if (job.sub == "generates") {
        const auto gens = load_derivations(job, a);
        const unsigned dmax = job.max_degree.value_or(default_degree_bound(a, gens));
        const GenerationReport r = oracle.submodule_generates(gens, dmax);
        if (job.json) {
            j["generates"] = r.generates;
            j["max_degree"] = r.max_degree;
            j["first_failing_degree"] = r.first_failing_degree ? Json(*r.first_failing_degree) : Json(nullptr);
            j["span_dims"] = r.span_dims;
            j["module_dims"] = r.module_dims;
        } else {
            out << "generates up to degree " << dmax << ": " << (r.generates ? "yes" : "no") << "\n";
            if (r.first_failing_degree) {
                const unsigned d = *r.first_failing_degree;
                out << "first gap in degree " << d << ": span " << r.span_dims[d] << " of " << r.module_dims[d] << "\n";
            }
        }
        code = r.generates ? kPositive : kNegative;
    } else {
        throw UsageError("unknown oracle subcommand '" + job.sub + "'");
    }
    if (job.json) out << j.dump(2) << "\n";
    return code;
}

int cmd_conjectures(const Job& job, std::ostream& out) {
    const Arrangement a = load_arrangement(job);
    if (job.sub == "resolution-shape") {
        const unsigned dmax = job.max_degree.value_or(size_bound(a) + 1);
        GradedOracle oracle(a);
        const ResolutionEvidence ev = oracle.resolution(dmax);
        const ResolutionShapeReport r = explore_conjecture_resolution_shape(a.nvars(), ev);
        if (job.json) {
            Json j;
            j["arrangement"] = to_json(a);
            j["status"] = to_string(r.status);
            j["max_degree"] = r.max_degree;
            j["generator_degrees"] = r.generator_degrees;
            j["relation_degrees"] = r.relation_degrees;
            Json pairs = Json::array();
            for (auto [rel, gen] : r.pairing) pairs.push_back({rel, gen});
            j["pairing"] = pairs;
            j["pd_at_most_one"] = ev.pd_at_most_one;
            out << j.dump(2) << "\n";
        } else {
            out << "generator degrees: (" << join(as_ints(r.generator_degrees)) << ")\n";
            if (r.relation_degrees.empty()) {
                out << "no relations; vacuous\n";
            } else {
                out << "relation degrees: (" << join(as_ints(r.relation_degrees)) << ")\n";
                for (auto [rel, gen] : r.pairing) out << "  relation " << rel << " <-> generator " << gen << "\n";
            }
            out << "length-one resolution up to degree " << dmax << ": " << (ev.pd_at_most_one ? "yes" : "no") << "\n";
            out << "status: " << to_string(r.status) << "\n";
        }
    } else if (job.sub == "generic-ideal") {
        std::vector<Derivation> gens;
        GradedOracle oracle(a);
        if (job.der_path.empty())
            gens = flatten(oracle.minimal_generators(size_bound(a)));
        else
            gens = load_derivations(job, a);
        const long ell = static_cast<long>(a.nvars());
        const long k = (ell - 1) * (static_cast<long>(a.size()) - ell - 1);
        const unsigned dmax = job.max_degree.value_or(static_cast<unsigned>(std::max(k, 0L) + a.size() + 4));
        const GenericIdealReport r = explore_conjecture_generic_ideal(a, gens, dmax);
        if (job.json) {
            Json j;
            j["arrangement"] = to_json(a);
            j["k"] = r.k;
            j["max_degree"] = r.max_degree;
            j["minor_count"] = r.minor_count;
            Json rows = Json::array();
            for (const auto& row : r.rows)
                rows.push_back({{"degree", row.degree},
                                {"ideal_dim", row.ideal_dim},
                                {"predicted_dim", row.predicted_dim},
                                {"agrees", row.agrees()}});
            j["rows"] = rows;
            out << j.dump(2) << "\n";
        } else {
            out << "k = " << r.k << ", " << r.minor_count << " nonzero maximal minors, d <= " << r.max_degree << "\n";
            out << "   d   dim J_d   predicted\n";
            for (const auto& row : r.rows) {
                char line[96];
                std::snprintf(line, sizeof line, "%4u  %8zu  %10zu  %s\n", row.degree, row.ideal_dim, row.predicted_dim,
                              row.agrees() ? "" : "differs");
                out << line;
            }
        }
    } else {
        throw UsageError("unknown conjectures subcommand '" + job.sub + "'");
    }
    return kPositive;
}

int cmd_verify_cert(const Job& job, std::ostream& out) {
    std::ifstream in(job.arr_path);
    if (!in) throw FormatError("cannot open " + job.arr_path, 0);
    Json cert;
    try {
        cert = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw FormatError(e.what(), 0);
    }
    const VerifyResult r = verify_certificate(cert);
    out << (r.ok ? "ok: " : "rejected: ") << r.message << "\n";
    return r.ok ? kPositive : kNegative;
}

Outcome run(const Job& job) {
    Outcome res;
    std::ostringstream out, err;
    try {
        if (job.command == "validate") res.code = cmd_validate(job, out);
        else if (job.command == "saito") res.code = cmd_saito(job, out);
        else if (job.command == "spog") res.code = cmd_spog(job, out);
        else if (job.command == "minors") res.code = cmd_minors(job, out);
        else if (job.command == "oracle") res.code = cmd_oracle(job, out);
        else if (job.command == "conjectures") res.code = cmd_conjectures(job, out);
        else if (job.command == "verify-cert") res.code = cmd_verify_cert(job, out);
        else throw UsageError("unknown command");
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        res.code = kUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        res.code = kUsage;
    } catch (const FormatError& e) {
        err << "parse error: " << e.what() << "\n";
        res.code = kUsage;
    } catch (const ValidationError& e) {
        err << "invalid arrangement: " << e.what() << "\n";
        res.code = kContract;
    } catch (const ContractViolation& e) {
        err << "contract violation (" << to_string(e.kind()) << "): " << e.what() << "\n";
        res.code = e.kind() == ContractViolation::Kind::WrongCount ? kUsage : kContract;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        res.code = kUsage;
    }
    res.out = out.str();
    res.err = err.str();
    return res;
}

// Every *.arr in dir, paired with a same-stem .der when the command needs one.
std::vector<Job> expand_batch(const Job& base) {
    std::vector<fs::path> arrs;
    for (const auto& e : fs::directory_iterator(base.arr_path))
        if (e.is_regular_file() && e.path().extension() == ".arr") arrs.push_back(e.path());
    std::sort(arrs.begin(), arrs.end());
    std::vector<Job> jobs;
    for (const auto& p : arrs) {
        Job j = base;
        j.arr_path = p.string();
        fs::path der = p;
        der.replace_extension(".der");
        j.der_path = fs::exists(der) ? der.string() : "";
        jobs.push_back(j);
    }
    return jobs;
}

int run_batch(const std::vector<Job>& jobs, unsigned n_threads) {
    std::vector<Outcome> results(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) results[i] = run(jobs[i]);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::max(1u, n_threads); ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    int worst = kPositive;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        std::cout << "== " << jobs[i].arr_path << " (exit " << results[i].code << ")\n" << results[i].out;
        std::cerr << results[i].err;
        worst = std::max(worst, results[i].code);
    }
    return worst;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"logder: exact freeness and SPOG certificates for central hyperplane arrangements"};
    app.require_subcommand(1);
    app.fallthrough();

    Job job;
    std::string fmt = "text";
    unsigned jobs = 0;
    unsigned max_degree = 0;
    app.add_option("--format", fmt, "output format")->check(CLI::IsMember({"text", "json"}));
    auto* md = app.add_option("--max-degree", max_degree, "degree bound for oracle checks");
    app.add_option("--jobs", jobs, "batch mode: worker threads over a directory of .arr files");

    // the derivation file stays optional at parse time so batch mode can pair files itself
    auto add_files = [&](CLI::App* c) {
        c->add_option("arrangement", job.arr_path, "arrangement file (or directory with --jobs)")->required();
        c->add_option("derivations", job.der_path, "derivation file");
    };

    auto* validate = app.add_subcommand("validate", "check an arrangement file, print Q and |A|");
    add_files(validate);
    auto* saito = app.add_subcommand("saito", "Saito's criterion for l derivations");
    add_files(saito);
    auto* spog = app.add_subcommand("spog", "minor-based SPOG test for l+1 derivations");
    add_files(spog);
    spog->add_flag("--assume-pd1", job.assume_pd1, "treat pd D(A) <= 1 as known");
    spog->add_flag("--oracle-verify", job.oracle_verify, "confirm generation, minimality, relation with the oracle");
    auto* minors = app.add_subcommand("minors", "table of signed maximal minors and quotients by Q");
    add_files(minors);

    auto* oracle = app.add_subcommand("oracle", "graded linear-algebra oracle for D(A)");
    oracle->require_subcommand(1);
    for (const char* name : {"dims", "min-gens", "syzygies", "generates"}) {
        auto* s = oracle->add_subcommand(name);
        add_files(s);
    }
    auto* conj = app.add_subcommand("conjectures", "exploratory reports (never affect the exit code)");
    conj->require_subcommand(1);
    for (const char* name : {"resolution-shape", "generic-ideal"}) {
        auto* s = conj->add_subcommand(name);
        add_files(s);
    }
    auto* verify = app.add_subcommand("verify-cert", "");
    verify->group("");
    verify->add_option("certificate", job.arr_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }

    CLI::App* cmd = app.get_subcommands().front();
    job.command = cmd->get_name();
    if (!cmd->get_subcommands().empty()) job.sub = cmd->get_subcommands().front()->get_name();
    job.json = fmt == "json";
    if (md->count()) job.max_degree = max_degree;

    if (jobs > 0 && fs::is_directory(job.arr_path)) {
        if (!job.der_path.empty()) {
            std::cerr << "usage error: batch mode pairs each .arr with its own .der\n";
            return kUsage;
        }
        return run_batch(expand_batch(job), jobs);
    }
    const Outcome r = run(job);
    std::cout << r.out;
    std::cerr << r.err;
    return r.code;
}

// cobex: command-line front end for the F2 cohomology / coboundary
// expansion / cocycle tester library.
//
// Exit codes: 0 computed (or positive verdict), 1 negative verdict on a
// decision command, 2 input error, 3 budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cobex/applications.hpp"
#include "cobex/cohomology.hpp"
#include "cobex/complex.hpp"
#include "cobex/errors.hpp"
#include "cobex/expansion.hpp"
#include "cobex/io.hpp"
#include "cobex/tester.hpp"

namespace {

using nlohmann::json;

constexpr const char* kBudgetEnvVar = "COBEX_BUDGET";

std::uint64_t default_budget() {
    if (const char* env = std::getenv(kBudgetEnvVar)) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw cobex::ParseError(std::string(kBudgetEnvVar) + " is not an integer");
        }
    }
    return cobex::kDefaultBudget;
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

cobex::Rational parse_probability(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        long long num = std::stoll(text.substr(0, slash));
        long long den = std::stoll(text.substr(slash + 1));
        return cobex::Rational(num, den);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return cobex::Rational(std::stoll(text), 1);
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    long long den = 1;
    for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
    return cobex::Rational(std::stoll(digits), den);
}

void emit(const json& body, const std::string& command, bool as_json,
          const std::string& text) {
    if (as_json) {
        json out = body;
        out["command"] = command;
        out["schema_version"] = 1;
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << text;
    }
}

std::string face_list_text(const cobex::Complex& x, const cobex::Cochain& c) {
    std::ostringstream os;
    bool first = true;
    for (const cobex::Face& f : cobex::support_faces(x, c)) {
        os << (first ? "" : "; ");
        first = false;
        const auto& v = f.vertices();
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    }
    return os.str();
}

std::string tester_text(const cobex::TesterReport& rep) {
    std::ostringstream os;
    os << "queries per trial: " << rep.queries << '\n';
    os << "exact rejection rate: " << rep.exact_rate << " (" << rep.exact_rate.decimal_string()
       << ")\n";
    if (rep.sample) {
        os << "sampled: " << rep.sample->rejections << "/" << rep.sample->trials
           << " rejections (seed " << rep.sample->seed << "), rate "
           << rep.sample->rate.decimal_string() << ", 99% Wilson ["
           << rep.sample->wilson_low << ", " << rep.sample->wilson_high << "]\n";
    }
    if (rep.distance_normalized)
        os << "normalized distance to coboundaries: " << *rep.distance_normalized << '\n';
    if (rep.epsilon_bound) os << "epsilon bound: " << *rep.epsilon_bound << '\n';
    if (rep.bound_satisfied)
        os << "rate >= epsilon * distance: " << (*rep.bound_satisfied ? "yes" : "NO") << '\n';
    return os.str();
}

struct CommonOpts {
    std::uint64_t budget = cobex::kDefaultBudget;
    bool as_json = false;
    int threads = 0;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"F2 cohomology, coboundary expansion constants, and cocycle-tester "
                 "simulation for finite simplicial complexes"};
    app.require_subcommand(1);
    int exit_code = 0;

    try {
        CommonOpts opts;
        opts.budget = default_budget();

        // generate
        auto* gen = app.add_subcommand("generate", "Write a complex file");
        std::vector<int> gen_complete;
        std::vector<std::string> gen_random;
        std::uint64_t gen_seed = 0;
        std::string gen_out;
        gen->add_option("--complete", gen_complete, "n d: complete d-complex on n vertices")
            ->expected(2);
        gen->add_option("--random", gen_random,
                        "n d p: full (d-1)-skeleton plus random d-faces kept with probability p")
            ->expected(3);
        gen->add_option("--seed", gen_seed, "PRNG seed for --random");
        gen->add_option("--out", gen_out, "output path")->required();
        gen->callback([&] {
            cobex::Complex x = [&] {
                if (!gen_complete.empty())
                    return cobex::Complex::complete(gen_complete[0], gen_complete[1]);
                if (gen_random.empty())
                    throw cobex::ParseError("generate: need --complete or --random");
                return cobex::Complex::random_subcomplex(std::stoi(gen_random[0]),
                                                         std::stoi(gen_random[1]),
                                                         parse_probability(gen_random[2]),
                                                         gen_seed);
            }();
            std::ofstream out(gen_out);
            if (!out) throw cobex::ParseError("generate: cannot write " + gen_out);
            out << cobex::io::serialize_complex(x);
        });

        // info
        auto* info = app.add_subcommand("info", "Face counts and cohomology dimensions");
        std::string info_file;
        bool info_json = false;
        info->add_option("file", info_file, "complex file")->required();
        info->add_flag("--json", info_json);
        info->callback([&] {
            cobex::Complex x = cobex::io::parse_complex_file(info_file);
            std::ostringstream os;
            os << "vertices: " << x.vertex_count() << "\ndimension: " << x.dimension() << '\n';
            os << "face counts:";
            for (int i = -1; i <= x.dimension(); ++i)
                os << " |X(" << i << ")|=" << x.face_count(i);
            os << '\n';
            for (int i = 0; i <= x.dimension(); ++i)
                os << "dim H^" << i << " = " << cobex::cohomology_dim(x, i) << '\n';
            emit(cobex::io::info_json(x), "info", info_json, os.str());
        });

        // epsilon
        auto* eps = app.add_subcommand("epsilon", "Exact coboundary expansion constant");
        std::string eps_file;
        int eps_i = 0;
        bool eps_json = false;
        eps->add_option("-i", eps_i, "dimension")->required();
        eps->add_option("--budget", opts.budget, "enumeration cap");
        eps->add_option("--threads", opts.threads, "worker count (0 = all cores)");
        eps->add_flag("--json", eps_json);
        eps->add_option("file", eps_file, "complex file")->required();
        eps->callback([&] {
            cobex::Complex x = cobex::io::parse_complex_file(eps_file);
            cobex::ExpansionResult res =
                cobex::expansion_epsilon(x, eps_i, opts.budget, resolve_threads(opts.threads));
            std::ostringstream os;
            os << "epsilon_" << res.i << " = " << res.epsilon << " ("
               << res.epsilon.decimal_string() << ")\n";
            os << "witness (coset leader): " << face_list_text(x, res.witness) << '\n';
            os << "witness distance " << res.witness_dist << ", coboundary weight "
               << res.witness_coboundary_weight << '\n';
            os << "cosets enumerated: " << res.cosets_enumerated << '\n';
            os << "H^" << res.i << (res.h_nonzero ? " != 0" : " = 0") << '\n';
            json body = cobex::io::expansion_result_json(x, res);
            body["budget"] = opts.budget;
            emit(body, "epsilon", eps_json, os.str());
        });

        // mu
        auto* mu = app.add_subcommand("mu", "Worst-case minimal-filling ratio");
        std::string mu_file;
        int mu_i = 0;
        bool mu_json = false;
        mu->add_option("-i", mu_i, "dimension")->required();
        mu->add_option("--budget", opts.budget, "enumeration cap");
        mu->add_flag("--json", mu_json);
        mu->add_option("file", mu_file, "complex file")->required();
        mu->callback([&] {
            cobex::Complex x = cobex::io::parse_complex_file(mu_file);
            cobex::Rational value = cobex::filling_mu(x, mu_i, opts.budget);
            std::ostringstream os;
            os << "mu_" << mu_i << " = " << value << " (" << value.decimal_string() << ")\n";
            emit(json{{"i", mu_i}, {"mu", cobex::io::rational_json(value)}, {"budget", opts.budget}},
                 "mu", mu_json, os.str());
        });

        // test
        auto* test = app.add_subcommand("test", "Run the seeded i-cocycle tester on a cochain");
        std::string test_file, test_cochain;
        int test_i = 0;
        long long test_trials = 0;
        std::uint64_t test_seed = 0;
        bool test_json = false;
        test->add_option("-i", test_i, "dimension")->required();
        test->add_option("--cochain", test_cochain, "cochain file")->required();
        test->add_option("--trials", test_trials, "number of trials")->required();
        test->add_option("--seed", test_seed, "PRNG seed")->required();
        test->add_option("--budget", opts.budget, "enumeration cap for the exact fields");
        test->add_flag("--json", test_json);
        test->add_option("file", test_file, "complex file")->required();
        test->callback([&] {
            cobex::Complex x = cobex::io::parse_complex_file(test_file);
            cobex::Cochain f = cobex::io::parse_cochain_file(test_cochain, x);
            if (f.dim != test_i)
                throw cobex::ParseError("test: cochain dimension does not match -i");
            cobex::TesterReport rep =
                cobex::run_cocycle_tester(x, f, test_trials, test_seed, opts.budget);
            json body = cobex::io::tester_report_json(rep);
            body["budget"] = opts.budget;
            emit(body, "test", test_json, tester_text(rep));
        });

        // certify
        auto* cert = app.add_subcommand("certify",
                                        "Exhaustive testability certificate at dimension i");
        std::string cert_file;
        int cert_i = 0;
        bool cert_json = false;
        cert->add_option("-i", cert_i, "dimension")->required();
        cert->add_option("--budget", opts.budget, "enumeration cap");
        cert->add_option("--threads", opts.threads, "worker count (0 = all cores)");
        cert->add_flag("--json", cert_json);
        cert->add_option("file", cert_file, "complex file")->required();
        cert->callback([&] {
            cobex::Complex x = cobex::io::parse_complex_file(cert_file);
            cobex::TestabilityCertificate c = cobex::testability_certificate(
                x, cert_i, opts.budget, resolve_threads(opts.threads));
            std::ostringstream os;
            os << "epsilon_" << c.i << " = " << c.epsilon << '\n';
            os << "cosets checked: " << c.cosets_checked << ", bound holds on all: "
               << (c.all_bounded ? "yes" : "NO") << ", equality cosets: " << c.equality_count
               << '\n';
            os << "equality witness: " << face_list_text(x, c.equality_witness) << '\n';
            if (c.cocycle_witness)
                os << "cocycle outside B^" << c.i << ": "
                   << face_list_text(x, *c.cocycle_witness) << '\n';
            os << "certificate " << (c.valid ? "VALID" : "INVALID") << '\n';
            json body = cobex::io::certificate_json(x, c);
            body["budget"] = opts.budget;
            emit(body, "certify", cert_json, os.str());
            if (!c.valid) exit_code = 1;
        });

        // constfn
        auto* constfn = app.add_subcommand(
            "constfn", "Edge tester for constant vertex functions on a graph");
        std::string constfn_file, constfn_cochain;
        long long constfn_trials = 0;
        std::uint64_t constfn_seed = 0;
        bool constfn_json = false, constfn_sampled = false;
        constfn->add_option("--cochain", constfn_cochain, "0-cochain file")->required();
        constfn->add_option("--seed", constfn_seed);
        constfn->add_option("--trials", constfn_trials)->needs("--seed");
        constfn->add_option("--budget", opts.budget);
        constfn->add_flag("--json", constfn_json);
        constfn->add_option("file", constfn_file, "graph file")->required();
        constfn->callback([&] {
            cobex::Graph g =
                cobex::Graph::from_complex(cobex::io::parse_complex_file(constfn_file));
            cobex::Cochain f = cobex::io::parse_cochain_file(constfn_cochain, g.complex());
            constfn_sampled = constfn_trials > 0;
            std::optional<cobex::SampleParams> sample;
            if (constfn_sampled) sample = cobex::SampleParams{constfn_trials, constfn_seed};
            cobex::TesterReport rep = cobex::constant_function_test(g, f, sample, opts.budget);
            json body = cobex::io::tester_report_json(rep);
            body["budget"] = opts.budget;
            emit(body, "constfn", constfn_json, tester_text(rep));
            if (!rep.exact_rate.is_zero()) exit_code = 1;  // f is not constant
        });

        // sumfn
        auto* sumfn = app.add_subcommand(
            "sumfn", "Triangle tester for sum functions on the complete graph K_m");
        std::string sumfn_cochain;
        int sumfn_m = 0;
        long long sumfn_trials = 0;
        std::uint64_t sumfn_seed = 0;
        bool sumfn_json = false;
        sumfn->add_option("-m", sumfn_m, "vertex count of K_m")->required();
        sumfn->add_option("--cochain", sumfn_cochain, "1-cochain file over K_m")->required();
        sumfn->add_option("--seed", sumfn_seed);
        sumfn->add_option("--trials", sumfn_trials)->needs("--seed");
        sumfn->add_option("--budget", opts.budget);
        sumfn->add_flag("--json", sumfn_json);
        sumfn->callback([&] {
            cobex::Graph km = cobex::Graph::complete(sumfn_m);
            cobex::Cochain f = cobex::io::parse_cochain_file(sumfn_cochain, km.complex());
            std::optional<cobex::SampleParams> sample;
            if (sumfn_trials > 0) sample = cobex::SampleParams{sumfn_trials, sumfn_seed};
            cobex::TesterReport rep = cobex::sum_function_test(km, f, sample, opts.budget);
            json body = cobex::io::tester_report_json(rep);
            body["m"] = sumfn_m;
            body["budget"] = opts.budget;
            emit(body, "sumfn", sumfn_json, tester_text(rep));
            if (!rep.exact_rate.is_zero()) exit_code = 1;  // f is not a sum function
        });

        // tensor
        auto* tensor = app.add_subcommand(
            "tensor", "Triple-product tester for sign tensor powers");
        std::string tensor_file;
        long long tensor_trials = 0;
        std::uint64_t tensor_seed = 0;
        bool tensor_json = false;
        tensor->add_option("--matrix", tensor_file, "sign matrix file")->required();
        tensor->add_option("--seed", tensor_seed);
        tensor->add_option("--trials", tensor_trials)->needs("--seed");
        tensor->add_option("--budget", opts.budget);
        tensor->add_flag("--json", tensor_json);
        tensor->callback([&] {
            cobex::SignMatrix m = cobex::io::parse_sign_matrix_file(tensor_file);
            std::optional<cobex::SampleParams> sample;
            if (tensor_trials > 0) sample = cobex::SampleParams{tensor_trials, tensor_seed};
            cobex::TensorReport rep = cobex::tensor_power_test(m, sample, opts.budget);
            std::ostringstream os;
            os << "tensor power: " << (rep.is_tensor_power ? "yes" : "no") << '\n';
            if (rep.factor) {
                os << "factor:";
                for (int v : *rep.factor) os << ' ' << (v > 0 ? "+1" : "-1");
                os << '\n';
            }
            os << tester_text(rep.tester);
            json body = cobex::io::tensor_report_json(rep);
            body["budget"] = opts.budget;
            emit(body, "tensor", tensor_json, os.str());
            if (!rep.is_tensor_power) exit_code = 1;
        });

        // seidel
        auto* seidel = app.add_subcommand(
            "seidel", "Decide Seidel equivalence of two labeled graphs");
        std::string seidel_a, seidel_b;
        long long seidel_trials = 0;
        std::uint64_t seidel_seed = 0;
        bool seidel_json = false;
        seidel->add_option("first", seidel_a, "graph file")->required();
        seidel->add_option("second", seidel_b, "graph file")->required();
        seidel->add_option("--seed", seidel_seed);
        seidel->add_option("--trials", seidel_trials)->needs("--seed");
        seidel->add_option("--budget", opts.budget);
        seidel->add_flag("--json", seidel_json);
        seidel->callback([&] {
            cobex::Graph g1 =
                cobex::Graph::from_complex(cobex::io::parse_complex_file(seidel_a));
            cobex::Graph g2 =
                cobex::Graph::from_complex(cobex::io::parse_complex_file(seidel_b));
            std::optional<cobex::SampleParams> sample;
            if (seidel_trials > 0) sample = cobex::SampleParams{seidel_trials, seidel_seed};
            cobex::SeidelReport rep = cobex::seidel_equivalence(g1, g2, sample, opts.budget);
            std::ostringstream os;
            os << "equivalent: " << (rep.equivalent ? "yes" : "no") << '\n';
            if (rep.switching_set) {
                os << "switching set:";
                for (int v : *rep.switching_set) os << ' ' << v;
                os << '\n';
            }
            if (rep.distance) os << "distance to coboundaries: " << *rep.distance << '\n';
            os << "triangle tester exact rejection rate: " << rep.exact_rate << '\n';
            if (rep.sample)
                os << "sampled: " << rep.sample->rejections << "/" << rep.sample->trials
                   << " rejections (seed " << rep.sample->seed << ")\n";
            json body = cobex::io::seidel_report_json(rep);
            body["budget"] = opts.budget;
            emit(body, "seidel", seidel_json, os.str());
            if (!rep.equivalent) exit_code = 1;
        });

        // girth
        auto* girth = app.add_subcommand(
            "girth", "Girth and minimum cycle-space weight of a graph");
        std::string girth_file;
        bool girth_json = false;
        girth->add_option("--budget", opts.budget);
        girth->add_flag("--json", girth_json);
        girth->add_option("file", girth_file, "graph file")->required();
        girth->callback([&] {
            cobex::Graph g =
                cobex::Graph::from_complex(cobex::io::parse_complex_file(girth_file));
            cobex::GirthReport rep = cobex::girth_and_min_cycle(g, opts.budget);
            std::ostringstream os;
            os << "girth: ";
            if (rep.girth)
                os << *rep.girth;
            else
                os << "infinite (acyclic)";
            os << "\nminimum cycle weight: ";
            if (rep.min_cycle_weight)
                os << *rep.min_cycle_weight;
            else if (rep.scan_skipped)
                os << "skipped (cycle space needs budget 2^" << rep.scan_log2_required << ")";
            else
                os << "infinite (acyclic)";
            os << '\n';
            json body = cobex::io::girth_report_json(rep);
            body["budget"] = opts.budget;
            emit(body, "girth", girth_json, os.str());
        });

        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const cobex::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\nrequired budget: 2^" << e.required_log2()
                  << '\n';
        return 3;
    } catch (const cobex::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}

#include "cobex/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cobex/errors.hpp"

namespace cobex::io {

namespace {

using nlohmann::json;

/// Strips comments and splits into whitespace tokens; empty result for
/// blank/comment-only lines.
std::vector<std::string> tokenize(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream ss(body);
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    return tokens;
}

long long parse_integer(const std::string& tok, const char* what) {
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(std::string(what) + ": not an integer: '" + tok + "'");
    }
    if (used != tok.size())
        throw ParseError(std::string(what) + ": trailing junk in '" + tok + "'");
    return value;
}

std::vector<int> parse_face_line(const std::vector<std::string>& tokens) {
    // The downward closure of a k-vertex face has 2^k subsets; cap k so a
    // stray line cannot blow up the parser.
    if (tokens.size() > 20) throw ParseError("face: more than 20 vertices on one line");
    std::vector<int> verts;
    verts.reserve(tokens.size());
    for (const auto& tok : tokens) {
        long long v = parse_integer(tok, "face");
        if (v < 0) throw ParseError("face: negative vertex label");
        if (v > 1'000'000) throw ParseError("face: vertex label implausibly large");
        verts.push_back(static_cast<int>(v));
    }
    return verts;
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return in;
}

}  // namespace

Complex parse_complex(std::istream& in) {
    std::vector<std::vector<int>> faces;
    std::string line;
    while (std::getline(in, line)) {
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        faces.push_back(parse_face_line(tokens));
    }
    if (faces.empty()) throw ParseError("complex file lists no faces");
    return Complex::from_maximal_faces(faces);
}

Complex parse_complex_file(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_complex(in);
}

std::string serialize_complex(const Complex& x) {
    std::ostringstream out;
    for (const Face& f : x.maximal_faces()) {
        const auto& v = f.vertices();
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
        out << '\n';
    }
    return out.str();
}

Cochain parse_cochain(std::istream& in, const Complex& x) {
    std::string line;
    std::optional<int> dim;
    std::vector<Face> faces;
    while (std::getline(in, line)) {
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (!dim) {
            if (tokens.size() != 2 || tokens[0] != "dim")
                throw ParseError("cochain file must start with a 'dim <i>' line");
            long long d = parse_integer(tokens[1], "dim header");
            if (d < 0 || d > x.dimension())
                throw ParseError("cochain dimension outside the complex's range");
            dim = static_cast<int>(d);
            continue;
        }
        Face f(parse_face_line(tokens));
        if (f.dim() != *dim || !x.has_face(f)) {
            std::ostringstream msg;
            msg << "cochain face not in the complex at dimension " << *dim << ":";
            for (int v : f.vertices()) msg << ' ' << v;
            throw ParseError(msg.str());
        }
        faces.push_back(std::move(f));
    }
    if (!dim) throw ParseError("cochain file has no 'dim <i>' line");
    return Cochain::from_faces(x, *dim, faces);
}

Cochain parse_cochain_file(const std::string& path, const Complex& x) {
    auto in = open_or_throw(path);
    return parse_cochain(in, x);
}

std::string serialize_cochain(const Complex& x, const Cochain& c) {
    std::ostringstream out;
    out << "dim " << c.dim << '\n';
    for (const Face& f : support_faces(x, c)) {
        const auto& v = f.vertices();
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
        out << '\n';
    }
    return out.str();
}

SignMatrix parse_sign_matrix(std::istream& in) {
    std::vector<std::vector<int>> rows;
    std::string line;
    while (std::getline(in, line)) {
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        std::vector<int> row;
        row.reserve(tokens.size());
        for (const auto& tok : tokens) {
            long long v = parse_integer(tok, "matrix entry");
            row.push_back(static_cast<int>(v));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("sign matrix file is empty");
    return SignMatrix::from_entries(std::move(rows));
}

SignMatrix parse_sign_matrix_file(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_sign_matrix(in);
}

json rational_json(const Rational& r) {
    return json{{"num", r.num()}, {"den", r.den()}, {"approx", r.decimal_string(6)}};
}

json faces_json(const Complex& x, const Cochain& c) {
    json out = json::array();
    for (const Face& f : support_faces(x, c)) out.push_back(f.vertices());
    return out;
}

namespace {

json sample_json(const SampleStats& s) {
    return json{{"trials", s.trials},
                {"seed", s.seed},
                {"rejections", s.rejections},
                {"rate", rational_json(s.rate)},
                {"wilson_99_low", s.wilson_low},
                {"wilson_99_high", s.wilson_high}};
}

}  // namespace

json tester_report_json(const TesterReport& rep) {
    json out{{"i", rep.i},
             {"queries", rep.queries},
             {"exact_rate", rational_json(rep.exact_rate)},
             {"queries_performed", rep.queries_performed}};
    if (rep.sample) out["sample"] = sample_json(*rep.sample);
    if (rep.distance_normalized)
        out["distance_normalized"] = rational_json(*rep.distance_normalized);
    if (rep.epsilon_bound) out["epsilon_bound"] = rational_json(*rep.epsilon_bound);
    if (rep.bound_satisfied) out["bound_satisfied"] = *rep.bound_satisfied;
    return out;
}

json expansion_result_json(const Complex& x, const ExpansionResult& res) {
    return json{{"i", res.i},
                {"epsilon", rational_json(res.epsilon)},
                {"witness", faces_json(x, res.witness)},
                {"witness_dist", res.witness_dist},
                {"witness_coboundary_weight", res.witness_coboundary_weight},
                {"cosets_enumerated", res.cosets_enumerated},
                {"h_nonzero", res.h_nonzero}};
}

json certificate_json(const Complex& x, const TestabilityCertificate& cert) {
    json out{{"i", cert.i},
             {"queries", cert.queries},
             {"epsilon", rational_json(cert.epsilon)},
             {"cosets_checked", cert.cosets_checked},
             {"all_bounded", cert.all_bounded},
             {"equality_count", cert.equality_count},
             {"equality_witness", faces_json(x, cert.equality_witness)},
             {"h_nonzero", cert.h_nonzero},
             {"valid", cert.valid}};
    if (cert.cocycle_witness) out["cocycle_witness"] = faces_json(x, *cert.cocycle_witness);
    return out;
}

json girth_report_json(const GirthReport& rep) {
    json out;
    out["girth"] = rep.girth ? json(*rep.girth) : json(nullptr);
    out["min_cycle_weight"] = rep.min_cycle_weight ? json(*rep.min_cycle_weight) : json(nullptr);
    out["scan_skipped"] = rep.scan_skipped;
    return out;
}

json tensor_report_json(const TensorReport& rep) {
    json out{{"is_tensor_power", rep.is_tensor_power},
             {"tester", tester_report_json(rep.tester)}};
    if (rep.factor) out["factor"] = *rep.factor;
    return out;
}

json seidel_report_json(const SeidelReport& rep) {
    json out{{"n", rep.n},
             {"equivalent", rep.equivalent},
             {"exact_rate", rational_json(rep.exact_rate)}};
    if (rep.switching_set) out["switching_set"] = *rep.switching_set;
    if (rep.distance) out["distance"] = *rep.distance;
    if (rep.distance_normalized)
        out["distance_normalized"] = rational_json(*rep.distance_normalized);
    if (rep.bound_satisfied) out["bound_satisfied"] = *rep.bound_satisfied;
    if (rep.sample) out["sample"] = sample_json(*rep.sample);
    return out;
}

json info_json(const Complex& x) {
    json counts = json::array();
    for (int i = -1; i <= x.dimension(); ++i)
        counts.push_back(json{{"dim", i}, {"count", x.face_count(i)}});
    json h = json::array();
    for (int i = 0; i <= x.dimension(); ++i)
        h.push_back(json{{"dim", i}, {"h", cohomology_dim(x, i)}});
    return json{{"vertex_count", x.vertex_count()},
                {"dimension", x.dimension()},
                {"face_counts", counts},
                {"cohomology", h}};
}

}  // namespace cobex::io

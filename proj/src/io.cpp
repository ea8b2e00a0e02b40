#include "hilbcm/io.hpp"

#include <cctype>
#include <sstream>

#include "hilbcm/errors.hpp"
#include "json.hpp"

namespace hilbcm {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json matrix_to_json(const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_to_string(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const ordered_json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows) throw ParseError("matrix row count mismatch", 0);
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto& row = j[r];
        if (!row.is_array() || row.size() != cols) throw ParseError("matrix column count mismatch", 0);
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = parse_rational(row[c].get<std::string>());
    }
    return m;
}

ordered_json parse_document(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), static_cast<std::size_t>(e.byte));
    }
}

}  // namespace

std::string datum_to_json(const AdhmDatum& x) {
    ordered_json j;
    j["n"] = x.n;
    j["c"] = x.c;
    ordered_json bs = ordered_json::array();
    for (const auto& b : x.B) bs.push_back(matrix_to_json(b));
    j["B"] = std::move(bs);
    ordered_json iv = ordered_json::array();
    for (std::size_t r = 0; r < x.c; ++r) iv.push_back(rational_to_string(x.I.at(r, 0)));
    j["I"] = std::move(iv);
    return j.dump(2) + "\n";
}

AdhmDatum datum_from_json(const std::string& text) {
    const ordered_json j = parse_document(text);
    if (!j.contains("n") || !j.contains("c") || !j.contains("B") || !j.contains("I"))
        throw ParseError("datum document requires fields n, c, B, I", 0);
    AdhmDatum x;
    x.n = j["n"].get<std::size_t>();
    x.c = j["c"].get<std::size_t>();
    if (!j["B"].is_array() || j["B"].size() != x.n)
        throw ParseError("field B must list n matrices", 0);
    for (const auto& b : j["B"]) x.B.push_back(matrix_from_json(b, x.c, x.c));
    if (!j["I"].is_array() || j["I"].size() != x.c)
        throw ParseError("field I must have c entries", 0);
    x.I = Matrix(x.c, 1);
    for (std::size_t r = 0; r < x.c; ++r)
        x.I.at(r, 0) = parse_rational(j["I"][r].get<std::string>());
    x.validate();
    return x;
}

std::vector<Poly> parse_ideal_file(const std::string& text, std::size_t nvars) {
    std::vector<std::string> lines;
    {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            lines.push_back(line);
        }
    }
    if (nvars == 0) {
        // Infer the arity from the highest x<k> mentioned.
        std::size_t max_index = 0;
        bool seen = false;
        for (const auto& line : lines)
            for (std::size_t i = 0; i + 1 < line.size(); ++i)
                if (line[i] == 'x' && std::isdigit(static_cast<unsigned char>(line[i + 1])) &&
                    (i == 0 || !std::isalnum(static_cast<unsigned char>(line[i - 1])))) {
                    std::size_t k = 0, p = i + 1;
                    while (p < line.size() && std::isdigit(static_cast<unsigned char>(line[p])))
                        k = k * 10 + static_cast<std::size_t>(line[p++] - '0');
                    max_index = std::max(max_index, k);
                    seen = true;
                }
        if (!seen) throw ParseError("cannot infer variable count: no variables present", 0);
        nvars = max_index + 1;
    }
    std::vector<Poly> gens;
    gens.reserve(lines.size());
    for (const auto& line : lines) gens.push_back(parse_poly(line, nvars));
    return gens;
}

std::string ideal_to_text(const IdealPresentation& ideal) {
    std::ostringstream out;
    const std::vector<Poly>& polys = ideal.reduced_gb ? *ideal.reduced_gb : ideal.generators;
    for (const auto& p : polys) out << p.to_string() << "\n";
    return out.str();
}

std::string monad_to_json(const ExtendedMonad& m) {
    ordered_json j;
    j["n"] = m.shape.n;
    j["c"] = m.shape.c;
    j["r"] = m.shape.r;
    ordered_json dims = ordered_json::array();
    for (const auto& [deg, dim] : m.shape.dims) dims.push_back({deg, dim});
    j["dims"] = std::move(dims);
    ordered_json alphas = ordered_json::array();
    for (const auto& [deg, a] : m.alphas) {
        ordered_json entry;
        entry["source_degree"] = deg;
        entry["rows"] = a.rows;
        entry["cols"] = a.cols;
        ordered_json coeffs = ordered_json::array();
        for (const auto& mat : a.coeffs) coeffs.push_back(matrix_to_json(mat));
        entry["coeffs"] = std::move(coeffs);
        alphas.push_back(std::move(entry));
    }
    j["alphas"] = std::move(alphas);
    return j.dump(2) + "\n";
}

ExtendedMonad monad_from_json(const std::string& text) {
    const ordered_json j = parse_document(text);
    ExtendedMonad m;
    m.shape.n = j.at("n").get<std::size_t>();
    m.shape.c = j.at("c").get<std::size_t>();
    m.shape.r = j.at("r").get<std::size_t>();
    for (const auto& pair : j.at("dims"))
        m.shape.dims[pair[0].get<int>()] = pair[1].get<std::size_t>();
    for (const auto& entry : j.at("alphas")) {
        LinearFormMap a;
        a.rows = entry.at("rows").get<std::size_t>();
        a.cols = entry.at("cols").get<std::size_t>();
        for (const auto& mat : entry.at("coeffs"))
            a.coeffs.push_back(matrix_from_json(mat, a.rows, a.cols));
        m.alphas[entry.at("source_degree").get<int>()] = std::move(a);
    }
    return m;
}

namespace {

std::string complex_to_string(const std::complex<double>& z) {
    std::ostringstream out;
    out.precision(17);
    out << z.real();
    if (z.imag() != 0.0) {
        out << (z.imag() > 0 ? "+" : "-");
        out << std::abs(z.imag()) << "i";
    }
    return out.str();
}

std::string partition_to_string(const std::vector<std::size_t>& part) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < part.size(); ++i) out << (i ? "," : "") << part[i];
    out << "]";
    return out.str();
}

}  // namespace

std::string cycle_to_text(const ZeroCycle& cyc, std::size_t n) {
    std::ostringstream out;
    out << "c=" << cyc.total_multiplicity() << " n=" << n
        << " partition=" << partition_to_string(cyc.partition()) << "\n";
    if (cyc.exact) {
        for (const auto& p : cyc.exact_points) {
            out << "(";
            for (std::size_t i = 0; i < p.coords.size(); ++i)
                out << (i ? ", " : "") << rational_to_string(p.coords[i]);
            out << ") x" << p.multiplicity << "\n";
        }
    } else {
        for (const auto& p : cyc.approx_points) {
            out << "(";
            for (std::size_t i = 0; i < p.coords.size(); ++i)
                out << (i ? ", " : "") << complex_to_string(p.coords[i]);
            out << ") x" << p.multiplicity << "\n";
        }
    }
    return out.str();
}

std::string cycle_to_json(const ZeroCycle& cyc, std::size_t n) {
    ordered_json j;
    j["c"] = cyc.total_multiplicity();
    j["n"] = n;
    j["exact"] = cyc.exact;
    j["partition"] = cyc.partition();
    ordered_json points = ordered_json::array();
    if (cyc.exact) {
        for (const auto& p : cyc.exact_points) {
            ordered_json pt;
            ordered_json coords = ordered_json::array();
            for (const auto& q : p.coords) coords.push_back(rational_to_string(q));
            pt["coords"] = std::move(coords);
            pt["multiplicity"] = p.multiplicity;
            points.push_back(std::move(pt));
        }
    } else {
        j["tolerance"] = cyc.tolerance;
        for (const auto& p : cyc.approx_points) {
            ordered_json pt;
            ordered_json coords = ordered_json::array();
            for (const auto& z : p.coords) coords.push_back({z.real(), z.imag()});
            pt["coords"] = std::move(coords);
            pt["multiplicity"] = p.multiplicity;
            points.push_back(std::move(pt));
        }
    }
    j["points"] = std::move(points);
    return j.dump(2) + "\n";
}

}  // namespace hilbcm

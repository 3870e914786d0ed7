#include "liftedcodes/report.hpp"

#include <istream>
#include <limits>
#include <sstream>

#include "liftedcodes/lifted.hpp"

namespace liftedcodes {

Json big_to_json(const BigInt& v) {
    if (v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max())) {
        return v.convert_to<std::uint64_t>();
    }
    return v.str();
}

namespace {
Json big_list(const std::vector<BigInt>& xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(big_to_json(x));
    return out;
}
}  // namespace

Json to_json(const IntersectionArray& arr) {
    Json out;
    out["rho"] = arr.rho;
    out["b"] = big_list(arr.b);
    out["c"] = big_list(arr.c);
    out["a"] = big_list(arr.a);
    out["mu"] = big_list(arr.mu);
    return out;
}

Json to_json(const MatQ& m) {
    Json out;
    out["field"] = m.field()->descriptor();
    out["q"] = m.field()->order();
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    out["entries"] = m.entries();
    return out;
}

Json to_json(const DrgParams& p) {
    Json out;
    out["V"] = big_to_json(p.vertices);
    out["diameter"] = p.diameter;
    out["b"] = big_list(p.b);
    out["c"] = big_list(p.c);
    return out;
}

std::string array_text(const IntersectionArray& arr) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < arr.b.size(); ++i) {
        if (i > 0) os << ",";
        os << arr.b[i];
    }
    os << "; ";
    for (std::size_t i = 0; i < arr.c.size(); ++i) {
        if (i > 0) os << ",";
        os << arr.c[i];
    }
    os << ")";
    return os.str();
}

std::string matrix_text(const MatQ& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) os << " ";
            os << m(i, j);
        }
        os << "\n";
    }
    return os.str();
}

MatQ parse_parity_text(std::istream& in) {
    std::uint64_t q = 0;
    std::size_t n = 0;
    std::size_t rows = 0;
    if (!(in >> q >> n >> rows)) {
        throw std::invalid_argument("parity file: header must be \"q n rows\"");
    }
    if (n == 0 || rows == 0) {
        throw std::invalid_argument("parity file: n and rows must be positive");
    }
    FieldPtr field = make_ground_field(q);
    std::vector<elem_t> entries;
    entries.reserve(rows * n);
    for (std::size_t i = 0; i < rows * n; ++i) {
        std::uint64_t v = 0;
        if (!(in >> v)) {
            throw std::invalid_argument("parity file: expected " + std::to_string(rows * n) +
                                        " entries");
        }
        if (v >= q) {
            throw std::invalid_argument("parity file: entry " + std::to_string(v) +
                                        " out of range for q=" + std::to_string(q));
        }
        entries.push_back(static_cast<elem_t>(v));
    }
    return MatQ(field, rows, n, std::move(entries));
}

std::string parity_text(const MatQ& m) {
    std::ostringstream os;
    os << m.field()->order() << " " << m.cols() << " " << m.rows() << "\n";
    os << matrix_text(m);
    return os.str();
}

}  // namespace liftedcodes

#include "bq/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bq {

using nlohmann::json;

namespace {

json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("complex value must be a [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

} // namespace

json group_to_json(const FiniteGroup& g) {
    json mul = json::array();
    for (int x = 0; x < g.order; ++x) {
        json row = json::array();
        for (int y = 0; y < g.order; ++y) row.push_back(g.mul(x, y));
        mul.push_back(std::move(row));
    }
    return json{{"name", g.name}, {"order", g.order}, {"mul", std::move(mul)}};
}

FiniteGroup group_from_json(const json& j) {
    FiniteGroup g;
    g.name = j.at("name").get<std::string>();
    g.order = j.at("order").get<int>();
    if (g.order <= 0 || g.order > order_bound())
        throw std::invalid_argument("group order out of bounds");
    const auto& mul = j.at("mul");
    if (static_cast<int>(mul.size()) != g.order)
        throw std::invalid_argument("mul table has wrong number of rows");
    g.mul_table.resize(g.order * g.order);
    for (int x = 0; x < g.order; ++x) {
        if (static_cast<int>(mul[x].size()) != g.order)
            throw std::invalid_argument("mul table has a ragged row");
        for (int y = 0; y < g.order; ++y)
            g.mul_table[x * g.order + y] = mul[x][y].get<int>();
    }
    g.inv_table.assign(g.order, -1);
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y)
            if (g.mul(x, y) == g.identity) g.inv_table[x] = y;
    ValidationReport rep = validate_group(g);
    if (!rep.ok())
        throw std::invalid_argument("invalid group table:\n" + rep.summary());
    return g;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j2 = 0; j2 < m.cols(); ++j2) row.push_back(complex_to_json(m(i, j2)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix JSON empty");
    const int rows = static_cast<int>(j.size());
    const int cols = static_cast<int>(j[0].size());
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j[i].size()) != cols)
            throw std::invalid_argument("matrix JSON ragged");
        for (int c = 0; c < cols; ++c) m(i, c) = complex_from_json(j[i][c]);
    }
    return m;
}

json vector_to_json(const Vector& v) {
    json out = json::array();
    for (int i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
    return out;
}

Vector vector_from_json(const json& j) {
    Vector v(j.size());
    for (size_t i = 0; i < j.size(); ++i) v(static_cast<int>(i)) = complex_from_json(j[i]);
    return v;
}

json dual_to_json(const UnitaryDual& dual) {
    json irreps = json::array();
    for (const auto& ir : dual.irreps) {
        json mats = json::array();
        for (const auto& m : ir.matrices) mats.push_back(matrix_to_json(m));
        irreps.push_back(json{{"dim", ir.dim},
                              {"label", ir.label},
                              {"matrices", std::move(mats)}});
    }
    return json{{"irreps", std::move(irreps)}, {"weights", dual.weights}};
}

UnitaryDual dual_from_json(const FiniteGroup& g, const json& j) {
    UnitaryDual dual;
    dual.group_order = g.order;
    for (const auto& ij : j.at("irreps")) {
        Irrep ir;
        ir.dim = ij.at("dim").get<int>();
        ir.label = ij.value("label", "");
        for (const auto& mj : ij.at("matrices")) ir.matrices.push_back(matrix_from_json(mj));
        if (static_cast<int>(ir.matrices.size()) != g.order)
            throw std::invalid_argument("irrep has wrong number of matrices");
        dual.irreps.push_back(std::move(ir));
    }
    if (j.contains("weights"))
        dual.weights = j.at("weights").get<std::vector<double>>();
    else
        for (const auto& ir : dual.irreps)
            dual.weights.push_back(double(ir.dim) / g.order);
    ValidationReport rep = validate_dual(g, dual);
    if (!rep.ok()) throw std::invalid_argument("invalid dual:\n" + rep.summary());
    return dual;
}

json symbol_to_json(const SymbolField& f) {
    json blocks = json::object();
    for (size_t xi = 0; xi < f.blocks.size(); ++xi)
        for (size_t x = 0; x < f.blocks[xi].size(); ++x)
            blocks[std::to_string(xi) + "," + std::to_string(x)] =
                matrix_to_json(f.blocks[xi][x]);
    return json{
        {"orientation",
         f.orientation == Orientation::DualFirst ? "dual-first" : "group-first"},
        {"blocks", std::move(blocks)}};
}

SymbolField symbol_from_json(const UnitaryDual& dual, int order, const json& j) {
    const std::string o = j.at("orientation").get<std::string>();
    Orientation orient;
    if (o == "dual-first") orient = Orientation::DualFirst;
    else if (o == "group-first") orient = Orientation::GroupFirst;
    else throw std::invalid_argument("unknown orientation: " + o);
    SymbolField f = symbol_zero(dual, order, orient);
    for (const auto& [key, val] : j.at("blocks").items()) {
        const auto comma = key.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("bad block key: " + key);
        const int xi = std::stoi(key.substr(0, comma));
        const int x = std::stoi(key.substr(comma + 1));
        if (xi < 0 || xi >= dual.size() || x < 0 || x >= order)
            throw std::invalid_argument("block key out of range: " + key);
        Matrix m = matrix_from_json(val);
        if (m.rows() != dual.dim(xi) || m.cols() != dual.dim(xi))
            throw std::invalid_argument("block shape mismatch at " + key);
        f.blocks[xi][x] = std::move(m);
    }
    return f;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string spectrum_csv(const Eigen::VectorXd& values) {
    std::ostringstream ss;
    ss << "eigenvalue\n";
    ss.precision(17);
    for (int i = 0; i < values.size(); ++i) ss << values(i) << "\n";
    return ss.str();
}

} // namespace bq

#include "detsum/degree_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace detsum {

DegreeMatrix::DegreeMatrix(int rows, int cols, std::vector<long long> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    // Certificate normalized by c_1 = 0, so r_i is the first column.
    row_offsets_.resize(static_cast<std::size_t>(rows_));
    col_offsets_.resize(static_cast<std::size_t>(cols_));
    for (int i = 0; i < rows_; ++i) row_offsets_[static_cast<std::size_t>(i)] = at(i, 0);
    for (int j = 0; j < cols_; ++j) col_offsets_[static_cast<std::size_t>(j)] = at(0, j) - at(0, 0);
}

DegreeMatrix DegreeMatrix::validate(const std::vector<std::vector<long long>>& grid) {
    if (grid.empty() || grid.front().empty())
        throw std::invalid_argument("empty degree matrix");
    const int rows = static_cast<int>(grid.size());
    const int cols = static_cast<int>(grid.front().size());
    for (const auto& row : grid)
        if (static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("ragged degree matrix");
    if (cols != rows && cols != rows + 1)
        throw std::invalid_argument("degree matrix must be k x k or (k-1) x k");

    std::vector<long long> flat;
    flat.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    for (const auto& row : grid) flat.insert(flat.end(), row.begin(), row.end());

    // a_ij = r_i + c_j with r_i = a_i1, c_j = a_1j - a_11; a failing cell
    // (l, m) yields the witness a_11 + a_lm != a_1m + a_l1.
    for (int l = 0; l < rows; ++l) {
        for (int m = 0; m < cols; ++m) {
            if (grid[0][0] + grid[static_cast<std::size_t>(l)][static_cast<std::size_t>(m)] !=
                grid[0][static_cast<std::size_t>(m)] + grid[static_cast<std::size_t>(l)][0]) {
                std::ostringstream msg;
                msg << "homogeneity violation at (1," << 1 << "," << l + 1 << "," << m + 1
                    << "): a_11 + a_" << l + 1 << m + 1 << " != a_1" << m + 1 << " + a_"
                    << l + 1 << "1";
                throw HomogeneityError(1, 1, l + 1, m + 1, msg.str());
            }
        }
    }
    return DegreeMatrix(rows, cols, std::move(flat));
}

long long DegreeMatrix::min_entry() const {
    return *std::min_element(entries_.begin(), entries_.end());
}

bool DegreeMatrix::is_ordered() const {
    for (int i = 1; i < rows_; ++i)
        if (row_offsets_[static_cast<std::size_t>(i)] > row_offsets_[static_cast<std::size_t>(i - 1)])
            return false;
    for (int j = 1; j < cols_; ++j)
        if (col_offsets_[static_cast<std::size_t>(j)] < col_offsets_[static_cast<std::size_t>(j - 1)])
            return false;
    return true;
}

DegreeMatrix DegreeMatrix::ordered() const {
    std::vector<int> row_order(static_cast<std::size_t>(rows_));
    std::vector<int> col_order(static_cast<std::size_t>(cols_));
    std::iota(row_order.begin(), row_order.end(), 0);
    std::iota(col_order.begin(), col_order.end(), 0);
    // Stable: rows with equal offsets keep their relative order.
    std::stable_sort(row_order.begin(), row_order.end(), [&](int a, int b) {
        return row_offsets_[static_cast<std::size_t>(a)] > row_offsets_[static_cast<std::size_t>(b)];
    });
    std::stable_sort(col_order.begin(), col_order.end(), [&](int a, int b) {
        return col_offsets_[static_cast<std::size_t>(a)] < col_offsets_[static_cast<std::size_t>(b)];
    });
    std::vector<long long> flat;
    flat.reserve(entries_.size());
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            flat.push_back(at(row_order[static_cast<std::size_t>(i)],
                              col_order[static_cast<std::size_t>(j)]));
    return DegreeMatrix(rows_, cols_, std::move(flat));
}

long long DegreeMatrix::trace() const {
    if (is_square()) {
        long long t = 0;
        for (int i = 0; i < rows_; ++i) t += at(i, i);
        return t;
    }
    // Deleting the cheapest column maximizes the submatrix trace.
    const long long sum_r =
        std::accumulate(row_offsets_.begin(), row_offsets_.end(), 0ll);
    const long long sum_c =
        std::accumulate(col_offsets_.begin(), col_offsets_.end(), 0ll);
    const long long min_c = *std::min_element(col_offsets_.begin(), col_offsets_.end());
    return sum_r + sum_c - min_c;
}

long long DegreeMatrix::big_T() const {
    if (is_square()) throw std::invalid_argument("T is defined for (k-1) x k matrices only");
    const long long max_r = *std::max_element(row_offsets_.begin(), row_offsets_.end());
    const long long min_c = *std::min_element(col_offsets_.begin(), col_offsets_.end());
    // trace(ordered) + ordered a_11, and a_11 of the ordered matrix is
    // max(r) + min(c).
    return trace() + max_r + min_c;
}

long long DegreeMatrix::diameter() const {
    const auto [lo, hi] = std::minmax_element(row_offsets_.begin(), row_offsets_.end());
    return *hi - *lo;
}

DegreeMatrix DegreeMatrix::with_row_deleted(int i) const {
    if (i < 0 || i >= rows_) throw std::invalid_argument("row index out of range");
    std::vector<std::vector<long long>> g;
    for (int r = 0; r < rows_; ++r) {
        if (r == i) continue;
        std::vector<long long> row;
        for (int j = 0; j < cols_; ++j) row.push_back(at(r, j));
        g.push_back(std::move(row));
    }
    return validate(g);
}

DegreeMatrix DegreeMatrix::with_rows_shifted(std::span<const int> row_indices,
                                             long long delta) const {
    auto g = grid();
    for (int i : row_indices) {
        if (i < 0 || i >= rows_) throw std::invalid_argument("row index out of range");
        for (auto& v : g[static_cast<std::size_t>(i)]) v += delta;
    }
    return validate(g);
}

DegreeMatrix DegreeMatrix::reflected_antidiagonal() const {
    if (!is_square()) throw std::invalid_argument("reflection needs a square matrix");
    const int k = rows_;
    std::vector<std::vector<long long>> g(static_cast<std::size_t>(k),
                                          std::vector<long long>(static_cast<std::size_t>(k)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                at(k - 1 - j, k - 1 - i);
    return validate(g);
}

NegativityClass DegreeMatrix::negativity() const {
    if (!is_square())
        throw std::invalid_argument("negativity classification needs a square matrix");
    if (all_nonnegative()) return NegativityClass::kClean;
    const DegreeMatrix o = ordered();
    for (int i = 0; i < o.rows(); ++i)
        if (o.at(i, i) < 0) return NegativityClass::kZeroBlockFatal;
    return NegativityClass::kNegativeOpen;
}

std::vector<std::vector<long long>> DegreeMatrix::grid() const {
    std::vector<std::vector<long long>> g;
    g.reserve(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
        std::vector<long long> row;
        row.reserve(static_cast<std::size_t>(cols_));
        for (int j = 0; j < cols_; ++j) row.push_back(at(i, j));
        g.push_back(std::move(row));
    }
    return g;
}

std::string DegreeMatrix::to_text() const {
    std::ostringstream out;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j) out << ' ';
            out << at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

DegreeMatrix DegreeMatrix::parse_text(const std::string& content) {
    std::vector<std::vector<long long>> grid;
    int line_no = 1;
    std::size_t pos = 0;
    while (pos < content.size()) {
        std::size_t eol = content.find('\n', pos);
        const bool final_unterminated = eol == std::string::npos;
        const std::string line =
            content.substr(pos, final_unterminated ? std::string::npos : eol - pos);
        if (line.find('\r') != std::string::npos)
            throw DegreeMatrixParseError(
                line_no, static_cast<int>(line.find('\r')) + 1,
                "carriage return found; rows must use LF line endings");
        std::vector<long long> row;
        std::size_t col = 0;
        while (col < line.size()) {
            if (!row.empty()) {
                if (line[col] != ' ')
                    throw DegreeMatrixParseError(line_no, static_cast<int>(col) + 1,
                                                 "expected a single space between entries");
                ++col;
            }
            const std::size_t start = col;
            if (col < line.size() && (line[col] == '-' || line[col] == '+')) ++col;
            const std::size_t digits_start = col;
            while (col < line.size() && line[col] >= '0' && line[col] <= '9') ++col;
            if (col == digits_start)
                throw DegreeMatrixParseError(line_no, static_cast<int>(start) + 1,
                                             "expected a base-10 integer");
            row.push_back(std::stoll(line.substr(start, col - start)));
        }
        if (row.empty())
            throw DegreeMatrixParseError(line_no, 1, "empty row");
        if (!grid.empty() && row.size() != grid.front().size())
            throw DegreeMatrixParseError(line_no, 1, "row length differs from the first row");
        grid.push_back(std::move(row));
        if (final_unterminated) break;
        pos = eol + 1;
        ++line_no;
    }
    if (grid.empty()) throw DegreeMatrixParseError(1, 1, "no rows");
    return validate(grid);
}

std::string DegreeMatrix::to_json() const {
    nlohmann::ordered_json j;
    j["rows"] = grid();
    return j.dump();
}

DegreeMatrix DegreeMatrix::parse_json(const std::string& content) {
    const auto j = nlohmann::json::parse(content);
    if (!j.is_object() || !j.contains("rows"))
        throw std::runtime_error("JSON degree matrix must be an object with a \"rows\" array");
    return validate(j.at("rows").get<std::vector<std::vector<long long>>>());
}

DegreeMatrix DegreeMatrix::parse(const std::string& content) {
    for (char c : content) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == '{') return parse_json(content);
        break;
    }
    return parse_text(content);
}

}  // namespace detsum

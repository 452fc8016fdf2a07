#include "monoci/linalg.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

namespace monoci {

SparseMatrix SparseMatrix::identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.add(i, i, 1);
    return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    SparseMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DomainError("ragged dense matrix");
        for (std::size_t j = 0; j < cols; ++j)
            if (rows[i][j] != 0) m.add(i, j, rows[i][j]);
    }
    return m;
}

void SparseMatrix::add(std::size_t row, std::size_t col, std::int64_t value) {
    if (row >= rows_ || col >= cols_) throw DomainError("matrix entry out of range");
    if (value != 0)
        entries_.push_back({static_cast<std::uint32_t>(row), static_cast<std::uint32_t>(col), value});
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& other) const {
    if (cols_ != other.rows_) throw DomainError("matrix dimensions do not compose");
    std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> by_row(other.rows_);
    for (const auto& e : other.entries_) by_row[e.row].emplace_back(e.col, e.value);
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::int64_t> acc;
    for (const auto& e : entries_)
        for (auto [c, v] : by_row[e.col]) acc[{e.row, c}] += e.value * v;
    SparseMatrix out(rows_, other.cols_);
    for (auto [rc, v] : acc)
        if (v != 0) out.add(rc.first, rc.second, v);
    return out;
}

bool SparseMatrix::is_zero() const {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::int64_t> acc;
    for (const auto& e : entries_) acc[{e.row, e.col}] += e.value;
    return std::all_of(acc.begin(), acc.end(), [](const auto& kv) { return kv.second == 0; });
}

namespace {

struct Overflow {};

// Each arithmetic policy reduces `target` by the pivot row so the pivot
// column vanishes in it.
struct PrimeArith {
    using Value = std::uint64_t;
    std::uint64_t q;

    Value from_int(std::int64_t v) const {
        auto m = static_cast<std::int64_t>(q);
        return static_cast<Value>(((v % m) + m) % m);
    }
    Value inverse(Value a) const {
        // Fermat; q is prime and below 2^32 so products fit.
        Value result = 1, base = a, e = q - 2;
        while (e) {
            if (e & 1) result = result * base % q;
            base = base * base % q;
            e >>= 1;
        }
        return result;
    }
    template <class Row>
    void eliminate(Row& target, Value t, const Row& pivot_row, Value p) const {
        Value factor = t * inverse(p) % q;
        Row out;
        out.reserve(target.size() + pivot_row.size());
        auto a = target.begin(), b = pivot_row.begin();
        while (a != target.end() || b != pivot_row.end()) {
            if (b == pivot_row.end() || (a != target.end() && a->first < b->first)) {
                out.push_back(*a++);
            } else if (a == target.end() || b->first < a->first) {
                Value v = (q - factor * b->second % q) % q;
                if (v) out.emplace_back(b->first, v);
                ++b;
            } else {
                Value v = (a->second + q - factor * b->second % q) % q;
                if (v) out.emplace_back(a->first, v);
                ++a, ++b;
            }
        }
        target = std::move(out);
    }
};

template <class V>
struct IntegerArith {
    using Value = V;

    Value from_int(std::int64_t v) const { return Value(v); }

    static Value mul(const Value& x, const Value& y) {
        if constexpr (std::is_same_v<Value, std::int64_t>) {
            Value r;
            if (__builtin_mul_overflow(x, y, &r)) throw Overflow{};
            return r;
        } else {
            return x * y;
        }
    }
    static Value sub(const Value& x, const Value& y) {
        if constexpr (std::is_same_v<Value, std::int64_t>) {
            Value r;
            if (__builtin_sub_overflow(x, y, &r)) throw Overflow{};
            return r;
        } else {
            return x - y;
        }
    }
    static Value abs_gcd(const Value& x, const Value& y) {
        if constexpr (std::is_same_v<Value, std::int64_t>) {
            return std::gcd(x, y);
        } else {
            return boost::multiprecision::gcd(x, y);
        }
    }

    // target <- p * target - t * pivot_row, then divided by its content.
    template <class Row>
    void eliminate(Row& target, const Value& t, const Row& pivot_row, const Value& p) const {
        Row out;
        out.reserve(target.size() + pivot_row.size());
        auto a = target.begin(), b = pivot_row.begin();
        while (a != target.end() || b != pivot_row.end()) {
            if (b == pivot_row.end() || (a != target.end() && a->first < b->first)) {
                out.emplace_back(a->first, mul(p, a->second));
                ++a;
            } else if (a == target.end() || b->first < a->first) {
                out.emplace_back(b->first, sub(Value(0), mul(t, b->second)));
                ++b;
            } else {
                Value v = sub(mul(p, a->second), mul(t, b->second));
                if (v != 0) out.emplace_back(a->first, v);
                ++a, ++b;
            }
        }
        Value g = 0;
        for (const auto& e : out) g = abs_gcd(g, e.second);
        if (g > 1)
            for (auto& e : out) e.second /= g;
        target = std::move(out);
    }
};

template <class Arith>
std::size_t eliminate_rank(const std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>>& input,
                           std::size_t ncols, const Arith& arith) {
    using Value = typename Arith::Value;
    using Row = std::vector<std::pair<std::uint32_t, Value>>;

    std::vector<Row> rows;
    rows.reserve(input.size());
    std::vector<std::uint32_t> colcount(ncols, 0);
    for (const auto& r : input) {
        Row row;
        row.reserve(r.size());
        for (auto [c, v] : r) {
            Value x = arith.from_int(v);
            if (x != 0) row.emplace_back(c, x);
        }
        if (row.empty()) continue;
        for (const auto& e : row) ++colcount[e.first];
        rows.push_back(std::move(row));
    }
    std::vector<bool> alive(rows.size(), true);
    std::size_t remaining = rows.size();
    std::size_t rank = 0;

    while (remaining > 0) {
        std::size_t r = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (alive[i] && (r == rows.size() || rows[i].size() < rows[r].size())) r = i;

        std::size_t best = 0;
        for (std::size_t k = 1; k < rows[r].size(); ++k)
            if (colcount[rows[r][k].first] < colcount[rows[r][best].first]) best = k;
        const std::uint32_t col = rows[r][best].first;
        const Value pivot = rows[r][best].second;

        alive[r] = false;
        --remaining;
        ++rank;
        for (const auto& e : rows[r]) --colcount[e.first];

        for (std::size_t s = 0; s < rows.size(); ++s) {
            if (!alive[s]) continue;
            auto it = std::lower_bound(rows[s].begin(), rows[s].end(), col,
                                       [](const auto& e, std::uint32_t c) { return e.first < c; });
            if (it == rows[s].end() || it->first != col) continue;
            Value t = it->second;
            for (const auto& e : rows[s]) --colcount[e.first];
            arith.eliminate(rows[s], t, rows[r], pivot);
            for (const auto& e : rows[s]) ++colcount[e.first];
            if (rows[s].empty()) {
                alive[s] = false;
                --remaining;
            }
        }
    }
    return rank;
}

}  // namespace

std::size_t rank(const SparseMatrix& m, const FieldSpec& field) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::int64_t> acc;
    for (const auto& e : m.entries()) acc[{e.row, e.col}] += e.value;
    std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> rows(m.rows());
    for (auto [rc, v] : acc)
        if (v != 0) rows[rc.first].emplace_back(rc.second, v);

    if (!field.is_rationals()) return eliminate_rank(rows, m.cols(), PrimeArith{field.modulus()});
    try {
        return eliminate_rank(rows, m.cols(), IntegerArith<std::int64_t>{});
    } catch (const Overflow&) {
        return eliminate_rank(rows, m.cols(), IntegerArith<boost::multiprecision::cpp_int>{});
    }
}

}  // namespace monoci

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lclab {

template <class E>
using SparseVec = std::vector<std::pair<std::uint32_t, E>>;

/// Sorts by column, merges duplicates, drops zeros.
template <class K>
void canonicalize(const K& k, SparseVec<typename K::Elem>& v)
{
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < v.size();) {
        auto col = v[i].first;
        auto val = v[i].second;
        std::size_t j = i + 1;
        for (; j < v.size() && v[j].first == col; ++j) val = k.add(val, v[j].second);
        if (!k.is_zero(val)) v[out++] = {col, std::move(val)};
        i = j;
    }
    v.resize(out);
}

/// Incremental row echelon form over a field K on a fixed number of columns.
///
/// Rows are kept sparse with their pivot (first nonzero column) normalized to 1.
/// Reduction eliminates every pivot column, so `reduce` returns the unique
/// remainder with zeros at all pivot columns. After `finalize` the rows are in
/// reduced row echelon form. Pivots are chosen on the first nonzero column.
/// Not safe for concurrent use (reduction shares a scratch buffer).
template <class K>
class Echelon {
public:
    using Elem = typename K::Elem;
    using Row = SparseVec<Elem>;
    static constexpr std::uint32_t none = UINT32_MAX;

    Echelon() = default;
    Echelon(K field, std::size_t ncols)
        : k_(std::move(field)), ncols_(ncols), pivot_row_(ncols, none), acc_(ncols, k_.zero()), mark_(ncols, 0)
    {
    }

    std::size_t ncols() const { return ncols_; }
    std::size_t rank() const { return rows_.size(); }
    const K& field() const { return k_; }
    bool is_pivot(std::uint32_t col) const { return pivot_row_[col] != none; }
    const Row& row_of_pivot(std::uint32_t col) const { return rows_[pivot_row_[col]]; }
    /// Rows in insertion order; after finalize, sorted by pivot column.
    const std::vector<Row>& rows() const { return rows_; }
    std::uint32_t pivot_of_row(std::size_t r) const { return rows_[r].front().first; }

    Row reduce(const Row& v) const
    {
        Row out;
        if (v.empty()) return out;
        std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap;
        std::vector<std::uint32_t> touched;
        for (const auto& [c, x] : v) {
            if (!mark_[c]) {
                mark_[c] = 1;
                touched.push_back(c);
                heap.push(c);
                acc_[c] = x;
            } else {
                acc_[c] = k_.add(acc_[c], x);
            }
        }
        while (!heap.empty()) {
            std::uint32_t c = heap.top();
            heap.pop();
            if (k_.is_zero(acc_[c])) continue;
            std::uint32_t r = pivot_row_[c];
            if (r == none) {
                out.emplace_back(c, acc_[c]);
                continue;
            }
            Elem f = acc_[c];
            for (const auto& [cc, y] : rows_[r]) {
                if (!mark_[cc]) {
                    mark_[cc] = 1;
                    touched.push_back(cc);
                    heap.push(cc);
                    acc_[cc] = k_.neg(k_.mul(f, y));
                } else {
                    acc_[cc] = k_.sub_mul(acc_[cc], f, y);
                }
            }
        }
        for (auto c : touched) {
            mark_[c] = 0;
            acc_[c] = k_.zero();
        }
        return out;
    }

    /// Adds v to the span; returns false when v was already in it.
    bool insert(const Row& v)
    {
        Row r = reduce(v);
        if (r.empty()) return false;
        add_reduced(std::move(r));
        return true;
    }

    /// Adds a row already reduced against the current pivots.
    void add_reduced(Row r)
    {
        Elem inv = k_.inv(r.front().second);
        for (auto& e : r) e.second = k_.mul(inv, e.second);
        r.front().second = k_.one();
        pivot_row_[r.front().first] = static_cast<std::uint32_t>(rows_.size());
        rows_.push_back(std::move(r));
        finalized_ = false;
    }

    bool contains(const Row& v) const { return reduce(v).empty(); }

    /// Back-substitution to reduced row echelon form; rows sorted by pivot.
    void finalize()
    {
        if (finalized_) return;
        std::vector<std::size_t> order(rows_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return rows_[a].front().first > rows_[b].front().first; });
        for (std::size_t idx : order) {
            Row& row = rows_[idx];
            Row tail(row.begin() + 1, row.end());
            Row red = reduce(tail);
            Row fresh;
            fresh.reserve(red.size() + 1);
            fresh.push_back(std::move(row.front()));
            for (auto& e : red) fresh.push_back(std::move(e));
            row = std::move(fresh);
        }
        std::sort(rows_.begin(), rows_.end(),
                  [](const Row& a, const Row& b) { return a.front().first < b.front().first; });
        for (std::size_t i = 0; i < rows_.size(); ++i) pivot_row_[rows_[i].front().first] = static_cast<std::uint32_t>(i);
        finalized_ = true;
    }

    std::vector<std::uint32_t> pivots() const
    {
        std::vector<std::uint32_t> p;
        p.reserve(rows_.size());
        for (const auto& r : rows_) p.push_back(r.front().first);
        std::sort(p.begin(), p.end());
        return p;
    }

private:
    K k_{};
    std::size_t ncols_ = 0;
    std::vector<Row> rows_;
    std::vector<std::uint32_t> pivot_row_;
    mutable std::vector<Elem> acc_;
    mutable std::vector<char> mark_;
    bool finalized_ = true;
};

/// Right kernel of the matrix whose rows are given, as sparse column vectors.
/// `rows` is consumed into an echelon form; one kernel vector per free column.
template <class K>
std::vector<SparseVec<typename K::Elem>> kernel_basis(const K& k, std::size_t ncols,
                                                      const std::vector<SparseVec<typename K::Elem>>& rows)
{
    using Elem = typename K::Elem;
    Echelon<K> ech(k, ncols);
    for (const auto& r : rows) ech.insert(r);
    ech.finalize();
    std::vector<std::int64_t> free_index(ncols, -1);
    std::vector<SparseVec<Elem>> out;
    for (std::uint32_t c = 0; c < ncols; ++c)
        if (!ech.is_pivot(c)) {
            free_index[c] = static_cast<std::int64_t>(out.size());
            out.push_back({});
        }
    for (const auto& row : ech.rows()) {
        std::uint32_t piv = row.front().first;
        for (std::size_t i = 1; i < row.size(); ++i) {
            auto fi = free_index[row[i].first];
            if (fi >= 0) out[static_cast<std::size_t>(fi)].emplace_back(piv, k.neg(row[i].second));
        }
    }
    for (std::uint32_t c = 0; c < ncols; ++c)
        if (free_index[c] >= 0) {
            auto& v = out[static_cast<std::size_t>(free_index[c])];
            v.emplace_back(c, k.one());
            canonicalize(k, v);
        }
    return out;
}

} // namespace lclab

#include "sncalc/tableaux.hpp"

#include <algorithm>
#include <stdexcept>

namespace sncalc {

SkewShape::SkewShape(Partition outer_, Partition inner_)
    : outer(std::move(outer_)), inner(std::move(inner_)) {
    if (!outer.contains(inner)) throw std::domain_error("inner shape not contained in outer");
}

std::string SkewShape::to_string() const {
    return outer.to_string() + "/" + inner.to_string();
}

std::string Tableau::to_string() const {
    std::string s;
    for (int r = 0; r < shape.outer.length(); ++r) {
        if (r) s += ' ';
        for (int c = 0; c < shape.outer.parts()[r]; ++c) {
            if (c) s += ',';
            if (c < shape.inner.part(r))
                s += '.';
            else
                s += std::to_string(rows[r][c]);
        }
    }
    return s;
}

namespace {

struct Cell {
    int r, c;
    bool row_right;  // (r, c+1) is a shape cell
    bool col_up;     // (r-1, c) is a shape cell
};

}  // namespace

std::int64_t count_fillings(const SkewShape& shape, const Partition& content,
                            const FillingOptions& opts) {
    if (shape.cells() != content.size()) throw std::domain_error("incompatible sizes");
    const Partition& outer = shape.outer;
    const Partition& inner = shape.inner;
    const int nrows = outer.length();
    const int nvals = content.length();

    // Reverse reading order: rows top to bottom, right to left within a row.
    // Both the row constraint (against the right neighbour) and the column
    // constraint (against the cell above) then refer to already-filled cells,
    // and the lattice condition is a prefix condition on exactly this order.
    std::vector<Cell> cells;
    for (int r = 0; r < nrows; ++r) {
        for (int c = outer.parts()[r] - 1; c >= inner.part(r); --c) {
            Cell cell;
            cell.r = r;
            cell.c = c;
            cell.row_right = c + 1 < outer.parts()[r];
            cell.col_up = r > 0 && c < outer.part(r - 1) && c >= inner.part(r - 1);
            cells.push_back(cell);
        }
    }
    if (cells.empty()) {
        if (opts.emit && opts.emit_limit > 0) opts.emit(Tableau{shape, {}});
        return 1;
    }

    std::vector<std::vector<int>> grid(nrows, std::vector<int>(outer.part(0), 0));
    std::vector<int> remaining(nvals + 1, 0);
    for (int i = 0; i < nvals; ++i) remaining[i + 1] = content.parts()[i];
    std::vector<int> placed(nvals + 2, 0);

    std::int64_t count = 0;
    std::int64_t emitted = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (opts.cap >= 0 && count >= opts.cap) return;
        if (k == cells.size()) {
            ++count;
            if (opts.emit && emitted < opts.emit_limit) {
                ++emitted;
                Tableau t{shape, grid};
                opts.emit(t);
            }
            return;
        }
        const Cell& cell = cells[k];
        int hi = cell.row_right ? grid[cell.r][cell.c + 1] : nvals;
        int lo = cell.col_up ? grid[cell.r - 1][cell.c] + 1 : 1;
        for (int v = lo; v <= hi; ++v) {
            if (remaining[v] == 0) continue;
            if (opts.lattice && v > 1 && placed[v] >= placed[v - 1]) continue;
            grid[cell.r][cell.c] = v;
            --remaining[v];
            ++placed[v];
            rec(k + 1);
            ++remaining[v];
            --placed[v];
        }
        grid[cell.r][cell.c] = 0;
    };
    rec(0);
    return count;
}

std::int64_t count_ssyt(const SkewShape& shape, const Partition& content) {
    return count_fillings(shape, content, {});
}

std::int64_t kostka(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw std::domain_error("incompatible sizes");
    if (!lambda.dominates(mu)) return 0;
    return count_ssyt(SkewShape(lambda, Partition{}), mu);
}

std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu,
                            std::int64_t cap) {
    if (lambda.size() + mu.size() != nu.size()) throw std::domain_error("incompatible sizes");
    if (!nu.contains(lambda)) return 0;
    if (nu.length() > lambda.length() + mu.length()) return 0;
    // nu must be dominated by the sorted part-sum of lambda and mu.
    {
        std::vector<int> sum;
        int len = std::max(lambda.length(), mu.length());
        for (int i = 0; i < len; ++i) sum.push_back(lambda.part(i) + mu.part(i));
        if (!Partition::unchecked(std::move(sum)).dominates(nu)) return 0;
    }
    FillingOptions opts;
    opts.lattice = true;
    opts.cap = cap;
    return count_fillings(SkewShape(nu, lambda), mu, opts);
}

std::pair<Partition, Partition> kostka_as_lr(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw std::domain_error("incompatible sizes");
    std::vector<int> tau, sigma;
    int l = mu.length();
    for (int i = 0; i < l; ++i) {
        int tail = 0;
        for (int t = i; t < l; ++t) tail += mu.parts()[t];
        tau.push_back(tail);
        if (i + 1 < l) sigma.push_back(tail - mu.parts()[i]);
    }
    return {Partition::unchecked(std::move(sigma)), Partition::unchecked(std::move(tau))};
}

std::map<Partition, std::int64_t> skew_schur_expansion(const SkewShape& shape) {
    std::map<Partition, std::int64_t> out;
    for (const auto& mu : gen_partitions(shape.cells())) {
        std::int64_t c = lr_coefficient(shape.inner, mu, shape.outer);
        if (c) out.emplace(mu, c);
    }
    return out;
}

}  // namespace sncalc

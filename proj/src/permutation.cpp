#include "sncalc/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sncalc {

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
    std::vector<bool> seen(w_.size() + 1, false);
    for (int v : w_) {
        if (v < 1 || v > static_cast<int>(w_.size()) || seen[v])
            throw std::invalid_argument("not a permutation in one-line notation");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    Permutation p;
    p.w_ = std::move(w);
    return p;
}

Permutation Permutation::longest(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = n - i;
    Permutation p;
    p.w_ = std::move(w);
    return p;
}

Permutation Permutation::from_code(const std::vector<int>& code) {
    int n = static_cast<int>(code.size());
    for (int i = 0; i < static_cast<int>(code.size()); ++i) {
        if (code[i] < 0) throw std::invalid_argument("negative code entry");
        n = std::max(n, code[i] + i + 1);
    }
    std::vector<int> avail(n);
    std::iota(avail.begin(), avail.end(), 1);
    std::vector<int> w;
    w.reserve(n);
    for (int i = 0; i < n; ++i) {
        const int c = i < static_cast<int>(code.size()) ? code[i] : 0;
        w.push_back(avail[c]);
        avail.erase(avail.begin() + c);
    }
    Permutation p;
    p.w_ = std::move(w);
    return p.trimmed();
}

int Permutation::length() const {
    int len = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
        for (std::size_t j = i + 1; j < w_.size(); ++j)
            if (w_[j] < w_[i]) ++len;
    return len;
}

std::vector<int> Permutation::code() const {
    std::vector<int> c(w_.size(), 0);
    for (std::size_t i = 0; i < w_.size(); ++i)
        for (std::size_t j = i + 1; j < w_.size(); ++j)
            if (w_[j] < w_[i]) ++c[i];
    return c;
}

std::vector<int> Permutation::descents() const {
    std::vector<int> d;
    for (std::size_t i = 0; i + 1 < w_.size(); ++i)
        if (w_[i] > w_[i + 1]) d.push_back(static_cast<int>(i) + 1);
    return d;
}

bool Permutation::is_grassmannian() const { return descents().size() <= 1; }

bool Permutation::avoids_321() const {
    const int n = static_cast<int>(w_.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (w_[j] >= w_[i]) continue;
            for (int k = j + 1; k < n; ++k)
                if (w_[k] < w_[j]) return false;
        }
    return true;
}

Permutation Permutation::swap_positions(int i) const {
    if (i < 1 || i >= static_cast<int>(w_.size()))
        throw std::invalid_argument("adjacent swap position out of range");
    Permutation p;
    p.w_ = w_;
    std::swap(p.w_[i - 1], p.w_[i]);
    return p;
}

Permutation Permutation::append_fixed() const {
    Permutation p;
    p.w_ = w_;
    p.w_.push_back(static_cast<int>(w_.size()) + 1);
    return p;
}

Permutation Permutation::prepend_identity(int m) const {
    Permutation p;
    p.w_.reserve(w_.size() + m);
    for (int i = 1; i <= m; ++i) p.w_.push_back(i);
    for (int v : w_) p.w_.push_back(v + m);
    return p;
}

Permutation Permutation::trimmed() const {
    Permutation p;
    p.w_ = w_;
    while (!p.w_.empty() && p.w_.back() == static_cast<int>(p.w_.size())) p.w_.pop_back();
    return p;
}

std::string Permutation::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(w_[i]);
    }
    return s.empty() ? "1" : s;
}

Permutation Permutation::parse(const std::string& text) {
    std::vector<int> w;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad permutation '" + text + "'");
        w.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Permutation(std::move(w));
}

bool Permutation::operator==(const Permutation& o) const {
    return trimmed().w_ == o.trimmed().w_;
}

std::strong_ordering Permutation::operator<=>(const Permutation& o) const {
    return trimmed().w_ <=> o.trimmed().w_;
}

}  // namespace sncalc

#pragma once

#include <compare>
#include <string>
#include <vector>

namespace sncalc {

// Permutation in one-line notation. The ambient size is as constructed;
// comparison and equality are as functions on {1,2,...}, i.e. trailing fixed
// points are ignored.
class Permutation {
public:
    Permutation() = default;  // identity of S_0
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int n);
    static Permutation longest(int n);  // w0
    // Decodes a Lehmer code (entries c_i with x^c the leading monomial);
    // the ambient size is the minimal one fitting the code.
    static Permutation from_code(const std::vector<int>& code);

    const std::vector<int>& one_line() const { return w_; }
    int n() const { return static_cast<int>(w_.size()); }
    int operator()(int i) const { return w_[i - 1]; }  // 1-based

    int length() const;                // inversion count
    std::vector<int> code() const;     // c_i = #{j > i : w(j) < w(i)}, length n()
    std::vector<int> descents() const; // 1-based positions i with w(i) > w(i+1)
    bool is_grassmannian() const;      // at most one descent
    bool avoids_321() const;

    Permutation swap_positions(int i) const;   // w * s_i, 1-based adjacent swap
    Permutation append_fixed() const;          // w x 1
    Permutation prepend_identity(int m) const; // 1^m x w
    Permutation trimmed() const;               // drop trailing fixed points

    std::string to_string() const;  // "2,1,4,3"
    static Permutation parse(const std::string& text);

    bool operator==(const Permutation& o) const;
    std::strong_ordering operator<=>(const Permutation& o) const;

private:
    std::vector<int> w_;
};

}  // namespace sncalc

#pragma once

#include <map>
#include <string>
#include <vector>

namespace isharp {

// Integer Laurent polynomial in t, exponent -> nonzero coefficient.
class Laurent {
public:
    Laurent() = default;
    Laurent(std::initializer_list<std::pair<const int, long>> terms);
    // full coefficient list from t^top down to t^-top (odd length)
    static Laurent symmetric(const std::vector<long>& top_down);

    long coef(int e) const;
    void add(int e, long c);
    const std::map<int, long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int max_degree() const;  // 0 for the zero polynomial
    int min_degree() const;
    long norm() const;       // sum of |coefficients|
    long at_one() const;
    bool is_symmetric() const;

    Laurent operator-() const;
    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    Laurent scaled(long c) const;
    Laurent shifted(int by) const;
    bool operator==(const Laurent& o) const { return terms_ == o.terms_; }

    std::string str() const;

private:
    std::map<int, long> terms_;
};

// sum_{i=-|tau|}^{|tau|} (-1)^{|tau|-i} t^i
Laurent staircase_polynomial(int tau);
// t^{s+1} - 2 t^s + t^{s-1}
Laurent square_polynomial(int s);

}  // namespace isharp

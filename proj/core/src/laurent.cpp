#include "isharp/laurent.hpp"

#include <cstdlib>

namespace isharp {

Laurent::Laurent(std::initializer_list<std::pair<const int, long>> terms)
{
    for (auto& [e, c] : terms)
        add(e, c);
}

Laurent Laurent::symmetric(const std::vector<long>& top_down)
{
    Laurent p;
    int top = (static_cast<int>(top_down.size()) - 1) / 2;
    for (size_t k = 0; k < top_down.size(); ++k)
        p.add(top - static_cast<int>(k), top_down[k]);
    return p;
}

long Laurent::coef(int e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

void Laurent::add(int e, long c)
{
    if (c == 0)
        return;
    auto& v = terms_[e];
    v += c;
    if (v == 0)
        terms_.erase(e);
}

int Laurent::max_degree() const
{
    return terms_.empty() ? 0 : terms_.rbegin()->first;
}

int Laurent::min_degree() const
{
    return terms_.empty() ? 0 : terms_.begin()->first;
}

long Laurent::norm() const
{
    long n = 0;
    for (auto& [e, c] : terms_)
        n += std::labs(c);
    return n;
}

long Laurent::at_one() const
{
    long n = 0;
    for (auto& [e, c] : terms_)
        n += c;
    return n;
}

bool Laurent::is_symmetric() const
{
    for (auto& [e, c] : terms_)
        if (coef(-e) != c)
            return false;
    return true;
}

Laurent Laurent::operator-() const
{
    return scaled(-1);
}

Laurent& Laurent::operator+=(const Laurent& o)
{
    for (auto& [e, c] : o.terms_)
        add(e, c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o)
{
    for (auto& [e, c] : o.terms_)
        add(e, -c);
    return *this;
}

Laurent Laurent::scaled(long c) const
{
    Laurent p;
    for (auto& [e, v] : terms_)
        p.add(e, v * c);
    return p;
}

Laurent Laurent::shifted(int by) const
{
    Laurent p;
    for (auto& [e, v] : terms_)
        p.add(e + by, v);
    return p;
}

std::string Laurent::str() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto [e, c] = *it;
        long a = std::labs(c);
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? "-" : "+";
        if (a != 1 || e == 0)
            s += std::to_string(a);
        if (e == 1)
            s += "t";
        else if (e != 0)
            s += "t^" + std::to_string(e);
    }
    return s;
}

Laurent staircase_polynomial(int tau)
{
    int a = std::abs(tau);
    Laurent p;
    for (int i = -a; i <= a; ++i)
        p.add(i, ((a - i) % 2 == 0) ? 1 : -1);
    return p;
}

Laurent square_polynomial(int s)
{
    return Laurent{{s + 1, 1}, {s, -2}, {s - 1, 1}};
}

}  // namespace isharp

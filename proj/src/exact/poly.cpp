#include "exact/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace exact {

namespace {

unsigned vec_degree(const std::vector<unsigned>& v) {
    unsigned d = 0;
    for (unsigned e : v)
        d += e;
    return d;
}

}  // namespace

bool MultiPoly::TermOrder::operator()(const std::vector<unsigned>& a,
                                      const std::vector<unsigned>& b) const {
    unsigned da = vec_degree(a), db = vec_degree(b);
    if (da != db)
        return da > db;  // higher degree first
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly::MultiPoly(const Rational& c) {
    if (!c.is_zero())
        terms_.emplace(std::vector<unsigned>{}, c);
}

MultiPoly MultiPoly::variable(const std::string& name) {
    if (name.empty())
        throw std::invalid_argument("MultiPoly: empty variable name");
    MultiPoly p;
    p.vars_ = {name};
    p.terms_.emplace(std::vector<unsigned>{1}, Rational(1));
    return p;
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty())
        return Rational(0);
    if (!is_constant())
        throw std::domain_error("MultiPoly: not a constant: " + to_string());
    return terms_.begin()->second;
}

unsigned MultiPoly::total_degree() const {
    return terms_.empty() ? 0 : vec_degree(terms_.begin()->first);
}

unsigned MultiPoly::degree_in(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end())
        return 0;
    std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
    unsigned d = 0;
    for (const auto& [key, c] : terms_)
        d = std::max(d, key[idx]);
    return d;
}

Rational MultiPoly::leading_coefficient() const {
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Rational MultiPoly::content() const {
    BigInt num_gcd = 0, den_lcm = 1;
    for (const auto& [key, c] : terms_) {
        num_gcd = boost::multiprecision::gcd(
            num_gcd, c.num() < 0 ? BigInt(-c.num()) : c.num());
        den_lcm = den_lcm / boost::multiprecision::gcd(den_lcm, c.den()) * c.den();
    }
    return Rational(num_gcd, den_lcm);
}

void MultiPoly::insert_term(const std::vector<unsigned>& key, const Rational& c) {
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    } else if (c.is_zero()) {
        terms_.erase(it);
    }
}

void MultiPoly::prune_vars() {
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [key, c] : terms_)
        for (std::size_t i = 0; i < key.size(); ++i)
            if (key[i] > 0)
                used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; }))
        return;
    std::vector<std::string> nv;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (used[i])
            nv.push_back(vars_[i]);
    TermMap nt;
    for (const auto& [key, c] : terms_) {
        std::vector<unsigned> nk;
        nk.reserve(nv.size());
        for (std::size_t i = 0; i < key.size(); ++i)
            if (used[i])
                nk.push_back(key[i]);
        nt.emplace(std::move(nk), c);
    }
    vars_ = std::move(nv);
    terms_ = std::move(nt);
}

MultiPoly::TermMap MultiPoly::remap(const MultiPoly& p,
                                    const std::vector<std::string>& vars) {
    // positions of p.vars_ inside vars (vars is a sorted superset)
    std::vector<std::size_t> pos(p.vars_.size());
    for (std::size_t i = 0; i < p.vars_.size(); ++i) {
        auto it = std::lower_bound(vars.begin(), vars.end(), p.vars_[i]);
        pos[i] = static_cast<std::size_t>(it - vars.begin());
    }
    TermMap out;
    for (const auto& [key, c] : p.terms_) {
        std::vector<unsigned> nk(vars.size(), 0);
        for (std::size_t i = 0; i < key.size(); ++i)
            nk[pos[i]] = key[i];
        out.emplace(std::move(nk), c);
    }
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [key, c] : r.terms_)
        c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (o.terms_.empty())
        return *this;
    if (vars_ != o.vars_) {
        std::vector<std::string> merged;
        std::set_union(vars_.begin(), vars_.end(), o.vars_.begin(), o.vars_.end(),
                       std::back_inserter(merged));
        TermMap mine = remap(*this, merged);
        TermMap theirs = remap(o, merged);
        vars_ = std::move(merged);
        terms_ = std::move(mine);
        for (const auto& [key, c] : theirs)
            insert_term(key, c);
    } else {
        for (const auto& [key, c] : o.terms_)
            insert_term(key, c);
    }
    prune_vars();
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    return *this += -o;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    if (terms_.empty() || o.terms_.empty()) {
        vars_.clear();
        terms_.clear();
        return *this;
    }
    std::vector<std::string> merged;
    std::set_union(vars_.begin(), vars_.end(), o.vars_.begin(), o.vars_.end(),
                   std::back_inserter(merged));
    TermMap a = remap(*this, merged);
    TermMap b = remap(o, merged);
    vars_ = std::move(merged);
    terms_.clear();
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            std::vector<unsigned> k(ka.size());
            for (std::size_t i = 0; i < k.size(); ++i)
                k[i] = ka[i] + kb[i];
            insert_term(k, ca * cb);
        }
    prune_vars();
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        vars_.clear();
        terms_.clear();
        return *this;
    }
    for (auto& [key, v] : terms_)
        v *= c;
    return *this;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r(Rational(1));
    for (unsigned i = 0; i < e; ++i)
        r *= *this;
    return r;
}

Rational MultiPoly::eval(const std::map<std::string, Rational>& assignment) const {
    std::vector<Rational> vals;
    vals.reserve(vars_.size());
    for (const auto& v : vars_) {
        auto it = assignment.find(v);
        if (it == assignment.end())
            throw std::invalid_argument("MultiPoly::eval: missing variable '" + v +
                                        "'");
        vals.push_back(it->second);
    }
    Rational sum(0);
    for (const auto& [key, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < key.size(); ++i)
            for (unsigned e = 0; e < key[i]; ++e)
                t *= vals[i];
        sum += t;
    }
    return sum;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& divisor) const {
    if (divisor.is_zero())
        throw std::domain_error("MultiPoly::divide_exact: division by zero");
    if (divisor.is_constant()) {
        MultiPoly q = *this;
        Rational inv = Rational(1) / divisor.constant_value();
        q *= inv;
        return q;
    }
    // Long division by the leading term; exactness is a precondition.
    MultiPoly rem = *this;
    MultiPoly quot;
    while (!rem.is_zero()) {
        std::vector<std::string> merged;
        std::set_union(rem.vars_.begin(), rem.vars_.end(), divisor.vars_.begin(),
                       divisor.vars_.end(), std::back_inserter(merged));
        TermMap r = remap(rem, merged);
        TermMap d = remap(divisor, merged);
        const auto& [rk, rc] = *r.begin();
        const auto& [dk, dc] = *d.begin();
        std::vector<unsigned> qk(merged.size());
        for (std::size_t i = 0; i < merged.size(); ++i) {
            if (rk[i] < dk[i])
                throw std::domain_error(
                    "MultiPoly::divide_exact: not divisible: " + to_string() +
                    " by " + divisor.to_string());
            qk[i] = rk[i] - dk[i];
        }
        MultiPoly qt;
        qt.vars_ = merged;
        qt.terms_.emplace(std::move(qk), rc / dc);
        qt.prune_vars();
        quot += qt;
        rem -= qt * divisor;
        // Progress guarantee: the leading term of rem strictly decreased;
        // a non-divisible input eventually trips the exponent check above.
    }
    return quot;
}

MultiPoly MultiPoly::gcd_univariate(const MultiPoly& p, const MultiPoly& q) {
    if (p.vars_.size() > 1 || q.vars_.size() > 1 ||
        (p.vars_.size() == 1 && q.vars_.size() == 1 && p.vars_ != q.vars_))
        throw std::domain_error("MultiPoly::gcd_univariate: multivariate input");
    if (p.is_zero() && q.is_zero())
        return MultiPoly();
    const std::string var = !p.vars_.empty() ? p.vars_[0]
                        : !q.vars_.empty()   ? q.vars_[0]
                                             : std::string();
    if (var.empty())  // both constants, not both zero
        return MultiPoly(Rational(1));

    auto to_coeffs = [&](const MultiPoly& f) {
        std::vector<Rational> c(f.degree_in(var) + 1, Rational(0));
        for (const auto& [key, v] : f.terms_)
            c[f.vars_.empty() ? 0 : key[0]] = v;
        if (f.is_zero())
            c.clear();
        return c;
    };
    auto degree = [](const std::vector<Rational>& c) {
        return static_cast<long>(c.size()) - 1;
    };
    auto trim = [](std::vector<Rational>& c) {
        while (!c.empty() && c.back().is_zero())
            c.pop_back();
    };

    std::vector<Rational> a = to_coeffs(p), b = to_coeffs(q);
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a := a mod b
        while (degree(a) >= degree(b) && !a.empty()) {
            Rational factor = a.back() / b.back();
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[shift + i] -= factor * b[i];
            trim(a);
        }
        std::swap(a, b);
    }
    if (a.empty())
        return MultiPoly();
    MultiPoly g;
    MultiPoly x = variable(var);
    for (std::size_t i = 0; i < a.size(); ++i)
        g += x.pow(static_cast<unsigned>(i)) * MultiPoly(a[i]);
    // Normalize: primitive, positive leading coefficient.
    Rational cont = g.content();
    if (g.leading_coefficient().sign() < 0)
        cont = -cont;
    return g.divide_exact(MultiPoly(cont));
}

std::string MultiPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        std::string mono;
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (key[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += vars_[i];
            if (key[i] > 1)
                mono += "^" + std::to_string(key[i]);
        }
        Rational ac = c.abs();
        std::string body;
        if (mono.empty())
            body = ac.to_string();
        else if (ac.is_one())
            body = mono;
        else
            body = ac.to_string() + "*" + mono;
        if (first) {
            out = (c.sign() < 0 ? "-" : "") + body;
            first = false;
        } else {
            out += (c.sign() < 0 ? " - " : " + ") + body;
        }
    }
    return out;
}

}  // namespace exact

#include "rmj/poly.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <utility>
#include <vector>

namespace rmj {

using json = nlohmann::ordered_json;

namespace {

void check_exponents(const Monomial& m) {
    if (m.w > kMaxExponent || m.z > kMaxExponent || m.x > kMaxExponent || m.y > kMaxExponent)
        throw input_error("monomial exponent exceeds sanity cap 2^20");
}

unsigned total_degree(const Monomial& m) { return m.w + m.z + m.x + m.y; }

}  // namespace

void Poly4::add_term(const Monomial& m, const Rat& c_in) {
    Rat c = c_in;
    c.canonicalize();
    if (c == 0) return;
    check_exponents(m);
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly4 Poly4::constant(Rat c) {
    Poly4 p;
    p.add_term(Monomial{}, c);
    return p;
}

Poly4 Poly4::monomial(const Monomial& m, Rat coeff) {
    Poly4 p;
    p.add_term(m, coeff);
    return p;
}

Poly4 Poly4::variable(Var v) {
    Monomial m;
    switch (v) {
        case Var::W: m.w = 1; break;
        case Var::Z: m.z = 1; break;
        case Var::X: m.x = 1; break;
        case Var::Y: m.y = 1; break;
    }
    return monomial(m);
}

Rat Poly4::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

Poly4 Poly4::operator+(const Poly4& o) const {
    Poly4 r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly4 Poly4::operator-(const Poly4& o) const {
    Poly4 r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Poly4 Poly4::operator-() const {
    Poly4 r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly4 Poly4::operator*(const Poly4& o) const {
    Poly4 r;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m{ma.w + mb.w, ma.z + mb.z, ma.x + mb.x, ma.y + mb.y};
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Poly4 Poly4::pow(unsigned e) const {
    Poly4 result = one();
    Poly4 base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Poly4 Poly4::scale(const Rat& c) const {
    Poly4 r;
    if (c == 0) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

Poly4 Poly4::scale_div(const Int& d) const {
    if (d == 0) throw input_error("division of polynomial by zero");
    return scale(Rat(1) / Rat(d));
}

bool Poly4::is_integral() const {
    for (const auto& [m, c] : terms_)
        if (!is_integer(c)) return false;
    return true;
}

Poly4 Poly4::substitute(const std::array<Poly4, 4>& images) const {
    for (const auto& img : images)
        for (const auto& [m, c] : img.terms())
            if (total_degree(m) > 1) throw input_error("substitution images must be linear forms");

    // Powers of each image are shared across terms; closed-form enumerators
    // reuse the same handful of exponents many times.
    std::array<std::map<std::uint32_t, Poly4>, 4> cache;
    auto power_of = [&](int vi, std::uint32_t e) -> const Poly4& {
        auto [it, inserted] = cache[vi].try_emplace(e);
        if (inserted) it->second = images[vi].pow(e);
        return it->second;
    };

    Poly4 result;
    for (const auto& [m, c] : terms_) {
        Poly4 term = Poly4::constant(c);
        const std::array<std::uint32_t, 4> exps{m.w, m.z, m.x, m.y};
        for (int vi = 0; vi < 4; ++vi)
            if (exps[vi]) term = term * power_of(vi, exps[vi]);
        result = result + term;
    }
    return result;
}

Rat Poly4::eval(const Rat& w, const Rat& z, const Rat& x, const Rat& y) const {
    auto ipow = [](const Rat& b, std::uint32_t e) {
        Rat r(1), base = b;
        while (e) {
            if (e & 1) r *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return r;
    };
    Rat total(0);
    for (const auto& [m, c] : terms_)
        total += c * ipow(w, m.w) * ipow(z, m.z) * ipow(x, m.x) * ipow(y, m.y);
    return total;
}

Rat Poly4::coeff_sum() const {
    Rat total(0);
    for (const auto& [m, c] : terms_) total += c;
    return total;
}

std::string Poly4::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;

        const bool has_vars = m.w || m.z || m.x || m.y;
        bool printed = false;
        if (!has_vars || a != 1) {
            out << rat_to_string(a);
            printed = true;
        }
        auto factor = [&](const char* name, std::uint32_t e) {
            if (!e) return;
            if (printed) out << "*";
            out << name;
            if (e > 1) out << "^" << e;
            printed = true;
        };
        factor("w", m.w);
        factor("z", m.z);
        factor("x", m.x);
        factor("y", m.y);
    }
    return out.str();
}

std::string Poly4::to_json() const {
    json j;
    j["vars"] = {"w", "z", "x", "y"};
    j["terms"] = json::array();
    for (const auto& [m, c] : terms_) {
        j["terms"].push_back({{"exp", {m.w, m.z, m.x, m.y}}, {"coeff", rat_to_string(c)}});
    }
    return j.dump();
}

Poly4 Poly4::from_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.contains("terms") || !j["terms"].is_array())
        throw input_error("malformed polynomial JSON");
    Poly4 p;
    for (const auto& t : j["terms"]) {
        const auto& e = t.at("exp");
        if (!e.is_array() || e.size() != 4) throw input_error("polynomial term needs 4 exponents");
        Monomial m{e[0].get<std::uint32_t>(), e[1].get<std::uint32_t>(), e[2].get<std::uint32_t>(),
                   e[3].get<std::uint32_t>()};
        p.add_term(m, rat_from_string(t.at("coeff").get<std::string>()));
    }
    return p;
}

std::array<Poly4, 4> macwilliams_images() {
    const Poly4 w = Poly4::variable(Var::W), z = Poly4::variable(Var::Z);
    const Poly4 x = Poly4::variable(Var::X), y = Poly4::variable(Var::Y);
    return {w + z, w - z, x + y, x - y};
}

namespace {

// In-place upper Pascal transform a_j <- sum_{i>=j} C(i,j) a_i
// (Shaw-Traub synthetic shift: n passes of neighbor additions).
void pascal_up(std::vector<Rat>& a) {
    const std::size_t n = a.size();
    if (n < 2) return;
    for (std::size_t k = 0; k + 1 < n; ++k)
        for (std::size_t j = n - 1; j-- > k;) a[j] += a[j + 1];
}

// q holds coefficients of a homogeneous bivariate sum q_i x^{N-i} y^i;
// returns the coefficients of the same polynomial at (x+y, x-y).
// Decomposition: p(x+y, x-y) = r(x+y, y) with r(u, y) = p(u, u-2y), and both
// shears are Pascal transforms (the second on the reversed vector).
std::vector<Rat> transform_homogeneous_xy(std::vector<Rat> q) {
    pascal_up(q);
    Rat scale(1);
    for (std::size_t j = 0; j < q.size(); ++j) {
        if (j) q[j] *= scale;
        scale *= -2;
    }
    std::reverse(q.begin(), q.end());
    pascal_up(q);
    std::reverse(q.begin(), q.end());
    return q;
}

}  // namespace

Poly4 macwilliams_substitute(const Poly4& p) {
    // group terms by (e_w, e_z); each group's (x,y) part must be homogeneous
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::pair<Monomial, Rat>>> groups;
    for (const auto& [m, c] : p.terms()) groups[{m.w, m.z}].push_back({m, c});
    for (const auto& [wz, terms] : groups) {
        const std::uint32_t deg = terms.front().first.x + terms.front().first.y;
        for (const auto& [m, c] : terms)
            if (m.x + m.y != deg) return p.substitute(macwilliams_images());
    }

    const Poly4 w = Poly4::variable(Var::W), z = Poly4::variable(Var::Z);
    Poly4 result;
    for (const auto& [wz, terms] : groups) {
        const std::uint32_t deg = terms.front().first.x + terms.front().first.y;
        std::vector<Rat> q(deg + 1, Rat(0));
        for (const auto& [m, c] : terms) q[m.y] = c;
        q = transform_homogeneous_xy(std::move(q));

        Poly4 xy_part;
        for (std::uint32_t i = 0; i <= deg; ++i)
            if (q[i] != 0) xy_part = xy_part + Poly4::monomial(Monomial{0, 0, deg - i, i}, q[i]);
        const Poly4 wz_part = (w + z).pow(wz.first) * (w - z).pow(wz.second);
        result = result + wz_part * xy_part;
    }
    return result;
}

}  // namespace rmj

/*
   Copyright 2026 The hsconst Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "hsconst/scan.hpp"

#include <algorithm>
#include <map>

#include "hsconst/error.hpp"
#include "hsconst/univariate.hpp"

namespace hsc {

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t prime_residue(const FieldElement& c) {
    Field f = c.field();
    if (!f.is_prime_field()) throw InputError("finite-field evaluation needs coefficients in a prime field");
    return c.as_prime_residue();
}

}  // namespace

GaloisField::GaloisField(std::uint64_t p, std::uint32_t j) : p_(p), j_(j) {
    if (!is_prime(p)) throw InputError("characteristic must be prime");
    if (j == 0) throw InputError("extension degree must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < j; ++i) {
        q *= p;
        if (q > 65536) throw InputError("finite fields are limited to 2^16 elements");
    }
    q_ = static_cast<std::uint32_t>(q);

    if (j == 1) {
        modulus_ = {0, 1};
    } else {
        Field fp = Field::prime(p);
        for (std::uint32_t code = 0; code < q_; ++code) {
            std::vector<std::uint32_t> m;
            std::uint32_t c = code;
            for (std::uint32_t i = 0; i < j; ++i) {
                m.push_back(static_cast<std::uint32_t>(c % p));
                c /= static_cast<std::uint32_t>(p);
            }
            m.push_back(1);
            UPoly u;
            for (auto x : m) u.push_back(fp.from_int(static_cast<long>(x)));
            if (is_irreducible(u).value_or(false)) {
                modulus_ = m;
                break;
            }
        }
    }

    auto slow_mul = [&](std::uint32_t a, std::uint32_t b) {
        std::vector<std::uint64_t> da(j, 0), db(j, 0), prod(2 * j, 0);
        for (std::uint32_t i = 0; i < j; ++i) {
            da[i] = a % p;
            a /= static_cast<std::uint32_t>(p);
            db[i] = b % p;
            b /= static_cast<std::uint32_t>(p);
        }
        for (std::uint32_t i = 0; i < j; ++i)
            for (std::uint32_t k = 0; k < j; ++k) prod[i + k] = (prod[i + k] + da[i] * db[k]) % p;
        for (std::uint32_t deg = 2 * j - 1; deg >= j; --deg) {
            std::uint64_t c = prod[deg];
            if (c == 0) continue;
            prod[deg] = 0;
            for (std::uint32_t i = 0; i < j; ++i)
                prod[deg - j + i] = (prod[deg - j + i] + (p - c) * modulus_[i]) % p;
        }
        std::uint32_t out = 0;
        for (std::uint32_t i = j; i-- > 0;) out = out * static_cast<std::uint32_t>(p) + static_cast<std::uint32_t>(prod[i]);
        return out;
    };

    log_.assign(q_, 0);
    exp_.assign(q_, 0);
    for (std::uint32_t g = 1; g < q_; ++g) {
        std::uint32_t x = 1;
        std::uint32_t order = 0;
        do {
            x = slow_mul(x, g);
            ++order;
        } while (x != 1);
        if (order != q_ - 1) continue;
        x = 1;
        for (std::uint32_t e = 0; e < q_ - 1; ++e) {
            exp_[e] = x;
            log_[x] = e;
            x = slow_mul(x, g);
        }
        break;
    }
    if (q_ == 2) exp_[0] = 1;

    if (q_ <= 1024) {
        add_table_.assign(static_cast<std::size_t>(q_) * q_, 0);
        for (std::uint32_t a = 0; a < q_; ++a)
            for (std::uint32_t b = 0; b < q_; ++b) {
                std::uint32_t out = 0, scale = 1, x = a, y = b;
                for (std::uint32_t i = 0; i < j; ++i) {
                    out += static_cast<std::uint32_t>(((x % p) + (y % p)) % p) * scale;
                    x /= static_cast<std::uint32_t>(p);
                    y /= static_cast<std::uint32_t>(p);
                    scale *= static_cast<std::uint32_t>(p);
                }
                add_table_[static_cast<std::size_t>(a) * q_ + b] = static_cast<std::uint16_t>(out);
            }
    }
}

GaloisField::Elem GaloisField::add(Elem a, Elem b) const {
    if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
    Elem out = 0, scale = 1;
    auto p = static_cast<Elem>(p_);
    for (std::uint32_t i = 0; i < j_; ++i) {
        out += ((a % p) + (b % p)) % p * scale;
        a /= p;
        b /= p;
        scale *= p;
    }
    return out;
}

GaloisField::Elem GaloisField::neg(Elem a) const {
    Elem out = 0, scale = 1;
    auto p = static_cast<Elem>(p_);
    for (std::uint32_t i = 0; i < j_; ++i) {
        out += ((p - a % p) % p) * scale;
        a /= p;
        scale *= p;
    }
    return out;
}

GaloisField::Elem GaloisField::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

GaloisField::Elem GaloisField::inv(Elem a) const {
    if (a == 0) throw ArithmeticError("division by zero in " + describe());
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

GaloisField::Elem GaloisField::pow(Elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return exp_[static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1)) % (q_ - 1)];
}

std::vector<std::uint32_t> GaloisField::digits(Elem x) const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < j_; ++i) {
        out.push_back(static_cast<std::uint32_t>(x % p_));
        x /= static_cast<Elem>(p_);
    }
    return out;
}

std::uint32_t GaloisField::definition_degree(Elem x) const {
    Elem y = x;
    for (std::uint32_t d = 1; d <= j_; ++d) {
        y = frobenius(y);
        if (y == x && j_ % d == 0) return d;
    }
    return j_;
}

std::string GaloisField::to_string(Elem x) const {
    if (j_ == 1) return std::to_string(x);
    auto d = digits(x);
    std::string out;
    for (std::uint32_t i = j_; i-- > 0;) {
        if (d[i] == 0) continue;
        if (!out.empty()) out += " + ";
        std::string mono = i == 0 ? "" : (i == 1 ? "a" : "a^" + std::to_string(i));
        if (mono.empty())
            out += std::to_string(d[i]);
        else if (d[i] == 1)
            out += mono;
        else
            out += std::to_string(d[i]) + "*" + mono;
    }
    return out.empty() ? "0" : out;
}

std::string GaloisField::describe() const {
    if (j_ == 1) return "GF(" + std::to_string(q_) + ")";
    std::string m;
    for (std::uint32_t i = j_ + 1; i-- > 0;) {
        if (modulus_[i] == 0) continue;
        if (!m.empty()) m += " + ";
        std::string mono = i == 0 ? "" : (i == 1 ? "a" : "a^" + std::to_string(i));
        if (mono.empty())
            m += std::to_string(modulus_[i]);
        else if (modulus_[i] == 1)
            m += mono;
        else
            m += std::to_string(modulus_[i]) + "*" + mono;
    }
    return "GF(" + std::to_string(q_) + ") = F_" + std::to_string(p_) + "[a]/(" + m + ")";
}

std::string point_string(const GaloisField& F, const GFPoint& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) s += ", ";
        s += F.to_string(x[i]);
    }
    return s + ")";
}

std::uint32_t definition_degree(const GaloisField& F, const GFPoint& x) {
    std::uint32_t j = F.degree();
    for (std::uint32_t d = 1; d <= j; ++d) {
        if (j % d != 0) continue;
        bool fixed = std::all_of(x.begin(), x.end(), [&](GaloisField::Elem c) {
            GaloisField::Elem y = c;
            for (std::uint32_t i = 0; i < d; ++i) y = F.frobenius(y);
            return y == c;
        });
        if (fixed) return d;
    }
    return j;
}

std::vector<GFPoint> projective_orbit_representatives(const GaloisField& F, std::size_t n, std::uint32_t box) {
    std::vector<GFPoint> out;
    std::uint32_t limit = box == 0 ? F.order() : std::min(box, F.order());
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t free = n - k - 1;
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < free; ++i) total *= limit;
        for (std::uint64_t code = 0; code < total; ++code) {
            GFPoint x(n, 0);
            x[k] = 1;
            std::uint64_t c = code;
            for (std::size_t i = n; i-- > k + 1;) {
                x[i] = static_cast<GaloisField::Elem>(c % limit);
                c /= limit;
            }
            if (definition_degree(F, x) != F.degree()) continue;
            bool minimal = true;
            GFPoint conj = x;
            for (std::uint32_t s = 1; s < F.degree() && minimal; ++s) {
                for (auto& v : conj) v = F.frobenius(v);
                minimal = !(conj < x);
            }
            if (minimal) out.push_back(std::move(x));
        }
    }
    return out;
}

GaloisField::Elem evaluate(const GaloisField& F, const Polynomial& f, const GFPoint& x) {
    if (x.size() != f.nvars()) throw InputError("point of wrong dimension");
    GaloisField::Elem acc = 0;
    for (const auto& [m, c] : f.terms()) {
        GaloisField::Elem t = F.from_residue(prime_residue(c));
        for (std::size_t i = 0; i < m.size() && t != 0; ++i)
            if (m[i]) t = F.mul(t, F.pow(x[i], m[i]));
        acc = F.add(acc, t);
    }
    return acc;
}

std::vector<Polynomial> closed_point_ideal(const GaloisField& F, const GFPoint& x, const RingPtr& ring) {
    if (x.size() != ring->size()) throw InputError("point of wrong dimension");
    Field fp = ring->field();
    if (!fp.is_prime_field() || fp.characteristic() != F.characteristic())
        throw InputError("closed points need a ring over the matching prime field");
    std::uint32_t d = definition_degree(F, x);
    std::vector<Polynomial> out;
    auto residue = [&](GaloisField::Elem c) {
        auto dg = F.digits(c);
        for (std::size_t i = 1; i < dg.size(); ++i)
            if (dg[i] != 0) throw InternalError("expected a prime-field element");
        return fp.from_int(static_cast<long>(dg[0]));
    };
    if (d == 1) {
        for (std::size_t i = 0; i < x.size(); ++i)
            out.push_back(Polynomial::variable(ring, i) - Polynomial::constant(ring, residue(x[i])));
        return out;
    }
    std::size_t anchor = 0;
    while (F.definition_degree(x[anchor]) != d) ++anchor;
    GaloisField::Elem alpha = x[anchor];

    // m(X) = prod_i (X - alpha^(p^i)), coefficients in F_p.
    std::vector<GaloisField::Elem> m = {1};
    GaloisField::Elem conj = alpha;
    for (std::uint32_t i = 0; i < d; ++i) {
        std::vector<GaloisField::Elem> next(m.size() + 1, 0);
        for (std::size_t k = 0; k < m.size(); ++k) {
            next[k + 1] = F.add(next[k + 1], m[k]);
            next[k] = F.sub(next[k], F.mul(m[k], conj));
        }
        m = std::move(next);
        conj = F.frobenius(conj);
    }
    Polynomial mp(ring);
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (m[k] == 0) continue;
        Monomial e(ring->size(), 0);
        e[anchor] = static_cast<std::uint32_t>(k);
        mp.add_term(e, residue(m[k]));
    }
    out.push_back(mp);

    std::vector<GaloisField::Elem> powers = {1};
    for (std::uint32_t r = 1; r < d; ++r) powers.push_back(F.mul(powers.back(), alpha));
    std::uint64_t p = F.characteristic();
    std::uint64_t combos = 1;
    for (std::uint32_t r = 0; r < d; ++r) combos *= p;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i == anchor) continue;
        bool found = false;
        for (std::uint64_t code = 0; code < combos && !found; ++code) {
            GaloisField::Elem v = 0;
            std::uint64_t c = code;
            std::vector<std::uint32_t> coeffs;
            for (std::uint32_t r = 0; r < d; ++r) {
                coeffs.push_back(static_cast<std::uint32_t>(c % p));
                v = F.add(v, F.mul(F.from_residue(c % p), powers[r]));
                c /= p;
            }
            if (v != x[i]) continue;
            found = true;
            Polynomial g = Polynomial::variable(ring, i);
            for (std::uint32_t r = 0; r < d; ++r) {
                if (coeffs[r] == 0) continue;
                Monomial e(ring->size(), 0);
                e[anchor] = r;
                g.add_term(e, -fp.from_int(static_cast<long>(coeffs[r])));
            }
            out.push_back(g);
        }
        if (!found) throw InternalError("coordinate outside the field generated by the anchor");
    }
    return out;
}

HSFunction hs_at_cone_point(const std::vector<Polynomial>& gens, const GaloisField& F, const GFPoint& x,
                            std::uint32_t D) {
    require_homogeneous(gens);
    if (gens.empty()) throw InputError("empty generator list");
    std::size_t n = gens.front().nvars();
    if (x.size() != n) throw InputError("point of wrong dimension");
    if (gens.front().field().characteristic() != F.characteristic())
        throw InputError("field characteristic does not match the point");
    std::size_t k = 0;
    while (k < n && x[k] == 0) ++k;
    if (k == n) throw InputError("hs_at_cone_point needs a nonzero point");
    for (const auto& g : gens)
        if (evaluate(F, g, x) != 0) throw InputError("point " + point_string(F, x) + " is not on the cone");

    GaloisField::Elem scale = F.inv(x[k]);
    std::vector<GaloisField::Elem> ybar;
    for (std::size_t i = 0; i < n; ++i)
        if (i != k) ybar.push_back(F.mul(x[i], scale));
    std::size_t m = n - 1;

    // Columns: monomials of degree <= D in the slice variables, by degree.
    std::vector<Monomial> cols;
    std::vector<std::size_t> degree_start;
    for (std::uint32_t d = 0; d <= D; ++d) {
        degree_start.push_back(cols.size());
        for (auto& mono : monomials_of_degree(m, d)) cols.push_back(std::move(mono));
    }
    degree_start.push_back(cols.size());
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < cols.size(); ++i) index[cols[i]] = i;

    std::uint64_t p = F.characteristic();
    std::uint32_t maxdeg = 0;
    for (const auto& g : gens) maxdeg = std::max(maxdeg, g.degree());
    std::vector<std::vector<std::uint64_t>> binom(maxdeg + 1, std::vector<std::uint64_t>(maxdeg + 1, 0));
    for (std::uint32_t a = 0; a <= maxdeg; ++a) {
        binom[a][0] = 1 % p;
        for (std::uint32_t b = 1; b <= a; ++b) binom[a][b] = (binom[a - 1][b - 1] + (b <= a - 1 ? binom[a - 1][b] : 0)) % p;
    }

    std::vector<std::map<Monomial, GaloisField::Elem>> slices;
    for (const auto& g : gens) {
        std::map<Monomial, GaloisField::Elem> h;
        for (const auto& [mono, c] : g.terms()) {
            Monomial e;
            for (std::size_t i = 0; i < n; ++i)
                if (i != k) e.push_back(mono[i]);
            GaloisField::Elem coef = F.from_residue(prime_residue(c));
            // c * prod (z_i + ybar_i)^(e_i), expanded.
            std::vector<std::pair<Monomial, GaloisField::Elem>> terms = {{Monomial(m, 0), coef}};
            for (std::size_t i = 0; i < m; ++i) {
                std::vector<std::pair<Monomial, GaloisField::Elem>> next;
                for (const auto& [tm, tc] : terms) {
                    for (std::uint32_t a = 0; a <= e[i]; ++a) {
                        GaloisField::Elem b = F.from_residue(binom[e[i]][a]);
                        if (b == 0) continue;
                        GaloisField::Elem v = F.mul(F.mul(tc, b), F.pow(ybar[i], e[i] - a));
                        if (v == 0) continue;
                        Monomial nm = tm;
                        nm[i] = a;
                        next.emplace_back(std::move(nm), v);
                    }
                }
                terms = std::move(next);
            }
            for (const auto& [tm, tc] : terms) {
                if (total_degree(tm) > D) continue;
                auto& slot = h[tm];
                slot = F.add(slot, tc);
            }
        }
        for (auto it = h.begin(); it != h.end();) it = it->second == 0 ? h.erase(it) : std::next(it);
        if (!h.empty()) slices.push_back(std::move(h));
    }

    std::size_t ncols = cols.size();
    std::vector<std::vector<GaloisField::Elem>> pivot_rows(ncols);
    std::vector<bool> has_pivot(ncols, false);
    std::vector<GaloisField::Elem> row(ncols);
    for (const auto& h : slices) {
        std::uint32_t ord = D + 1;
        for (const auto& [tm, tc] : h) ord = std::min(ord, total_degree(tm));
        for (std::uint32_t s = 0; s + ord <= D; ++s) {
            for (const auto& beta : monomials_of_degree(m, s)) {
                std::fill(row.begin(), row.end(), 0);
                for (const auto& [tm, tc] : h) {
                    if (total_degree(tm) + s > D) continue;
                    Monomial prod = tm;
                    for (std::size_t i = 0; i < m; ++i) prod[i] += beta[i];
                    row[index.at(prod)] = tc;
                }
                for (std::size_t c = 0; c < ncols; ++c) {
                    if (row[c] == 0) continue;
                    if (has_pivot[c]) {
                        GaloisField::Elem f = F.neg(row[c]);
                        const auto& pr = pivot_rows[c];
                        for (std::size_t t = c; t < ncols; ++t)
                            if (pr[t] != 0) row[t] = F.add(row[t], F.mul(f, pr[t]));
                        continue;
                    }
                    GaloisField::Elem inv = F.inv(row[c]);
                    for (std::size_t t = c; t < ncols; ++t) row[t] = F.mul(row[t], inv);
                    pivot_rows[c] = row;
                    has_pivot[c] = true;
                    break;
                }
            }
        }
    }

    HSFunction out;
    out.truncation = D;
    out.tag = "point " + point_string(F, x) + " over " + F.describe();
    std::int64_t acc = 0;
    for (std::uint32_t d = 0; d <= D; ++d) {
        std::int64_t free = 0;
        for (std::size_t c = degree_start[d]; c < degree_start[d + 1]; ++c)
            if (!has_pivot[c]) ++free;
        acc += free;
        out.values.push_back(acc);
    }
    return out;
}

}  // namespace hsc

#include "knotconc/seifert.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "knotconc/cyclotomic.hpp"
#include "knotconc/errors.hpp"
#include "knotconc/hermitian.hpp"

namespace knotconc {

namespace {

// Fraction-free determinant over Z via Bareiss.
mpz_class int_det(std::vector<std::vector<mpz_class>> m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (m[i][k] != 0) {
                    piv = i;
                    break;
                }
            if (piv == k) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

// Bareiss determinant for Laurent matrices over Q.
Laurent laurent_det(std::vector<std::vector<Laurent>> m) {
    std::size_t n = m.size();
    if (n == 0) return Laurent(mpq_class(1));
    Laurent prev(mpq_class(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t piv = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) {
                    piv = i;
                    break;
                }
            if (piv == k) return Laurent();
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            bool li = !m[i][k].is_zero();
            for (std::size_t j = k + 1; j < n; ++j) {
                Laurent num = m[i][j] * m[k][k];
                if (li && !m[k][j].is_zero()) num = num - m[i][k] * m[k][j];
                m[i][j] = poly_divexact(num, prev);
            }
            m[i][k] = Laurent();
        }
        prev = m[k][k];
    }
    Laurent d = m[n - 1][n - 1];
    return sign > 0 ? d : -d;
}

}  // namespace

SeifertMatrix SeifertMatrix::create(std::vector<std::vector<long long>> entries,
                                    std::string name) {
    std::size_t n = entries.size();
    for (const auto& row : entries)
        if (row.size() != n)
            throw InvalidSeifertMatrix("Seifert matrix must be square");
    if (n % 2 != 0)
        throw InvalidSeifertMatrix("Seifert matrix must have even size");
    std::vector<std::vector<mpz_class>> skew(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            skew[i][j] = mpz_class(static_cast<long>(entries[i][j])) - mpz_class(static_cast<long>(entries[j][i]));
    mpz_class d = int_det(std::move(skew));
    if (d != 1 && d != -1)
        throw InvalidSeifertMatrix("det(A - A^T) must be +-1, got " + d.get_str());
    SeifertMatrix s;
    s.a_ = std::move(entries);
    s.name_ = std::move(name);
    return s;
}

SeifertMatrix SeifertMatrix::unchecked(std::vector<std::vector<long long>> entries,
                                       std::string name) {
    SeifertMatrix s;
    s.a_ = std::move(entries);
    s.name_ = std::move(name);
    return s;
}

SeifertMatrix SeifertMatrix::mirror() const {
    long n = size();
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) m[i][j] = -a_[j][i];
    return unchecked(std::move(m), name_.empty() ? "" : "mirror(" + name_ + ")");
}

SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
    long n = a.size(), m = b.size();
    std::vector<std::vector<long long>> s(n + m, std::vector<long long>(n + m, 0));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) s[i][j] = a.a_[i][j];
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j) s[n + i][n + j] = b.a_[i][j];
    return SeifertMatrix::unchecked(std::move(s));
}

Laurent alexander_poly(const SeifertMatrix& a) {
    long n = a.size();
    std::vector<std::vector<Laurent>> m(n, std::vector<Laurent>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            Laurent e;
            e.add_term(1, mpq_class(static_cast<long>(a.entry(i, j))));
            e.add_term(0, mpq_class(static_cast<long>(-a.entry(j, i))));
            m[i][j] = e;
        }
    return alexander_normalize(laurent_det(std::move(m)));
}

LaurentZp alexander_poly_mod(const SeifertMatrix& a, long p) {
    if (!is_prime(p)) throw std::invalid_argument("alexander_poly_mod: p must be prime");
    return alexander_normalize(reduce_mod(alexander_poly(a), p));
}

int levine_tristram(const SeifertMatrix& a, const UnitCirclePoint& w) {
    if (w.is_one()) return 0;
    long n = a.size();
    Cyclotomic one(mpq_class(1));
    Cyclotomic zw = Cyclotomic::from_point(w);
    Cyclotomic u = one - zw;          // 1 - w
    Cyclotomic ubar = one - zw.conj();  // 1 - conj(w)
    CycloMatrix b(n, std::vector<Cyclotomic>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            b[i][j] = mpq_class(static_cast<long>(a.entry(i, j))) * u +
                      mpq_class(static_cast<long>(a.entry(j, i))) * ubar;
        }
    return hermitian_signature(b);
}

mpz_class det_at_minus_one(const SeifertMatrix& a) {
    mpq_class v = alexander_poly(a).value_at_minus_one();
    return v.get_num();
}

int arf(const SeifertMatrix& a) {
    mpz_class d = abs(det_at_minus_one(a)) % 8;
    return (d == 1 || d == 7) ? 0 : 1;
}

// --- catalog ----------------------------------------------------------------

SeifertMatrix torus_knot_2q(long q) {
    if (q < 3 || q % 2 == 0)
        throw std::invalid_argument("torus_knot_2q: q must be odd and >= 3");
    long n = q - 1;
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
    for (long i = 0; i < n; ++i) {
        m[i][i] = -1;
        if (i + 1 < n) m[i][i + 1] = 1;
    }
    return SeifertMatrix::unchecked(std::move(m), "T2_" + std::to_string(q));
}

SeifertMatrix twist_knot(long n) {
    if (n == 0) throw std::invalid_argument("twist_knot: n must be nonzero");
    std::string name = n > 0 ? "twist_" + std::to_string(n)
                             : "twist_m" + std::to_string(-n);
    return SeifertMatrix::unchecked({{-1, 1}, {0, n}}, name);
}

SeifertMatrix figure_eight() {
    return SeifertMatrix::unchecked({{1, 1}, {0, -1}}, "fig8");
}

SeifertMatrix unknot() { return SeifertMatrix::unchecked({}, "unknot"); }

std::vector<std::string> catalog_names() {
    std::vector<std::string> v{"unknot", "trefoil", "fig8"};
    for (long q = 3; q <= 21; q += 2) v.push_back("T2_" + std::to_string(q));
    v.push_back("twist_2");
    v.push_back("twist_3");
    v.push_back("twist_m2");
    v.push_back("twist_m3");
    return v;
}

std::optional<SeifertMatrix> catalog_lookup(const std::string& name) {
    if (name == "unknot") return unknot();
    if (name == "trefoil") return torus_knot_2q(3);
    if (name == "fig8" || name == "figure8") return figure_eight();
    if (name.rfind("T2_", 0) == 0) {
        long q = std::stol(name.substr(3));
        if (q >= 3 && q % 2 == 1) return torus_knot_2q(q);
        return std::nullopt;
    }
    if (name.rfind("twist_m", 0) == 0) {
        long n = std::stol(name.substr(7));
        if (n >= 1) return twist_knot(-n);
        return std::nullopt;
    }
    if (name.rfind("twist_", 0) == 0) {
        long n = std::stol(name.substr(6));
        if (n >= 1) return twist_knot(n);
        return std::nullopt;
    }
    return std::nullopt;
}

std::vector<std::string> exact_catalog_names() {
    std::vector<std::string> v{"unknot", "trefoil", "fig8"};
    for (long q = 3; q <= 21; q += 2) v.push_back("T2_" + std::to_string(q));
    return v;
}

// --- JSON -------------------------------------------------------------------

SeifertMatrix seifert_from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidSeifertMatrix(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("matrix") || !j["matrix"].is_array())
        throw InvalidSeifertMatrix("expected {\"matrix\": [[..],..]}");
    std::vector<std::vector<long long>> m;
    for (const auto& row : j["matrix"]) {
        if (!row.is_array()) throw InvalidSeifertMatrix("matrix rows must be arrays");
        std::vector<long long> r;
        for (const auto& x : row) {
            if (!x.is_number_integer())
                throw InvalidSeifertMatrix("matrix entries must be integers");
            r.push_back(x.get<long long>());
        }
        m.push_back(std::move(r));
    }
    std::string name = j.value("name", std::string());
    return SeifertMatrix::create(std::move(m), std::move(name));
}

std::string seifert_to_json(const SeifertMatrix& a) {
    nlohmann::json j;
    if (!a.name().empty()) j["name"] = a.name();
    j["matrix"] = nlohmann::json::array();
    for (long i = 0; i < a.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (long k = 0; k < a.size(); ++k) row.push_back(a.entry(i, k));
        j["matrix"].push_back(row);
    }
    return j.dump(2);
}

SeifertMatrix seifert_load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidSeifertMatrix("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return seifert_from_json(ss.str());
}

}  // namespace knotconc

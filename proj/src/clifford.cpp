#include "ks/clifford.hpp"

#include <cctype>
#include <set>

namespace ks {

namespace {

int top_bit(Mask s) { return 31 - __builtin_clz(s); }

SparseRow to_row(const std::map<Mask, Rational>& m) {
    SparseRow r;
    for (const auto& [k, v] : m)
        if (sgn(v) != 0) r.emplace_back(k, v);
    return r;
}

}  // namespace

CliffordAlg::CliffordAlg(QMat bilinear, std::vector<std::string> names)
    : n_(bilinear.rows), b_(std::move(bilinear)), names_(std::move(names)) {
    if (b_.rows != b_.cols) throw DimensionMismatch("bilinear form must be square");
    if (b_ != b_.transpose()) throw std::invalid_argument("bilinear form must be symmetric");
    if (n_ > 10) throw std::invalid_argument("at most 10 generators are supported");
    if (names_.empty())
        for (size_t i = 0; i < n_; ++i) names_.push_back("e" + std::to_string(i + 1));
    if (names_.size() != n_) throw std::invalid_argument("generator name count mismatch");

    Mask D = dim();
    gen_.resize(size_t(D) * n_);
    for (Mask s = 0; s < D; ++s)
        for (size_t i = 0; i < n_; ++i) {
            Mask bi = Mask(1) << i;
            SparseRow& out = gen_[s * n_ + i];
            if (s == 0) {
                out = {{bi, Rational(1)}};
                continue;
            }
            int l = top_bit(s);
            if (int(i) > l) {
                out = {{s | bi, Rational(1)}};
            } else if (int(i) == l) {
                if (sgn(b_(i, i)) != 0) out = {{s ^ bi, b_(i, i)}};
            } else {
                // e_S' e_l e_i = 2 b_li e_S' - (e_S' e_i) e_l
                Mask sp = s ^ (Mask(1) << l);
                std::map<Mask, Rational> acc;
                if (sgn(b_(l, i)) != 0) acc[sp] += 2 * b_(l, i);
                for (const auto& [t, c] : gen_[sp * n_ + i]) acc[t | (Mask(1) << l)] -= c;
                out = to_row(acc);
            }
        }

    table_.resize(size_t(D) * D);
    for (Mask s = 0; s < D; ++s)
        for (Mask r = 0; r < D; ++r) {
            std::map<Mask, Rational> cur{{s, Rational(1)}};
            for (size_t i = 0; i < n_; ++i) {
                if (!(r >> i & 1)) continue;
                std::map<Mask, Rational> nxt;
                for (const auto& [t, c] : cur)
                    for (const auto& [u, w] : gen_[t * n_ + i]) nxt[u] += c * w;
                cur = std::move(nxt);
            }
            table_[(size_t(s) << n_) | r] = to_row(cur);
        }
}

std::vector<Mask> CliffordAlg::even_monomials() const {
    std::vector<Mask> v;
    for (Mask s = 0; s < dim(); ++s)
        if (!parity(s)) v.push_back(s);
    return v;
}

std::vector<Mask> CliffordAlg::odd_monomials() const {
    std::vector<Mask> v;
    for (Mask s = 0; s < dim(); ++s)
        if (parity(s)) v.push_back(s);
    return v;
}

std::string CliffordAlg::mask_name(Mask s) const {
    std::string out = "e{";
    bool first = true;
    for (size_t i = 0; i < n_; ++i)
        if (s >> i & 1) out += (first ? "" : ",") + std::to_string(i + 1), first = false;
    return out + "}";
}

AlgPtr make_algebra(const IntLattice& l, std::vector<std::string> names) {
    return std::make_shared<const CliffordAlg>(l.gram, std::move(names));
}

SparseRow reverse_monomial(const CliffordAlg& a, Mask s) {
    std::map<Mask, Rational> cur{{0, Rational(1)}};
    for (int i = int(a.n()) - 1; i >= 0; --i) {
        if (!(s >> i & 1)) continue;
        std::map<Mask, Rational> nxt;
        for (const auto& [t, c] : cur)
            for (const auto& [u, w] : a.mono_gen(t, size_t(i))) nxt[u] += c * w;
        cur = std::move(nxt);
    }
    return to_row(cur);
}

Glued glue(const CliffordAlg& a, const CliffordAlg& b) {
    QMat g = block_diag<Rational>({a.bilinear(), b.bilinear()});
    std::vector<std::string> names = a.names();
    names.insert(names.end(), b.names().begin(), b.names().end());
    if (std::set<std::string>(names.begin(), names.end()).size() != names.size()) names.clear();
    return {std::make_shared<const CliffordAlg>(g, names), a.n()};
}

CElemQ to_rational_elem(const CElemR& x) {
    CElemQ e(x.alg);
    for (const auto& [m, v] : x.c) {
        if (!v.is_rational()) throw std::domain_error("element has irrational coefficients");
        e.c[m] = v.a;
    }
    return e;
}

CElemR to_quad_elem(const CElemQ& x) {
    CElemR e(x.alg);
    for (const auto& [m, v] : x.c) e.c[m] = QuadExt(v);
    return e;
}

namespace {

struct ElemParser {
    const AlgPtr& alg;
    const std::string& s;
    size_t p = 0;

    void ws() {
        while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
    }
    bool eat(char c) {
        ws();
        if (p < s.size() && s[p] == c) {
            ++p;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw ParseError("cannot parse element '" + s + "' at offset " + std::to_string(p) + ": " + why);
    }
    QuadExt as_scalar(const CElemR& x) {
        for (const auto& [m, v] : x.c)
            if (m != 0) fail("division by a non-scalar");
        return x.coeff(0);
    }

    CElemR expr() {
        CElemR v(alg);
        ws();
        bool neg = eat('-');
        if (!neg) eat('+');
        v = term();
        if (neg) v = -v;
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }
    CElemR term() {
        CElemR v = factor();
        for (;;) {
            if (eat('*'))
                v = v * factor();
            else if (eat('/'))
                v = as_scalar(factor()).inv() * v;
            else
                return v;
        }
    }
    CElemR factor() {
        ws();
        if (eat('(')) {
            CElemR v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (eat('-')) return -factor();
        if (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
            size_t q = p;
            while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
            Integer n(s.substr(p, q - p));
            p = q;
            return CElemR::scalar(alg, QuadExt(Rational(n)));
        }
        size_t q = p;
        while (q < s.size() && (std::isalnum(static_cast<unsigned char>(s[q])) || s[q] == '_')) ++q;
        if (q == p) fail("unexpected character");
        std::string id = s.substr(p, q - p);
        p = q;
        if (id == "sqrt2") return CElemR::scalar(alg, QuadExt::sqrt2());
        if (id == "e" && eat('{')) {
            Mask m = 0;
            std::vector<size_t> idx;
            ws();
            if (!eat('}')) {
                do {
                    ws();
                    size_t r = p;
                    while (r < s.size() && std::isdigit(static_cast<unsigned char>(s[r]))) ++r;
                    if (r == p) fail("expected generator index");
                    idx.push_back(std::stoul(s.substr(p, r - p)));
                    p = r;
                } while (eat(','));
                if (!eat('}')) fail("expected '}'");
            }
            CElemR v = CElemR::one(alg);
            for (size_t k : idx) {
                if (k == 0 || k > alg->n()) fail("generator index out of range");
                m |= Mask(1) << (k - 1);
                v = v * CElemR::gen(alg, k - 1);
            }
            (void)m;
            return v;
        }
        const auto& names = alg->names();
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == id) return CElemR::gen(alg, i);
        if (id.size() > 1 && id[0] == 'e') {
            size_t k = std::stoul(id.substr(1));
            if (k >= 1 && k <= alg->n()) return CElemR::gen(alg, k - 1);
        }
        fail("unknown generator '" + id + "'");
    }
};

}  // namespace

CElemR parse_element(const AlgPtr& a, const std::string& text) {
    ElemParser ps{a, text};
    CElemR v = ps.expr();
    ps.ws();
    if (ps.p != text.size()) ps.fail("trailing input");
    return v;
}

// ---- representations ----

QuatMat quat_identity(size_t n) { return QuatMat::identity(n); }

QuatMat to_quat(const QMat& m) {
    return m.map([](const Rational& x) { return QuatQ(x); });
}

bool GradedRep::rational() const {
    for (const auto& g : gens)
        for (const auto& q : g.d)
            if (sgn(q.x) || sgn(q.y) || sgn(q.z)) return false;
    return true;
}

QuatMat GradedRep::eval(const CElemQ& x) const {
    if (x.alg.get() != source.get()) throw AlgebraMismatch("element is not in the source algebra");
    QuatMat m(dim, dim);
    for (const auto& [s, c] : x.c) {
        const QuatMat& im = monomials[s];
        for (size_t t = 0; t < m.d.size(); ++t)
            if (!is_zero(im.d[t])) m.d[t] += c * im.d[t];
    }
    return m;
}

QuatMat GradedRep::grading_matrix() const {
    QuatMat g(dim, dim);
    for (size_t i = 0; i < dim; ++i) g(i, i) = QuatQ(grading[i]);
    return g;
}

GradedRep extend_by_flca(AlgPtr source, std::vector<QuatMat> gens, std::vector<int> grading) {
    size_t n = source->n();
    if (gens.size() != n) throw DimensionMismatch("one image per generator required");
    size_t dim = n ? gens[0].rows : 1;
    for (const auto& g : gens)
        if (g.rows != dim || g.cols != dim) throw DimensionMismatch("generator images must be square of equal size");
    if (grading.empty())
        for (size_t r = 0; r < dim; ++r) grading.push_back(r % 2 == 0 ? 1 : -1);
    if (grading.size() != dim) throw DimensionMismatch("grading length");
    QuatMat id = quat_identity(dim);
    const QMat& b = source->bilinear();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            QuatMat lhs = gens[i] * gens[j] + gens[j] * gens[i];
            QuatMat rhs = id;
            for (auto& q : rhs.d) q = Rational(2 * b(i, j)) * q;
            if (lhs != rhs) throw RelationViolation(i, j);
        }
    for (size_t i = 0; i < n; ++i)
        for (size_t r = 0; r < dim; ++r)
            for (size_t c = 0; c < dim; ++c)
                if (!is_zero(gens[i](r, c)) && grading[r] == grading[c])
                    throw std::domain_error("generator image " + std::to_string(i + 1) + " is not odd for the grading");
    GradedRep rep{std::move(source), dim, std::move(gens), std::move(grading), {}};
    Mask D = rep.source->dim();
    rep.monomials.resize(D);
    rep.monomials[0] = id;
    for (Mask s = 1; s < D; ++s) {
        int l = top_bit(s);
        rep.monomials[s] = rep.monomials[s ^ (Mask(1) << l)] * rep.gens[l];
    }
    return rep;
}

}  // namespace ks

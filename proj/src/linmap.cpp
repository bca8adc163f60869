#include "tpk/linmap.hpp"

#include "tpk/errors.hpp"

namespace tpk {

LinearMap::LinearMap(MapTag tag, int dim) : tag_(tag), dim_(dim) {
    m_.assign(dim, std::vector<RationalFunction>(dim, RationalFunction(dim)));
}

Kind LinearMap::domain_kind() const {
    return tag_ == MapTag::forms_to_vectors ? Kind::form : Kind::multivector;
}

Kind LinearMap::codomain_kind() const {
    return tag_ == MapTag::vectors_to_forms ? Kind::form : Kind::multivector;
}

Graded LinearMap::apply(const Graded& v) const {
    if (v.degree() != 1 && !v.is_zero())
        throw IndexError("linear map applies to degree-1 objects");
    if (v.dim() != dim_)
        throw DimensionMismatch("dimension mismatch in linear map application");
    if (v.kind() != domain_kind())
        throw KindMismatch("argument kind does not match map domain");
    Graded out(codomain_kind(), dim_, 1);
    for (int r = 0; r < dim_; ++r) {
        RationalFunction acc(dim_);
        for (const auto& [idx, c] : v.terms())
            acc += m_[r][idx[0]] * c;
        out.add_term({r}, acc);
    }
    return out;
}

LinearMap LinearMap::identity(int dim) {
    LinearMap id(MapTag::vectors_to_vectors, dim);
    for (int i = 0; i < dim; ++i)
        id.at(i, i) = RationalFunction::constant(dim, Rational(1));
    return id;
}

LinearMap operator+(const LinearMap& a, const LinearMap& b) {
    if (a.tag() != b.tag() || a.dim() != b.dim())
        throw KindMismatch("adding incompatible linear maps");
    LinearMap r(a.tag(), a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            r.at(i, j) = a.at(i, j) + b.at(i, j);
    return r;
}

LinearMap operator-(const LinearMap& a, const LinearMap& b) {
    if (a.tag() != b.tag() || a.dim() != b.dim())
        throw KindMismatch("subtracting incompatible linear maps");
    LinearMap r(a.tag(), a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            r.at(i, j) = a.at(i, j) - b.at(i, j);
    return r;
}

LinearMap compose(const LinearMap& a, const LinearMap& b) {
    if (a.dim() != b.dim())
        throw DimensionMismatch("composing maps of different dimension");
    if (a.domain_kind() != b.codomain_kind())
        throw KindMismatch("map composition kinds do not chain");
    MapTag tag;
    if (b.domain_kind() == Kind::form && a.codomain_kind() == Kind::multivector)
        tag = MapTag::forms_to_vectors;
    else if (b.domain_kind() == Kind::multivector && a.codomain_kind() == Kind::form)
        tag = MapTag::vectors_to_forms;
    else if (b.domain_kind() == Kind::multivector && a.codomain_kind() == Kind::multivector)
        tag = MapTag::vectors_to_vectors;
    else
        throw KindMismatch("form-to-form composition is not represented");
    LinearMap r(tag, a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            RationalFunction acc(a.dim());
            for (int k = 0; k < a.dim(); ++k)
                acc += a.at(i, k) * b.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

bool LinearMap::is_antisymmetric() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j <= i; ++j)
            if (!(m_[i][j] + m_[j][i]).is_zero())
                return false;
    return true;
}

namespace {

// Laplace expansion over the live rows/cols; var_dim is the dimension of
// the coefficient variable space, independent of the matrix size.
RationalFunction det_recursive(const LinearMap& m, int var_dim,
                               const std::vector<int>& rows, std::vector<int>& cols,
                               size_t level) {
    if (level == rows.size())
        return RationalFunction::constant(var_dim, Rational(1));
    RationalFunction acc(var_dim);
    int sign = 1;
    for (size_t k = 0; k < cols.size(); ++k) {
        int c = cols[k];
        if (!m.at(rows[level], c).is_zero()) {
            cols.erase(cols.begin() + k);
            RationalFunction minor = det_recursive(m, var_dim, rows, cols, level + 1);
            cols.insert(cols.begin() + k, c);
            RationalFunction t = m.at(rows[level], c) * minor;
            acc += (sign > 0) ? t : -t;
        }
        sign = -sign;
    }
    return acc;
}

} // namespace

RationalFunction LinearMap::determinant() const {
    if (tag_ != MapTag::vectors_to_vectors)
        throw KindMismatch("determinant is defined for endomorphisms");
    std::vector<int> rows(dim_), cols(dim_);
    for (int i = 0; i < dim_; ++i)
        rows[i] = cols[i] = i;
    return det_recursive(*this, dim_, rows, cols, 0);
}

LinearMap LinearMap::adjugate() const {
    if (tag_ != MapTag::vectors_to_vectors)
        throw KindMismatch("adjugate is defined for endomorphisms");
    LinearMap adj(tag_, dim_);
    if (dim_ == 1) {
        adj.at(0, 0) = RationalFunction::constant(1, Rational(1));
        return adj;
    }
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            // adj[i][j] is the cofactor C_ji: delete row j, column i
            std::vector<int> rows, cols;
            for (int r = 0; r < dim_; ++r)
                if (r != j)
                    rows.push_back(r);
            for (int c = 0; c < dim_; ++c)
                if (c != i)
                    cols.push_back(c);
            RationalFunction d = det_recursive(*this, dim_, rows, cols, 0);
            adj.at(i, j) = ((i + j) % 2 == 0) ? d : -d;
        }
    return adj;
}

LinearMap sharp(const Graded& pi) {
    if (pi.kind() != Kind::multivector || (pi.degree() != 2 && !pi.is_zero()))
        throw KindMismatch("sharp expects a bivector field");
    LinearMap m(MapTag::forms_to_vectors, pi.dim());
    for (const auto& [idx, c] : pi.terms()) {
        m.at(idx[1], idx[0]) += c;  // pi(dx_a, dx_b) with a = idx[0] < b = idx[1]
        m.at(idx[0], idx[1]) -= c;
    }
    return m;
}

LinearMap flat(const Graded& B) {
    if (B.kind() != Kind::form || (B.degree() != 2 && !B.is_zero()))
        throw KindMismatch("flat expects a 2-form");
    LinearMap m(MapTag::vectors_to_forms, B.dim());
    for (const auto& [idx, c] : B.terms()) {
        m.at(idx[1], idx[0]) += c;  // B(e_a, e_b)
        m.at(idx[0], idx[1]) -= c;
    }
    return m;
}

Graded raise_all(const Graded& pi, const Graded& phi) {
    if (phi.kind() != Kind::form)
        throw KindMismatch("raise_all expects a form");
    if (pi.dim() != phi.dim())
        throw DimensionMismatch("dimension mismatch in raise_all");
    int n = pi.dim();
    int k = phi.degree();
    if (k == 0)
        return Graded::function(Kind::multivector, n, phi.scalar());
    LinearMap p = sharp(pi);
    std::vector<Graded> images;
    images.reserve(n);
    for (int i = 0; i < n; ++i)
        images.push_back(p.apply(Graded::basis(Kind::form, n, i)));
    Graded r(Kind::multivector, n, k);
    for (const auto& [idx, c] : phi.terms()) {
        Graded w = images[idx[0]];
        for (int t = 1; t < k; ++t)
            w = wedge(w, images[idx[t]]);
        if (w.is_zero())
            continue;
        r += w * ((k % 2 == 0) ? c : -c); // (-1)^k fixes the slot convention
    }
    return r;
}

std::vector<std::pair<Graded, Graded>> raise_two_of_three(const Graded& pi,
                                                          const Graded& phi) {
    if (phi.kind() != Kind::form || (phi.degree() != 3 && !phi.is_zero()))
        throw KindMismatch("raise_two_of_three expects a 3-form");
    std::vector<std::pair<Graded, Graded>> out;
    int n = pi.dim();
    for (int t = 0; t < n; ++t) {
        if (phi.is_zero())
            continue;
        Graded slice = contract_basis(phi, t); // i_{e_t} phi
        Graded v = raise_all(pi, slice);
        if (v.is_zero())
            continue;
        out.emplace_back(std::move(v), Graded::basis(Kind::form, n, t));
    }
    return out;
}

} // namespace tpk

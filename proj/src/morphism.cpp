#include "wangweave/morphism.hpp"

#include <stdexcept>

namespace wangweave {

Morphism2D Morphism2D::identity(int n) {
    Morphism2D m;
    m.domain_size = m.codomain_size = n;
    for (int a = 0; a < n; ++a) m.rules.push_back(Word2D::letter(a));
    return m;
}

Word2D apply(const Morphism2D& m, const Word2D& w) {
    if (w.n1 == 0 || w.n2 == 0) throw std::invalid_argument("apply: empty word");
    std::vector<int> wcol(w.n1), hrow(w.n2);
    for (int x = 0; x < w.n1; ++x) wcol[x] = m.rule(w.at(x, 0)).n1;
    for (int y = 0; y < w.n2; ++y) hrow[y] = m.rule(w.at(0, y)).n2;
    for (int y = 0; y < w.n2; ++y)
        for (int x = 0; x < w.n1; ++x) {
            const Word2D& img = m.rule(w.at(x, y));
            if (img.n1 != wcol[x] || img.n2 != hrow[y])
                throw std::invalid_argument("apply: incompatible image shapes");
        }
    int W = 0, H = 0;
    for (int v : wcol) W += v;
    for (int v : hrow) H += v;
    Word2D out(W, H);
    int oy = 0;
    for (int y = 0; y < w.n2; ++y) {
        int ox = 0;
        for (int x = 0; x < w.n1; ++x) {
            const Word2D& img = m.rule(w.at(x, y));
            for (int dy = 0; dy < img.n2; ++dy)
                for (int dx = 0; dx < img.n1; ++dx) out.at(ox + dx, oy + dy) = img.at(dx, dy);
            ox += wcol[x];
        }
        oy += hrow[y];
    }
    return out;
}

Morphism2D compose(const Morphism2D& outer, const Morphism2D& inner) {
    if (outer.domain_size != inner.codomain_size)
        throw std::invalid_argument("compose: alphabet mismatch");
    Morphism2D m;
    m.domain_size = inner.domain_size;
    m.codomain_size = outer.codomain_size;
    for (int a = 0; a < inner.domain_size; ++a) m.rules.push_back(apply(outer, inner.rule(a)));
    return m;
}

Eigen::MatrixXi incidence_matrix(const Morphism2D& m) {
    Eigen::MatrixXi M = Eigen::MatrixXi::Zero(m.codomain_size, m.domain_size);
    for (int a = 0; a < m.domain_size; ++a)
        for (int b : m.rule(a).cells) ++M(b, a);
    return M;
}

PrimitivityResult is_primitive(const Morphism2D& m) {
    if (m.domain_size != m.codomain_size)
        throw std::invalid_argument("is_primitive: not a self-morphism");
    int n = m.domain_size;
    Eigen::MatrixXi M = incidence_matrix(m);
    auto positive = [n](const Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>& B) {
        return B.count() == static_cast<Eigen::Index>(n) * n;
    };
    Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> A = M.array() > 0, P = A;
    int bound = (n - 1) * (n - 1) + 1;
    for (int power = 1; power <= bound; ++power) {
        if (positive(P)) return {true, power};
        // boolean matrix product P * A
        Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> next(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                bool v = false;
                for (int k = 0; k < n && !v; ++k) v = P(i, k) && A(k, j);
                next(i, j) = v;
            }
        P = next;
    }
    return {false, 0};
}

Eigen::VectorXd perron_frequencies(const Morphism2D& m) {
    auto prim = is_primitive(m);
    if (!prim.primitive) throw std::runtime_error("perron_frequencies: morphism is not primitive");
    Eigen::MatrixXd M = incidence_matrix(m).cast<double>();
    int n = static_cast<int>(M.rows());
    Eigen::VectorXd v = Eigen::VectorXd::Ones(n) / n;
    for (int it = 0; it < 100000; ++it) {
        Eigen::VectorXd w = M * v;
        w /= w.norm();
        double lambda = v.dot(M * v) / v.dot(v);
        if ((M * w - lambda * w).norm() <= 1e-13 * lambda && (w - v).norm() < 1e-14) {
            v = w;
            break;
        }
        v = w;
    }
    return v / v.sum();
}

Eigen::VectorXd push_frequencies(const Eigen::MatrixXi& chain_incidence, const Eigen::VectorXd& v) {
    Eigen::VectorXd w = chain_incidence.cast<double>() * v;
    return w / w.sum();
}

std::optional<Morphism2D> quotient_morphism(const Morphism2D& m, const std::vector<int>& psi, int image_size) {
    if (m.domain_size != m.codomain_size)
        throw std::invalid_argument("quotient_morphism: not a self-morphism");
    if (static_cast<int>(psi.size()) != m.domain_size)
        throw std::invalid_argument("quotient_morphism: projection size mismatch");
    Morphism2D tau;
    tau.domain_size = tau.codomain_size = image_size;
    tau.rules.assign(image_size, Word2D{});
    std::vector<bool> seen(image_size, false);
    for (int a = 0; a < m.domain_size; ++a) {
        int c = psi.at(a);
        Word2D img = m.rule(a);
        for (int& cell : img.cells) cell = psi.at(cell);
        if (!seen[c]) {
            seen[c] = true;
            tau.rules[c] = std::move(img);
        } else if (tau.rules[c] != img) {
            return std::nullopt;
        }
    }
    for (bool s : seen)
        if (!s) return std::nullopt;
    return tau;
}

AnchoredPatch apply_anchored(const Morphism2D& m, const AnchoredPatch& p) {
    const Word2D& w = p.word;
    if (!(p.ax <= 0 && 0 < p.ax + w.n1 && p.ay <= 0 && 0 < p.ay + w.n2))
        throw std::invalid_argument("apply_anchored: patch must contain the origin cell");
    Word2D img = apply(m, w);
    int ax = 0, ay = 0;
    for (int x = 0; x < -p.ax; ++x) ax -= m.rule(w.at(x, 0)).n1;
    for (int y = 0; y < -p.ay; ++y) ay -= m.rule(w.at(0, y)).n2;
    return {std::move(img), ax, ay};
}

Word2D central_image(const Morphism2D& m, const Word2D& seed) {
    if (seed.n1 != 2 || seed.n2 != 2) throw std::invalid_argument("central_image: seed must be 2x2");
    AnchoredPatch img = apply_anchored(m, {seed, -1, -1});
    int ox = -1 - img.ax, oy = -1 - img.ay;
    if (ox < 0 || oy < 0 || ox + 2 > img.word.n1 || oy + 2 > img.word.n2)
        throw std::invalid_argument("central_image: image does not cover the central block");
    Word2D c(2, 2);
    for (int dy = 0; dy < 2; ++dy)
        for (int dx = 0; dx < 2; ++dx) c.at(dx, dy) = img.word.at(ox + dx, oy + dy);
    return c;
}

std::set<Word2D> square_fixed_seeds(const Morphism2D& m, const std::set<Word2D>& factors2x2) {
    std::set<Word2D> out;
    for (const Word2D& s : factors2x2)
        if (central_image(m, central_image(m, s)) == s) out.insert(s);
    return out;
}

AnchoredPatch generate_fixed_patch(const Morphism2D& m, const Word2D& seed, int n) {
    AnchoredPatch p{seed, -1, -1};
    for (int it = 0; it < n; ++it) {
        AnchoredPatch next = apply_anchored(m, apply_anchored(m, p));
        if (!occurs_at(p.word, next.word, p.ax - next.ax, p.ay - next.ay))
            throw std::runtime_error("generate_fixed_patch: windows do not nest (seed not prolongable)");
        p = std::move(next);
    }
    return p;
}

} // namespace wangweave

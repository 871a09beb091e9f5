#pragma once

#include <optional>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "wangweave/word2d.hpp"

namespace wangweave {

// Letter-to-rectangular-word map, applied by block concatenation.
struct Morphism2D {
    int domain_size = 0, codomain_size = 0;
    std::vector<Word2D> rules;  // indexed by domain letter

    static Morphism2D identity(int n);
    const Word2D& rule(int a) const { return rules.at(a); }

    bool operator==(const Morphism2D&) const = default;
};

// Block-assembled image anchored so that the image of the bottom-left letter
// sits at the origin. Throws std::invalid_argument when the blocks of a row
// or column disagree in height or width (the word is outside the domain
// language).
Word2D apply(const Morphism2D& m, const Word2D& w);

// Composition (outer after inner): rule(a) = apply(outer, inner.rule(a)).
Morphism2D compose(const Morphism2D& outer, const Morphism2D& inner);

// Entry (b,a) counts occurrences of codomain letter b in the image of a.
Eigen::MatrixXi incidence_matrix(const Morphism2D& m);

struct PrimitivityResult {
    bool primitive = false;
    int witness_power = 0;  // smallest m with entrywise positive matrix power
};

// Tests whether some power of the incidence matrix is entrywise positive;
// the power is bounded by (n-1)^2 + 1.
PrimitivityResult is_primitive(const Morphism2D& m);

// Normalized positive right Perron eigenvector of the incidence matrix
// (letter frequencies of the fixed point). Throws when not primitive.
Eigen::VectorXd perron_frequencies(const Morphism2D& m);

// Frequencies of codomain letters after mapping through a composed chain:
// M_chain * v, renormalized to sum 1.
Eigen::VectorXd push_frequencies(const Eigen::MatrixXi& chain_incidence, const Eigen::VectorXd& v);

// Quotient of a self-morphism by a letter projection psi (values 0..m-1):
// the unique tau with psi o tau = m o psi, or nullopt when the projected
// images within a psi-class disagree.
std::optional<Morphism2D> quotient_morphism(const Morphism2D& m, const std::vector<int>& psi, int image_size);

// Central 2x2 of the image of a 2x2 seed, under the prolongability anchoring
// (the seed occupies cells (-1,0),(0,0),(-1,-1),(0,-1)).
Word2D central_image(const Morphism2D& m, const Word2D& seed);

// Members of cycles of length dividing 2 of the central-image map restricted
// to the given 2x2 factors: the seeds of fixed points of the square.
std::set<Word2D> square_fixed_seeds(const Morphism2D& m, const std::set<Word2D>& factors2x2);

struct AnchoredPatch {
    Word2D word;
    int ax = 0, ay = 0;  // absolute coordinates of the bottom-left cell
};

// Iterates the square of the morphism n times from a 2x2 seed anchored at
// the origin, checking that successive windows nest. Throws when they do not.
AnchoredPatch generate_fixed_patch(const Morphism2D& m, const Word2D& seed, int n);

// One application of the morphism to an anchored patch, keeping the image of
// the cell at (0,0) anchored at the origin.
AnchoredPatch apply_anchored(const Morphism2D& m, const AnchoredPatch& p);

} // namespace wangweave

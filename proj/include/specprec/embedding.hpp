#ifndef SPECPREC_EMBEDDING_HPP
#define SPECPREC_EMBEDDING_HPP

#include "specprec/types.hpp"

#include <cmath>
#include <string>

namespace specprec {

/// Real block embedding of a complex Hermitian matrix f = R + iS:
///   [[ R,  S],
///    [-S,  R]].
/// Symmetric when f is Hermitian; its eigenvalues are those of f, doubled.
inline Matrix embed(const ComplexMatrix& f, double herm_tol = 1e-8) {
    if (f.rows() != f.cols()) {
        throw InputError("embed: matrix must be square");
    }
    double scale = std::max(1.0, f.cwiseAbs().maxCoeff());
    double dev = (f - f.adjoint().eval()).cwiseAbs().maxCoeff();
    if (dev > herm_tol * scale) {
        throw InputError("embed: input not Hermitian (deviation " +
                         std::to_string(dev) + ")");
    }
    const Eigen::Index p = f.rows();
    Matrix out(2 * p, 2 * p);
    Matrix re = f.real();
    Matrix im = f.imag();
    out.topLeftCorner(p, p) = re;
    out.topRightCorner(p, p) = im;
    out.bottomLeftCorner(p, p) = -im;
    out.bottomRightCorner(p, p) = re;
    return out;
}

/// Inverse of embed on block layout [[A1, B1], [B2, A2]]:
/// returns (A1 + A2)/2 + i (B1 - B2)/2.
inline ComplexMatrix reassemble(const Matrix& block) {
    if (block.rows() != block.cols() || block.rows() % 2 != 0) {
        throw InputError("reassemble: need an even-dimension square block");
    }
    const Eigen::Index p = block.rows() / 2;
    Matrix a = 0.5 * (block.topLeftCorner(p, p) + block.bottomRightCorner(p, p));
    Matrix b = 0.5 * (block.topRightCorner(p, p) - block.bottomLeftCorner(p, p));
    ComplexMatrix out(p, p);
    out.real() = a;
    out.imag() = b;
    return out;
}

/// Embed a whole spectral estimate, one 2p x 2p block per frequency.
inline RealEmbedding embed(const SpectralEstimate& est) {
    RealEmbedding emb;
    emb.grid = est.grid;
    emb.blocks.reserve(est.matrices.size());
    for (const ComplexMatrix& f : est.matrices) {
        emb.blocks.push_back(embed(f));
    }
    return emb;
}

/// Inverts Z two ways -- directly over the complexes, and through the
/// real block inversion of [[A, -B], [B, A]] for Z = A + iB followed by
/// reassembly -- and returns the max elementwise discrepancy. Guards the
/// sign convention between the two block layouts used in this library:
/// embed() stores [[Re, Im], [-Im, Re]], which is the lemma layout for
/// the conjugate; reassemble() undoes both consistently.
inline double lemma_roundtrip_check(const ComplexMatrix& Z,
                                    double rcond_min = 1e-8) {
    if (Z.rows() != Z.cols()) {
        throw InputError("lemma_roundtrip_check: matrix must be square");
    }
    const Eigen::Index p = Z.rows();

    Eigen::JacobiSVD<ComplexMatrix> svd(Z);
    double smax = svd.singularValues()(0);
    double smin = svd.singularValues()(p - 1);
    if (!(smax > 0.0) || smin / smax < rcond_min) {
        throw NumericalError("lemma_roundtrip_check: matrix too ill-conditioned "
                             "(rcond " + std::to_string(smin / std::max(smax, 1e-300)) + ")");
    }

    ComplexMatrix direct = Z.fullPivLu().inverse();

    Matrix A = Z.real();
    Matrix B = Z.imag();
    Matrix block(2 * p, 2 * p);
    block.topLeftCorner(p, p) = A;
    block.topRightCorner(p, p) = -B;
    block.bottomLeftCorner(p, p) = B;
    block.bottomRightCorner(p, p) = A;
    Matrix block_inv = block.fullPivLu().inverse();
    // Lemma layout inverse is [[At, -Bt], [Bt, At]] for Z^{-1} = At + i Bt;
    // flip the off-diagonal sign to reuse reassemble's convention.
    Matrix flipped = block_inv;
    flipped.topRightCorner(p, p) = -block_inv.topRightCorner(p, p);
    flipped.bottomLeftCorner(p, p) = -block_inv.bottomLeftCorner(p, p);
    ComplexMatrix via_real = reassemble(flipped);

    return (direct - via_real).cwiseAbs().maxCoeff();
}

}  // namespace specprec

#endif  // SPECPREC_EMBEDDING_HPP
